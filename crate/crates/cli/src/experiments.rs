use sectsqrt::errmodel::total_estimate;
use sectsqrt::opfun::{
    apply_approx, apply_half_power, exponent_grid, make_convection_diffusion, make_diag_sector,
    oracle_tridiag_toeplitz, spectral_error,
};
use sectsqrt::params::{
    bound_bounded, bound_unbounded, default_crouzeix, rho_hat, sector_constants, select_params,
    tau_unbounded, Regime,
};
use sectsqrt::rational::{build_general_alpha, build_half, eval_half};
use sectsqrt::Complex64;

use crate::config::ExperimentConfig;
use crate::csv::{num, Csv};
use crate::error::Result;

pub const FIG1_TAU: f64 = 2.0;
pub const FIG3_BETAS: [f64; 3] = [0.0, 1.0 / 3.0, 5.0 / 12.0];
pub const FIG7_BETAS: [f64; 3] = [1.0 / 6.0, 1.0 / 3.0, 5.0 / 12.0];
pub const FIG5_SPEEDS: [f64; 3] = [0.0, 30.0, 200.0];
pub const FIG5_POINTS: usize = 200;
pub const FIG8_ALPHAS: [f64; 3] = [0.5, 0.75, 0.9];
pub const FIG8_BETA: f64 = 1.0 / 6.0;
pub const TABLE1_BETA: f64 = 5.0 / 12.0;
pub const WIDE_EXPONENT_MAX: f64 = 16.0;
pub const TRUNCATED_RHO_N: f64 = 1e4;
pub const EXPONENT_STEP: f64 = 0.1;

pub fn fig1_points() -> [(&'static str, Complex64); 3] {
    [
        ("10", Complex64::new(10.0, 0.0)),
        ("5+5i", Complex64::new(5.0, 5.0)),
        ("-5+10i", Complex64::new(-5.0, 10.0)),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Row {
    pub n: usize,
    pub lambda: &'static str,
    pub measured: f64,
    pub estimate: f64,
}

pub fn fig1_rows(cfg: &ExperimentConfig) -> Result<Vec<Fig1Row>> {
    cfg.validate()?;
    let tau = cfg.tau_override.unwrap_or(FIG1_TAU);
    let mut rows = Vec::new();
    for n in cfg.n_range.iter() {
        let r = build_half(n, tau)?;
        for (label, lambda) in fig1_points() {
            let measured = (eval_half(&r, lambda)? - lambda.powf(-0.5)).norm();
            let estimate = total_estimate(lambda, tau, n)?.total;
            rows.push(Fig1Row {
                n,
                lambda: label,
                measured,
                estimate,
            });
        }
    }
    Ok(rows)
}

pub fn run_fig1(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(
        cfg.describe(),
        vec!["n", "lambda", "measured_error", "estimate"],
    );
    for r in fig1_rows(cfg)? {
        csv.push(vec![
            r.n.to_string(),
            r.lambda.into(),
            num(r.measured),
            num(r.estimate),
        ]);
    }
    Ok(csv)
}

fn betas(cfg: &ExperimentConfig, defaults: &[f64]) -> Vec<f64> {
    match cfg.beta {
        Some(b) => vec![b],
        None => defaults.to_vec(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRow {
    pub n: usize,
    pub beta: f64,
    pub error: f64,
    pub bound: f64,
}

/// Spectral error on the wide diagonal test matrix with τ̄.
pub fn fig3_rows(cfg: &ExperimentConfig) -> Result<Vec<SpectralRow>> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for beta in betas(cfg, &FIG3_BETAS) {
        let a = make_diag_sector(beta, &exponent_grid(WIDE_EXPONENT_MAX, EXPONENT_STEP))?;
        let geom = sector_constants(beta)?;
        let k = cfg.k.unwrap_or_else(|| default_crouzeix(beta));
        for n in cfg.n_range.iter() {
            let tau = match cfg.tau_override {
                Some(t) => t,
                None => tau_unbounded(n, &geom)?,
            };
            rows.push(SpectralRow {
                n,
                beta,
                error: spectral_error(&a, &build_half(n, tau)?)?,
                bound: bound_unbounded(n, &geom, k)?,
            });
        }
    }
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

pub fn run_fig3(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(cfg.describe(), vec!["n", "beta", "spectral_error", "bound"]);
    for r in fig3_rows(cfg)? {
        csv.push(vec![
            r.n.to_string(),
            num(r.beta),
            num(r.error),
            num(r.bound),
        ]);
    }
    Ok(csv)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub tau: f64,
    pub rho_hat: f64,
}

pub fn table1_rows(cfg: &ExperimentConfig) -> Result<Vec<TableRow>> {
    cfg.validate()?;
    let geom = sector_constants(cfg.beta.unwrap_or(TABLE1_BETA))?;
    cfg.n_range
        .iter()
        .map(|n| {
            Ok(TableRow {
                n,
                tau: tau_unbounded(n, &geom)?,
                rho_hat: rho_hat(n, &geom)?,
            })
        })
        .collect()
}

pub fn run_table1(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(cfg.describe(), vec!["n", "tau", "rho_hat"]);
    for r in table1_rows(cfg)? {
        csv.push(vec![r.n.to_string(), num(r.tau), num(r.rho_hat)]);
    }
    Ok(csv)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig7Row {
    pub n: usize,
    pub beta: f64,
    pub error: f64,
    pub bound: f64,
    pub regime: Regime,
    pub n_bar: f64,
}

/// Spectral error on the truncated diagonal matrix with the selected τ.
pub fn fig7_rows(cfg: &ExperimentConfig) -> Result<Vec<Fig7Row>> {
    cfg.validate()?;
    let rho_n = cfg.rho_n.unwrap_or(TRUNCATED_RHO_N);
    let mut rows = Vec::new();
    for beta in betas(cfg, &FIG7_BETAS) {
        let a = make_diag_sector(beta, &exponent_grid(rho_n.log10(), EXPONENT_STEP))?;
        let geom = sector_constants(beta)?.with_radius(rho_n)?;
        let n_bar = sectsqrt::params::n_bar(&geom)?;
        for n in cfg.n_range.iter() {
            let sel = select_params(n, beta, Some(rho_n), cfg.k)?;
            let tau = cfg.tau_override.unwrap_or(sel.tau);
            rows.push(Fig7Row {
                n,
                beta,
                error: spectral_error(&a, &build_half(n, tau)?)?,
                bound: bound_bounded(n, &geom)?,
                regime: sel.regime,
                n_bar,
            });
        }
    }
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

pub fn run_fig7(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(
        cfg.describe(),
        vec!["n", "beta", "error", "bound", "regime"],
    );
    for r in fig7_rows(cfg)? {
        csv.push(vec![
            r.n.to_string(),
            num(r.beta),
            num(r.error),
            num(r.bound),
            r.regime.to_string(),
        ]);
    }
    Ok(csv)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig5Row {
    pub n: usize,
    pub c: f64,
    pub error: f64,
    pub predicted: f64,
}

/// `‖A^{-1/2}v − result‖/‖v‖` for the convection-diffusion matrix and the
/// normalized all-ones vector.
pub fn fig5_rows(cfg: &ExperimentConfig) -> Result<Vec<Fig5Row>> {
    cfg.validate()?;
    let n_points = FIG5_POINTS;
    let v = vec![Complex64::new(1.0 / (n_points as f64).sqrt(), 0.0); n_points];
    let mut rows = Vec::new();
    for c in FIG5_SPEEDS {
        let a = make_convection_diffusion(n_points, c)?;
        let exact = oracle_tridiag_toeplitz(&a, &v, 0.5)?;
        let claim = *a.sector().expect("test matrix carries a sector claim");
        let mut geom = claim.geometry()?;
        if let Some(b) = cfg.beta {
            geom = sector_constants(b)?
                .with_vertex(claim.vertex)?
                .with_radius(claim.rho_n.unwrap_or(TRUNCATED_RHO_N))?;
        }
        for n in cfg.n_range.iter() {
            let rep = apply_half_power(&a, &v, n, &geom, cfg.k)?;
            let result = match cfg.tau_override {
                Some(t) => apply_approx(&a, &v, &build_half(n, t)?, geom.vertex)?,
                None => rep.result,
            };
            let error = result
                .iter()
                .zip(&exact)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            rows.push(Fig5Row {
                n,
                c,
                error,
                predicted: rep.predicted_error,
            });
        }
    }
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

pub fn run_fig5(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(cfg.describe(), vec!["n", "c", "error", "predicted"]);
    for r in fig5_rows(cfg)? {
        csv.push(vec![
            r.n.to_string(),
            num(r.c),
            num(r.error),
            num(r.predicted),
        ]);
    }
    Ok(csv)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig8Row {
    pub n: usize,
    pub alpha: f64,
    pub error: f64,
}

/// Spectral error of the general-α quadrature on the wide diagonal matrix,
/// with τ̄ from the α = 1/2 analysis.
pub fn fig8_rows(cfg: &ExperimentConfig) -> Result<Vec<Fig8Row>> {
    cfg.validate()?;
    let beta = cfg.beta.unwrap_or(FIG8_BETA);
    let a = make_diag_sector(beta, &exponent_grid(WIDE_EXPONENT_MAX, EXPONENT_STEP))?;
    let geom = sector_constants(beta)?;
    let alphas = match cfg.alpha {
        Some(al) => vec![al],
        None => FIG8_ALPHAS.to_vec(),
    };
    let mut rows = Vec::new();
    for alpha in alphas {
        for n in cfg.n_range.iter() {
            let tau = match cfg.tau_override {
                Some(t) => t,
                None => tau_unbounded(n, &geom)?,
            };
            rows.push(Fig8Row {
                n,
                alpha,
                error: spectral_error(&a, &build_general_alpha(n, tau, alpha)?)?,
            });
        }
    }
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

pub fn run_fig8(cfg: &ExperimentConfig) -> Result<Csv> {
    let mut csv = Csv::new(cfg.describe(), vec!["n", "alpha", "spectral_error"]);
    for r in fig8_rows(cfg)? {
        csv.push(vec![r.n.to_string(), num(r.alpha), num(r.error)]);
    }
    Ok(csv)
}
