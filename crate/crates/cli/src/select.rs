use std::fmt::Write as _;

use sectsqrt::params::{select_params, ParamSelection};

use crate::config::ExperimentConfig;
use crate::error::{CliError, Result};

/// Accuracies below this are out of reach in double precision.
pub const MIN_REACHABLE_EPS: f64 = 1e-15;

/// Smallest n in the configured range whose predicted error is at most ε.
pub fn find_order(cfg: &ExperimentConfig) -> Result<ParamSelection> {
    cfg.validate()?;
    let eps = cfg.eps.expect("validated");
    if eps < MIN_REACHABLE_EPS {
        return Err(CliError::config(format!(
            "eps={eps:e} is unreachable: below {MIN_REACHABLE_EPS:e}"
        )));
    }
    let beta = cfg.beta.unwrap_or(0.0);
    for n in cfg.n_range.iter() {
        let sel = select_params(n, beta, cfg.rho_n, cfg.k)?;
        if sel.predicted_error <= eps {
            return Ok(sel);
        }
    }
    Err(CliError::Numerical(sectsqrt::Error::NoConvergence {
        method: "order search",
        iterations: cfg.n_range.end,
    }))
}

pub fn run_select(cfg: &ExperimentConfig) -> Result<String> {
    let sel = find_order(cfg)?;
    let mut out = String::new();
    let _ = writeln!(out, "# {}", cfg.describe());
    let _ = writeln!(out, "n={}", sel.n);
    let _ = writeln!(out, "tau={:.6e}", sel.tau);
    let _ = writeln!(out, "regime={}", sel.regime);
    let _ = writeln!(out, "rho_hat={:.6e}", sel.rho_hat);
    match sel.n_bar {
        Some(nb) => {
            let _ = writeln!(out, "n_bar={nb:.6e}");
        }
        None => {
            let _ = writeln!(out, "n_bar=none");
        }
    }
    let _ = writeln!(out, "predicted_error={:.6e}", sel.predicted_error);
    let _ = writeln!(out, "K={:.6e}", sel.crouzeix_k);
    Ok(out)
}
