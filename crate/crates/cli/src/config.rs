use std::fmt;
use std::path::PathBuf;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Experiment {
    Fig1,
    Fig3,
    Table1,
    Fig7,
    Fig5,
    Fig8,
    Select,
}

impl Experiment {
    pub fn name(self) -> &'static str {
        match self {
            Experiment::Fig1 => "fig1",
            Experiment::Fig3 => "fig3",
            Experiment::Table1 => "table1",
            Experiment::Fig7 => "fig7",
            Experiment::Fig5 => "fig5",
            Experiment::Fig8 => "fig8",
            Experiment::Select => "select",
        }
    }

    pub fn default_range(self) -> NRange {
        match self {
            Experiment::Fig1 => NRange::new(2, 100, 1),
            Experiment::Table1 => NRange::new(10, 100, 15),
            Experiment::Select => NRange::new(2, SELECT_MAX_N, 1),
            _ => NRange::new(5, 100, 5),
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest order the default `select` search visits.
pub const SELECT_MAX_N: usize = sectsqrt::gauss::MAX_ORDER;

/// Inclusive range `start, start+step, …, ≤ end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub start: usize,
    pub end: usize,
    pub step: usize,
}

impl NRange {
    pub const fn new(start: usize, end: usize, step: usize) -> Self {
        Self { start, end, step }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        (self.start..=self.end).step_by(self.step.max(1))
    }

    fn validate(&self, min_start: usize) -> Result<()> {
        if self.step == 0 {
            return Err(CliError::config("--n-step must be at least 1"));
        }
        if self.start < min_start {
            return Err(CliError::config(format!(
                "--n-min must be at least {min_start}, got {}",
                self.start
            )));
        }
        if self.end < self.start {
            return Err(CliError::config(format!(
                "empty n range {}..{}",
                self.start, self.end
            )));
        }
        if self.end > sectsqrt::gauss::MAX_ORDER {
            return Err(CliError::config(format!(
                "--n-max must not exceed {}",
                sectsqrt::gauss::MAX_ORDER
            )));
        }
        Ok(())
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}:{}", self.start, self.end, self.step)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    pub n_range: NRange,
    pub beta: Option<f64>,
    pub tau_override: Option<f64>,
    pub rho_n: Option<f64>,
    pub alpha: Option<f64>,
    pub k: Option<f64>,
    pub eps: Option<f64>,
    pub output_path: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(experiment: Experiment) -> Self {
        Self {
            experiment,
            n_range: experiment.default_range(),
            beta: None,
            tau_override: None,
            rho_n: None,
            alpha: None,
            k: None,
            eps: None,
            output_path: None,
        }
    }

    pub fn with_range(mut self, range: NRange) -> Self {
        self.n_range = range;
        self
    }

    pub fn with_beta(mut self, beta: f64) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let min_start = match self.experiment {
            Experiment::Fig1 => 1,
            _ => 2,
        };
        self.n_range.validate(min_start)?;
        if let Some(b) = self.beta {
            if !(0.0..0.5).contains(&b) {
                return Err(CliError::config(format!(
                    "--beta must lie in [0, 0.5), got {b}"
                )));
            }
        }
        positive("--tau", self.tau_override)?;
        positive("--rho-n", self.rho_n)?;
        positive("--eps", self.eps)?;
        if let Some(r) = self.rho_n {
            if r <= 1.0 {
                return Err(CliError::config(format!("--rho-n must exceed 1, got {r}")));
            }
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a < 1.0) {
                return Err(CliError::config(format!(
                    "--alpha must lie in (0, 1), got {a}"
                )));
            }
        }
        if let Some(k) = self.k {
            if !(k >= 1.0 && k.is_finite()) {
                return Err(CliError::config(format!("--K must be at least 1, got {k}")));
            }
        }
        if self.experiment == Experiment::Select && self.eps.is_none() {
            return Err(CliError::config("select needs --eps"));
        }
        Ok(())
    }

    /// Single-line summary for the `#` header of output files.
    pub fn describe(&self) -> String {
        let mut s = format!("experiment={} n={}", self.experiment, self.n_range);
        let opt = |s: &mut String, name: &str, v: Option<f64>| {
            if let Some(v) = v {
                s.push_str(&format!(" {name}={v:?}"));
            }
        };
        opt(&mut s, "beta", self.beta);
        opt(&mut s, "tau", self.tau_override);
        opt(&mut s, "rho_n", self.rho_n);
        opt(&mut s, "alpha", self.alpha);
        opt(&mut s, "K", self.k);
        opt(&mut s, "eps", self.eps);
        s
    }
}

fn positive(name: &str, v: Option<f64>) -> Result<()> {
    match v {
        Some(x) if !(x > 0.0 && x.is_finite()) => Err(CliError::config(format!(
            "{name} must be positive, got {x}"
        ))),
        _ => Ok(()),
    }
}
