//! Experiment drivers and order selection for the `sectsqrt` command line
//! tool. Each experiment has a typed row function and a `run_*` wrapper that
//! renders the rows as CSV with a `#` configuration line.

pub mod config;
pub mod csv;
pub mod error;
pub mod experiments;
pub mod select;

pub use config::{Experiment, ExperimentConfig, NRange, SELECT_MAX_N};
pub use csv::Csv;
pub use error::{CliError, Result};
pub use experiments::{run_fig1, run_fig3, run_fig5, run_fig7, run_fig8, run_table1};
pub use select::{find_order, run_select, MIN_REACHABLE_EPS};

use std::io::Write;
use std::path::Path;

/// Render the selected experiment to text.
pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    Ok(match cfg.experiment {
        Experiment::Fig1 => run_fig1(cfg)?.render(),
        Experiment::Fig3 => run_fig3(cfg)?.render(),
        Experiment::Table1 => run_table1(cfg)?.render(),
        Experiment::Fig7 => run_fig7(cfg)?.render(),
        Experiment::Fig5 => run_fig5(cfg)?.render(),
        Experiment::Fig8 => run_fig8(cfg)?.render(),
        Experiment::Select => run_select(cfg)?,
    })
}

/// Write to `path`, or to stdout when `path` is `None`.
pub fn write_output(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}
