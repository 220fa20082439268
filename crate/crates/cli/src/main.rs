use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sectsqrt::opfun::{apply_half_power, read_matrix_market, read_vector, SectorClaim};
use sectsqrt_cli::{run, write_output, CliError, Experiment, ExperimentConfig, NRange, Result};

#[derive(Parser)]
#[command(
    name = "sectsqrt",
    version,
    about = "Rational approximation of A^{-1/2} for sectorial matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scalar error and estimate at λ = 10, 5+5i, -5+10i
    Fig1(Common),
    /// Spectral error on the wide diagonal test matrix
    Fig3(Common),
    /// τ and ρ̂ for the unbounded regime
    Table1(Common),
    /// Spectral error on the truncated diagonal test matrix
    Fig7(Common),
    /// Convection-diffusion error against the eigen-oracle
    Fig5(Common),
    /// Spectral error for other fractional powers
    Fig8(Common),
    /// Smallest order meeting a target accuracy
    Select(Common),
    /// Apply the approximation to a vector read from disk
    Apply(ApplyArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    n_step: Option<usize>,
    #[arg(long)]
    tau: Option<f64>,
    #[arg(long)]
    rho_n: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(long)]
    eps: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ApplyArgs {
    /// Matrix Market coordinate file
    #[arg(long)]
    matrix: PathBuf,
    /// One "re [im]" entry per line
    #[arg(long)]
    vector: PathBuf,
    #[arg(long)]
    beta: f64,
    /// Smallest real point of the numerical range
    #[arg(long)]
    vertex: f64,
    /// Sector radius in units of the vertex
    #[arg(long)]
    rho_n: Option<f64>,
    #[arg(short)]
    n: usize,
    #[arg(long = "K")]
    k: Option<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

impl Common {
    fn into_config(self, experiment: Experiment) -> ExperimentConfig {
        let d = experiment.default_range();
        let range = NRange::new(
            self.n_min.unwrap_or(d.start),
            self.n_max.unwrap_or(d.end),
            self.n_step.unwrap_or(d.step),
        );
        let mut cfg = ExperimentConfig::new(experiment).with_range(range);
        cfg.beta = self.beta;
        cfg.tau_override = self.tau;
        cfg.rho_n = self.rho_n;
        cfg.alpha = self.alpha;
        cfg.k = self.k;
        cfg.eps = self.eps;
        cfg.output_path = self.output;
        cfg
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
}

fn run_apply(args: ApplyArgs) -> Result<()> {
    let a = read_matrix_market(open(&args.matrix)?)?;
    let v = read_vector(open(&args.vector)?)?;
    let claim = SectorClaim {
        beta: Some(args.beta),
        vertex: args.vertex,
        rho_n: args.rho_n,
    };
    let rep = apply_half_power(&a, &v, args.n, &claim.geometry()?, args.k)?;
    let mut text = format!(
        "# n={} tau={:.6e} regime={} predicted_error={:.6e} solves={}\n",
        rep.n, rep.tau, rep.regime, rep.predicted_error, rep.solve_count
    );
    let mut buf = Vec::new();
    sectsqrt::opfun::write_vector(&rep.result, &mut buf)?;
    text.push_str(&String::from_utf8_lossy(&buf));
    write_output(&text, args.output.as_deref())
}

fn dispatch(cli: Cli) -> Result<()> {
    let (experiment, common) = match cli.command {
        Command::Apply(args) => return run_apply(args),
        Command::Fig1(c) => (Experiment::Fig1, c),
        Command::Fig3(c) => (Experiment::Fig3, c),
        Command::Table1(c) => (Experiment::Table1, c),
        Command::Fig7(c) => (Experiment::Fig7, c),
        Command::Fig5(c) => (Experiment::Fig5, c),
        Command::Fig8(c) => (Experiment::Fig8, c),
        Command::Select(c) => (Experiment::Select, c),
    };
    let cfg = common.into_config(experiment);
    let text = run(&cfg)?;
    write_output(&text, cfg.output_path.as_deref())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sectsqrt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
