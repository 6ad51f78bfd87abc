//! `offdiag`: entropy reports, sweeps, figure data and verification for
//! atomic structure factors.

mod config;
mod figures;
mod run;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{FileConfig, Overrides, Range, RunConfig, System, OUT_ENV};

#[derive(Debug, Parser)]
#[command(name = "offdiag", version, about = "Shannon entropies of atomic structure factors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// TOML configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    system: Option<System>,
    /// Nuclear charge.
    #[arg(long, global = true)]
    z: Option<f64>,
    /// Inclusive charge range `start:stop:step`.
    #[arg(long, global = true)]
    z_range: Option<Range>,
    /// Oscillator frequency.
    #[arg(long, global = true)]
    omega: Option<f64>,
    /// Inclusive frequency range `start:stop:step`.
    #[arg(long, global = true)]
    omega_range: Option<Range>,
    /// Output directory (overrides $OFFDIAG_OUT and the config file).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy report for one model.
    Report,
    /// One report row per member of a charge or frequency range.
    Sweep,
    /// CSV data for the figures.
    Curves {
        /// Figures to emit, e.g. `fig1,fig8`; all when omitted.
        #[arg(long, value_delimiter = ',')]
        figures: Vec<String>,
    },
    /// Run the verification checks; exit status is nonzero if any fails.
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: Cli) -> anyhow::Result<ExitCode> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let flags = Overrides {
        system: cli.system,
        z: cli.z,
        z_range: cli.z_range,
        omega: cli.omega,
        omega_range: cli.omega_range,
        out: cli.out,
        workers: cli.workers,
        tol: cli.tol,
    };
    let env_out = std::env::var_os(OUT_ENV).map(PathBuf::from);
    let cfg = RunConfig::resolve(file, flags, env_out)?;
    if let Some(n) = cfg.workers {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Report => run::report(&cfg),
        Command::Sweep => run::sweep(&cfg),
        Command::Curves { figures } => run::curves(&cfg, &figures),
        Command::Verify => run::verify(&cfg),
    }
}
