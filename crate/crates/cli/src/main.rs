//! `osc-trig`: run the stochastic trigonometric integrator and its
//! strong-error experiments from JSON run files.

mod check;
mod config;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use osctrig_core::lab::strong_error;
use osctrig_core::{generate_path, Method, StepScheme};

use crate::check::{quadrature_check, Family};
use crate::config::RunConfig;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) | CliError::Io(_) => 1,
        }
    }
}

/// Library errors raised while building a run are configuration problems;
/// everything else happens mid-computation.
fn classify(e: osctrig_core::Error) -> CliError {
    use osctrig_core::Error as E;
    match e {
        E::InvalidConfig(_)
        | E::InvalidParameter { .. }
        | E::InvalidWienerGrid(_)
        | E::InvalidCoarsening { .. }
        | E::ExactKernelUnavailable
        | E::Resonance { .. } => CliError::Config(e.to_string()),
        _ => CliError::Numerical(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "osc-trig", version, about = "Stochastic trigonometric integration of forced oscillators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integrate one sample path and write the trajectory as `t,x,v`.
    Integrate {
        config: PathBuf,
        /// Defaults to the first method in the run file.
        #[arg(long)]
        method: Option<Method>,
        /// Defaults to the first step size in the run file.
        #[arg(long)]
        h: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        sample: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo strong errors for every (method, h) in the run file.
    StrongError {
        config: PathBuf,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        omega: Option<f64>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long)]
        n_fine: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare Filon, Lobatto and trapezoid against closed forms.
    QuadratureCheck {
        #[arg(long)]
        k: f64,
        #[arg(long, default_value_t = 5)]
        nodes: usize,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        b: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Writes through a temporary file in the target directory so a failed run
/// never leaves a partial file behind.
fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match out {
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.persist(path).map_err(|e| io(e.error))?;
            Ok(())
        }
    }
}

fn integrate(
    config: &Path,
    method: Option<Method>,
    h: Option<f64>,
    seed: Option<u64>,
    sample: u64,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let run = RunConfig::load(config)?;
    let experiment = run.experiment()?;
    let method = method.unwrap_or(experiment.methods[0]);
    let h = h.unwrap_or(experiment.step_sizes[0]);
    let seed = seed.unwrap_or(experiment.seed);
    let factor = experiment.coarsening_factor(h).map_err(classify)?;
    let scheme = StepScheme::new(experiment.problem.clone(), h, method.kernel_mode(experiment.nodes))
        .map_err(classify)?;
    let path = generate_path(seed, sample, experiment.n_fine, experiment.problem.t_end()).map_err(classify)?;
    let increments = path.coarsen(factor).map_err(classify)?;
    let states = scheme.integrate(&increments).map_err(classify)?;
    let mut csv = String::from("t,x,v\n");
    for s in states {
        writeln!(csv, "{},{},{}", s.t, s.x, s.v).expect("writing to a String");
    }
    emit(out.as_deref().or(run.output_path()), &csv)
}

struct Overrides {
    samples: Option<usize>,
    seed: Option<u64>,
    omega: Option<f64>,
    epsilon: Option<f64>,
    n_fine: Option<usize>,
}

fn strong(config: &Path, o: Overrides, out: Option<PathBuf>) -> Result<(), CliError> {
    let mut run = RunConfig::load(config)?;
    if let Some(v) = o.samples {
        run.experiment.samples = v;
    }
    if let Some(v) = o.seed {
        run.experiment.seed = v;
    }
    if let Some(v) = o.omega {
        run.problem.omega = v;
    }
    if let Some(v) = o.epsilon {
        run.problem.epsilon = v;
    }
    if let Some(v) = o.n_fine {
        run.experiment.n_fine = v;
    }
    let experiment = run.experiment()?;
    let report = strong_error(&experiment).map_err(classify)?;
    if !report.failures.is_empty() {
        eprintln!("warning: {} sample(s) went non-finite and were excluded", report.failures.len());
    }
    if report.rows.iter().any(|r| r.samples == 0) {
        return Err(CliError::Numerical("every sample went non-finite".into()));
    }
    emit(out.as_deref().or(run.output_path()), &report.to_csv())
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var("OSC_TRIG_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Config(format!("OSC_TRIG_THREADS must be a nonnegative integer, got `{v}`")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Io(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Integrate { config, method, h, seed, sample, out } => {
            integrate(&config, method, h, seed, sample, out)
        }
        Command::StrongError { config, samples, seed, omega, epsilon, n_fine, out } => {
            let pool = thread_pool()?;
            pool.install(|| strong(&config, Overrides { samples, seed, omega, epsilon, n_fine }, out))
        }
        Command::QuadratureCheck { k, nodes, family, a, b, out } => {
            emit(out.as_deref(), &quadrature_check(family, k, nodes, a, b)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("osc-trig: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
