//! `kroc`: evaluate continuous-score binary classifiers through paired
//! ROC / Kolmogorov-Smirnov curves.
//!
//! Exit codes: 0 ok, 2 parse or parameter error, 3 degenerate data,
//! 4 usage error.

mod io;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kroc::{
    average_ks_curves, build_ks, gen_binormal, gen_ideal, gen_random, project_average_to_roc,
    reorder_for_max_ks, BinormalSpec, EvalError, KsCurve, LabeledSample,
};

#[derive(Parser)]
#[command(
    name = "kroc",
    version,
    about = "ROC / Kolmogorov-Smirnov evaluation for binary classifier scores"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a scored dataset: areas, point metrics, and both curves.
    Eval {
        /// CSV file with header "score,label" (label 1 = target class).
        input: PathBuf,
        /// Also write both curve polylines as CSV to this path.
        #[arg(long)]
        curves: Option<PathBuf>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Average fold KS curves at fixed quantiles and project to ROC.
    Average {
        /// Two or more fold files in the ingestion schema.
        inputs: Vec<PathBuf>,
        /// Number of quantiles, endpoints included.
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
    /// Emit the KS-maximizing segment reordering table for a variable.
    Reorder {
        /// CSV file; scores are the variable's values.
        input: PathBuf,
    },
    /// Generate a synthetic dataset in the ingestion schema.
    Synth {
        #[command(subcommand)]
        kind: SynthKind,
    },
}

#[derive(Args)]
struct SynthCommon {
    /// Seed for the deterministic generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum SynthKind {
    /// Perfect separation: all targets score above all complements.
    Ideal {
        n: u64,
        n_target: u64,
        #[command(flatten)]
        common: SynthCommon,
    },
    /// Uniformly shuffled labels over distinct scores.
    Random {
        n: u64,
        n_target: u64,
        #[command(flatten)]
        common: SynthCommon,
    },
    /// Two-Gaussian scores: targets at Normal(separation, 1),
    /// complements at Normal(0, 1).
    Binormal {
        n: u64,
        prevalence: f64,
        separation: f64,
        #[command(flatten)]
        common: SynthCommon,
    },
}

/// Error carrying the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn new(message: String, code: u8) -> Self {
        CliError { message, code }
    }

    pub fn parse(message: String) -> Self {
        Self::new(message, 2)
    }

    pub fn usage(message: String) -> Self {
        Self::new(message, 4)
    }

    pub fn io(message: String) -> Self {
        Self::new(message, 1)
    }
}

impl From<EvalError> for CliError {
    fn from(err: EvalError) -> Self {
        let code = match err {
            EvalError::EmptySample(_)
            | EvalError::SingleClassSample { .. }
            | EvalError::DegeneratePrevalence(_) => 3,
            EvalError::NonFiniteScore { .. } | EvalError::InvalidParameter(_) => 2,
            EvalError::InsufficientFolds(_) => 4,
        };
        CliError::new(err.to_string(), code)
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            // The downstream consumer closed the pipe; leave quietly.
            return CliError::new(String::new(), 0);
        }
        CliError::io(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are not errors; everything else is usage.
            let code = if err.use_stderr() { 4 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !err.message.is_empty() {
                eprintln!("error: {}", err.message);
            }
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Eval { input, curves, out } => cmd_eval(&input, curves, out),
        Command::Average { inputs, grid } => cmd_average(&inputs, grid),
        Command::Reorder { input } => cmd_reorder(&input),
        Command::Synth { kind } => cmd_synth(kind),
    }
}

fn cmd_eval(
    input: &Path,
    curves: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let sample = io::read_sample(input)?;
    let evaluation = report::evaluate(&sample)?;

    if let Some(path) = curves {
        let mut writer = io::create_file(&path)?;
        write_curves_csv(&mut writer, &evaluation)?;
        writer.flush()?;
    }

    let json = serde_json::to_string_pretty(&evaluation.report)
        .expect("report serialization cannot fail");
    match out {
        Some(path) => {
            let mut writer = io::create_file(&path)?;
            writeln!(writer, "{json}")?;
            writer.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            writeln!(out, "{json}")?;
        }
    }
    Ok(())
}

fn write_curves_csv<W: Write>(
    writer: &mut W,
    evaluation: &report::Evaluation,
) -> std::io::Result<()> {
    writeln!(writer, "curve,rank,x,y")?;
    for vtx in evaluation.roc.vertices() {
        writeln!(writer, "roc,{},{},{}", vtx.rank, vtx.u, vtx.v)?;
    }
    for vtx in evaluation.ks.vertices() {
        writeln!(writer, "ks,{},{},{}", vtx.rank, vtx.x, vtx.y)?;
    }
    Ok(())
}

fn cmd_average(inputs: &[PathBuf], grid: usize) -> Result<(), CliError> {
    if inputs.len() < 2 {
        return Err(CliError::usage(format!(
            "average needs at least 2 input files, got {}",
            inputs.len()
        )));
    }
    let mut folds: Vec<KsCurve> = Vec::with_capacity(inputs.len());
    for path in inputs {
        let sample = io::read_sample(path)?;
        folds.push(build_ks(&sample)?);
    }
    let avg = average_ks_curves(&folds, grid)?;
    let band = project_average_to_roc(&avg)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "x,mean_y,stderr_y,u,v,du,dv")?;
    for j in 0..avg.grid.len() {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            avg.grid[j],
            avg.mean_y[j],
            avg.stderr_y[j],
            band.u[j],
            band.v[j],
            band.du[j],
            band.dv[j]
        )?;
    }
    Ok(())
}

fn cmd_reorder(input: &Path) -> Result<(), CliError> {
    let sample = io::read_sample(input)?;
    let reordering = reorder_for_max_ks(&sample)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "value_low,value_high,new_position")?;
    for band in &reordering.bands {
        writeln!(
            out,
            "{},{},{}",
            band.value_low, band.value_high, band.new_position
        )?;
    }
    let footer = serde_json::json!({ "achieved_max_ks2": reordering.achieved_max_ks2 });
    writeln!(out, "{footer}")?;
    Ok(())
}

fn cmd_synth(kind: SynthKind) -> Result<(), CliError> {
    let (sample, common): (LabeledSample, SynthCommon) = match kind {
        SynthKind::Ideal { n, n_target, common } => (gen_ideal(n, n_target)?, common),
        SynthKind::Random { n, n_target, common } => {
            (gen_random(n, n_target, common.seed)?, common)
        }
        SynthKind::Binormal {
            n,
            prevalence,
            separation,
            common,
        } => {
            let spec = BinormalSpec::new(n, prevalence, separation, common.seed)?;
            (gen_binormal(&spec), common)
        }
    };
    match &common.out {
        Some(path) => {
            let mut writer = io::create_file(path)?;
            io::write_sample(&mut writer, &sample)?;
            writer.flush()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            io::write_sample(&mut out, &sample)?;
        }
    }
    Ok(())
}
