use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use property_lab::{analyze, classes, load, monotone_check, verify, witness, LabError, Mode, VerifyConfig};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "property-lab", version, about = "Sensitivity of graph properties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sensitivity, block sensitivity and structure of one property.
    Analyze(PropertyArgs),
    /// Minimum sensitivity over all or sampled properties on n vertices.
    Verify(VerifyArgs),
    /// Extract a high-sensitivity witness with its traces.
    Witness(PropertyArgs),
    /// List isomorphism classes of graphs on n vertices.
    Classes(CommonArgs),
    /// Check s(f) ≥ n − 1 for the monotone builtins.
    MonotoneCheck(CommonArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PropertyArgs {
    /// Builtin property name.
    #[arg(long)]
    property: Option<String>,
    /// Truth-table (GPTT) or class-set JSON file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// exhaustive or sample
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    count: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, env = "PROPERTY_LAB_JOBS", default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    out: Output,
}

fn emit<T: Serialize>(out: &Output, value: &T, text: impl FnOnce() -> String) -> Result<(), LabError> {
    let body = match out.format {
        Format::Json => serde_json::to_string_pretty(value).expect("plain data") + "\n",
        Format::Text => text(),
    };
    match &out.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| LabError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            // a closed pipe is not worth an error
            let _ = std::io::stdout().write_all(body.as_bytes());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), LabError> {
    match cli.command {
        Command::Analyze(a) => {
            let p = load(a.property.as_deref(), a.input.as_deref(), a.n)?;
            let report = analyze(&p)?;
            emit(&a.out, &report, || report.to_text())
        }
        Command::Witness(a) => {
            let p = load(a.property.as_deref(), a.input.as_deref(), a.n)?;
            let report = witness(&p)?;
            emit(&a.out, &report, || report.to_text())
        }
        Command::Verify(a) => {
            let cfg = VerifyConfig {
                n: a.n,
                mode: a.mode.parse::<Mode>()?,
                seed: a.seed,
                count: a.count,
                jobs: a.jobs,
            };
            let report = verify(&cfg)?;
            emit(&a.out, &report, || report.to_text())?;
            if let Some(b) = report.asserted_violations().next() {
                return Err(LabError::BoundViolation(format!(
                    "{} bound {} fails with minimum s(f) = {}",
                    b.name, b.bound, report.min_sensitivity
                )));
            }
            Ok(())
        }
        Command::Classes(a) => {
            let listing = classes(a.n)?;
            emit(&a.out, &listing, || listing.to_text())
        }
        Command::MonotoneCheck(a) => {
            let report = monotone_check(a.n)?;
            emit(&a.out, &report, || report.to_text())?;
            if let Some(v) = report.violations().next() {
                return Err(LabError::BoundViolation(format!(
                    "{} has s(f) = {} < {}",
                    v.property,
                    v.sensitivity.unwrap_or(0),
                    report.bound
                )));
            }
            Ok(())
        }
    }
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
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("property-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
