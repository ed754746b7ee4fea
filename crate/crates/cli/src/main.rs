use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use bergman_cli::config::{parse_tol_override, RunConfig};
use bergman_cli::execute;
use bergman_cli::suites::Suite;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bergman", version, about = "Numerical verification for weighted meromorphic Bergman spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a CSV report.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    /// JSON file with run settings; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    alpha: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beta: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    #[arg(long)]
    nr: Option<usize>,
    #[arg(long)]
    ntheta: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    family_size: Option<usize>,
    #[arg(long)]
    scan_family_size: Option<usize>,
    /// CSV path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg_dir: Option<PathBuf>,
    /// `check_id=value`: pass iff margin >= -value for that check.
    #[arg(long = "tol-override", value_parser = parse_override)]
    tol_override: Vec<(String, f64)>,
    /// Write zero runtimes so repeated runs produce identical files.
    #[arg(long)]
    no_timing: bool,
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    parse_tol_override(s).map_err(|e| e.to_string())
}

fn build_config(args: &VerifyArgs) -> Result<RunConfig> {
    let mut c = match &args.config {
        Some(path) => RunConfig::from_json_file(path)?,
        None => RunConfig::default(),
    };
    if let Some(v) = &args.alpha {
        c.alpha = v.clone();
    }
    if let Some(v) = &args.beta {
        c.beta = v.clone();
    }
    if let Some(v) = &args.p {
        c.p = v.clone();
    }
    c.nr = args.nr.unwrap_or(c.nr);
    c.ntheta = args.ntheta.unwrap_or(c.ntheta);
    c.seed = args.seed.unwrap_or(c.seed);
    c.family_size = args.family_size.unwrap_or(c.family_size);
    c.scan_family_size = args.scan_family_size.unwrap_or(c.scan_family_size);
    if args.out.is_some() {
        c.out = args.out.clone();
    }
    if args.svg_dir.is_some() {
        c.svg_dir = args.svg_dir.clone();
    }
    c.tol_override.extend(args.tol_override.iter().cloned());
    c.no_timing |= args.no_timing;
    c.validate()?;
    Ok(c)
}

fn main() -> ExitCode {
    let Command::Verify(args) = Cli::parse().command;
    let config = match build_config(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    match execute(&config, args.suite, std::io::stdout().lock()) {
        Ok(summary) => {
            eprintln!(
                "{} checks, {} failed, {} informational",
                summary.total, summary.failed, summary.informational
            );
            if summary.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
