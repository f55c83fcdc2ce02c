use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use sixsplit_cli::json::to_json;
use sixsplit_cli::render::View;
use sixsplit_cli::{commands, CliError, EXIT_BUG, EXIT_INVALID, EXIT_OK, EXIT_REJECTED};

#[derive(Parser)]
#[command(name = "sixsplit", version, about = "Split six points of the Riemann sphere into pairs by three disjoint discs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find and certify a split of six points.
    Split {
        /// Input document; stdin when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Output document; stdout when absent or `-`.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Margin a certificate must exceed, in radians.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Where to write the report if no split is found.
        #[arg(long, default_value = "sixsplit-bug-report.json")]
        bug_report: PathBuf,
    },
    /// Check a document with points, discs and a pairing.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Run a seeded campaign of random configurations.
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// One of `uniform`, `clustered`, `near-degenerate`.
        #[arg(long, default_value = "uniform")]
        sampler: String,
        /// Report path; stdout when absent.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Draw points and discs as a 1000×1000 SVG.
    Render {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = View::Plane)]
        view: View,
    },
}

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = fs::read_to_string(p).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(|e| CliError::Invalid(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|e| CliError::Invalid(format!("{}: {e}", p.display()))),
        _ => io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Internal(format!("stdout: {e}"))),
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Split { input, output, tolerance, bug_report } => {
            let text = read_input(input.as_deref())?;
            match commands::split(&text, tolerance) {
                Ok(doc) => {
                    write_output(output.as_deref(), &to_json(&doc))?;
                    Ok(EXIT_OK)
                }
                Err(CliError::Exhausted(report)) => {
                    fs::write(&bug_report, to_json(&report)).map_err(|e| CliError::Internal(e.to_string()))?;
                    eprintln!("bug report written to {}", bug_report.display());
                    Err(CliError::Exhausted(report))
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify { input } => {
            let report = commands::verify(&read_input(input.as_deref())?)?;
            write_output(None, &to_json(&report))?;
            Ok(if report.pass { EXIT_OK } else { EXIT_REJECTED })
        }
        Command::Fuzz { trials, seed, sampler, report } => {
            let r = commands::fuzz(trials, seed, &sampler)?;
            write_output(report.as_deref(), &to_json(&r))?;
            Ok(if r.failures.is_empty() { EXIT_OK } else { EXIT_BUG })
        }
        Command::Render { input, output, view } => {
            let svg = commands::render(&read_input(input.as_deref())?, view)?;
            write_output(output.as_deref(), &svg)?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INVALID as u8),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("sixsplit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
