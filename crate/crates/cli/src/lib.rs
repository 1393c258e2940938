//! File formats, shipped fixtures and the command-line driver for the
//! `crossed-hopf` verifier.

pub mod commands;
pub mod fixtures;
pub mod format;
pub mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;

use commands::{run_command, Command, Options};
use output::ReportMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Switch {
    On,
    Off,
}

/// Verify finite-type crossed Hopf group algebras exactly.
#[derive(Debug, Parser)]
#[command(name = "crossed-hopf", version)]
pub struct Cli {
    /// What to check.
    #[arg(value_enum)]
    pub command: Command,
    /// Structure file (JSON).
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportMode,
    /// Also require conjugation to commute with the antipode.
    #[arg(long, value_enum, default_value = "on")]
    pub strict_phi_antipode: Switch,
    /// Test family to quantify over; defaults to the first declared family.
    #[arg(long)]
    pub family: Option<String>,
}

/// Exit status with the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn input_failure(stderr: String) -> RunResult {
    RunResult { code: 2, stdout: String::new(), stderr }
}

/// Runs the driver in-process. Exit 0 when every check passes, 1 when one
/// fails, 2 for usage, IO or parse errors.
pub fn run<I, T>(args: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                RunResult { code, stdout: text, stderr: String::new() }
            } else {
                input_failure(text)
            };
        }
    };
    let text = match std::fs::read_to_string(&cli.file) {
        Ok(t) => t,
        Err(e) => return input_failure(format!("error: cannot read {}: {e}\n", cli.file.display())),
    };
    let file = match format::parse_structure_file(&text) {
        Ok(f) => f,
        Err(diags) => {
            let mut err = String::new();
            for d in diags {
                err.push_str(&format!("{}:{d}\n", cli.file.display()));
            }
            return input_failure(err);
        }
    };
    let opts = Options { strict_phi_antipode: cli.strict_phi_antipode == Switch::On, family: cli.family.clone() };
    match run_command(cli.command, &file, &opts) {
        Ok(out) => RunResult { code: out.exit_code(), stdout: out.render(cli.report), stderr: String::new() },
        Err(e) => input_failure(format!("error: {e}\n")),
    }
}
