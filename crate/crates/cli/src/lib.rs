//! Library side of the `qkoszul` command: argument types, the three
//! commands and their report formats.

pub mod commands;
pub mod config;
pub mod report;

use std::path::Path;

pub use commands::{compute, sweep, verify, Refusal};
pub use config::{Check, Cli, Command, Format, RunConfig};
pub use report::{CheckResult, DegreeInfo, Report, RingInfo, SpecInfo, SweepReport};

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

/// Runs a parsed command. Configuration problems and regime refusals are
/// returned as errors and map to exit code 2.
pub fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let (text, code, output) = match &cli.command {
        Command::Compute(args) | Command::Verify(args) => {
            let cfg = RunConfig::from_args(args)?;
            let (report, code) = match &cli.command {
                Command::Compute(_) => compute(&cfg)?,
                _ => verify(&cfg)?,
            };
            (report.render(cfg.format), code, args.output.as_deref())
        }
        Command::Sweep(args) => {
            let (report, code) = sweep(args);
            (report.render(args.format), code, args.output.as_deref())
        }
    };
    if let Some(path) = output {
        write_output(path, &text)?;
    }
    Ok(Outcome { text, code })
}

fn write_output(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))
}
