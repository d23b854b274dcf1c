use std::process::ExitCode;

use clap::Parser;
use qkoszul_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let to_stdout = match &cli.command {
        qkoszul_cli::Command::Compute(a) | qkoszul_cli::Command::Verify(a) => a.output.is_none(),
        qkoszul_cli::Command::Sweep(a) => a.output.is_none(),
    };
    match run(&cli) {
        Ok(outcome) => {
            if to_stdout {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
