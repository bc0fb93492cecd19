use std::process::ExitCode;

use clap::Parser;
use strongrecolor::cli::{run, Cli, CliError};
use strongrecolor::core::Error;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Core(Error::CapExceeded { .. }) = e {
                eprintln!("hint: raise --cap or STRONGRECOLOR_CAP to enumerate anyway");
            }
            e.exit_code()
        }
    }
}
