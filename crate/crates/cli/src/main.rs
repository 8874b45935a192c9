use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kempe::commands::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("kempe: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
