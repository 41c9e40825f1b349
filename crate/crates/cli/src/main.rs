use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use kpsi_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let _ = writeln!(std::io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("kpsi: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
