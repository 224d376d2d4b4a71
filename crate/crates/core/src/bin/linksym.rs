use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use linksym::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
