use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use gcm_cli::{configure_threads, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli));
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::VerifyFailed { report, .. } = &e {
                let _ = stdout.write_all(report.as_bytes());
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
