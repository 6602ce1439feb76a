use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wbanzhaf_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, code) = match run(&cli) {
        Ok(out) => (out, 0),
        Err(CliError::Verification { report, failed }) => {
            eprintln!("error: {failed} identities failed verification");
            (report, 5)
        }
        Err(err) => {
            let line = err.to_string().replace('\n', " ");
            eprintln!("error: {line}");
            (String::new(), err.exit_code())
        }
    };
    let mut handle = std::io::stdout().lock();
    if handle.write_all(stdout.as_bytes()).and_then(|_| handle.flush()).is_err() {
        return ExitCode::from(4);
    }
    ExitCode::from(code as u8)
}
