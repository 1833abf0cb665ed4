use std::io::Write;
use std::process::ExitCode;

use toric_contact::cli;

fn main() -> ExitCode {
    if let Err(e) = cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(cli::EXIT_PARSE as u8);
    }
    let outcome = cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
