use std::io::Write;
use std::process::ExitCode;

use cayley_cli::app::{run, SEED_ENV};

fn main() -> ExitCode {
    let out = run(std::env::args_os(), std::env::var(SEED_ENV).ok());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
