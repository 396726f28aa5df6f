use std::process::ExitCode;

use syadfuzz::cli::{self, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match RunConfig::from_args(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    ExitCode::from(cli::run(&config) as u8)
}
