use std::io::{self, Write};
use std::panic;
use std::process::ExitCode;

use clap::Parser;

use permroots_cli::{run, Request};

fn main() -> ExitCode {
    let request = Request::parse();
    let stdout = io::stdout();
    let outcome = panic::catch_unwind(|| {
        let mut lock = stdout.lock();
        let result = run(&request, &mut lock);
        let _ = lock.flush();
        result
    });
    match outcome {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e)) => {
            eprintln!("permroots: {e}");
            ExitCode::from(e.exit_code())
        }
        // Library assertions (integrality, self-checking root construction).
        Err(_) => ExitCode::from(5),
    }
}
