use std::io::Write;
use std::process::ExitCode;

use bipmap::cli::{execute, Cli};
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match execute(&cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("bipmap: some checks failed");
                ExitCode::from(1)
            }
        }
        Err(f) => {
            let (bipmap::cli::Failure::Usage(m) | bipmap::cli::Failure::Structural(m)) = &f;
            eprintln!("bipmap: {m}");
            ExitCode::from(f.code() as u8)
        }
    }
}
