use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod commands;

use commands::{Cli, Failure};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let json = cli.json;
    let mut out = std::io::stdout().lock();
    match commands::run(cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(Failure { kind, message }) => {
            let _ = out.flush();
            if json {
                eprintln!("{}", serde_json::json!({ "error": kind, "message": message }));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(1)
        }
    }
}
