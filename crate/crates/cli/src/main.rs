mod commands;
mod output;

use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::Duration;

use clap::Parser;

use commands::{Cli, Failure};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format();
    let timeout = cli.timeout_s;
    let (tx, rx) = mpsc::channel();
    thread::spawn(move || {
        let _ = tx.send(commands::run(&cli));
    });
    let result = match timeout {
        Some(s) => match rx.recv_timeout(Duration::from_secs(s)) {
            Ok(r) => r,
            Err(_) => {
                eprintln!("error: timed out after {s}s");
                return ExitCode::from(EXIT_LIMIT);
            }
        },
        None => rx.recv().expect("worker thread finished"),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = out.write(format, &mut stdout) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                let report = serde_json::json!({ "status": "fail", "failures": out.failures });
                eprintln!("{report}");
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_LIMIT)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
