mod args;
mod commands;
mod error;
mod matrix_file;
mod rings;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers as usize;
    let result = match &cli.command {
        Command::Det(a) => commands::det(a, workers),
        Command::Check(a) => commands::check(a, workers),
        Command::Bench(a) => commands::bench_cmd(a, cli.seed, workers),
        Command::Search(a) => commands::search(a, cli.seed, workers),
        Command::Suite(a) => commands::suite(a, cli.seed, workers),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(outcome.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(outcome.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
