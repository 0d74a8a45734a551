//! Command-line front end for `chisq_mine`: scanning string files, generating
//! synthetic strings, encoding numeric series and running benchmarks.

pub mod args;
pub mod commands;
pub mod encode;
pub mod error;
pub mod io;
pub mod output;

use std::io::Write;

pub use args::Cli;
pub use error::CliError;

use args::Command;

pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Scan(a) => commands::run_scan(a, stdout),
        Command::Gen(a) => commands::run_gen(a),
        Command::Encode(a) => commands::run_encode(a, stdout),
        Command::Bench(a) => commands::run_bench_command(a, stdout),
        Command::Pvalue(a) => commands::run_pvalue(a, stdout),
    }
}
