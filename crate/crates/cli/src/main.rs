use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use hurwitz_core::EnumerationBudget;

mod args;
mod commands;
mod output;

use args::{Cli, Command};
use commands::{CliError, Context, Outcome};

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = match cli.budget {
        Some(words) => EnumerationBudget::new(words)?,
        None => EnumerationBudget::default(),
    };
    let ctx = Context {
        format: cli.format,
        budget,
    };
    match &cli.command {
        Command::Hurwitz(a) => commands::cmd_hurwitz(&ctx, a),
        Command::Series(a) => commands::cmd_series(&ctx, a),
        Command::Verify(a) => commands::cmd_verify(&ctx, a),
        Command::Hodge(a) => commands::cmd_hodge(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            for note in &out.notes {
                eprintln!("note: {note}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(out.exit_code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
