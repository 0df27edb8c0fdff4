use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = arank_cli::run::Cli::parse();
    match arank_cli::run::run(cli) {
        Ok(out) => {
            for n in &out.notices {
                eprintln!("{n}");
            }
            print!("{}", out.text);
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
