use std::process::ExitCode;

use clap::Parser;

use quadnef::cli::{run, Cli};

fn main() -> ExitCode {
    let invocation: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    match run(cli, invocation) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {:#}", e.error());
            ExitCode::from(e.exit_code())
        }
    }
}
