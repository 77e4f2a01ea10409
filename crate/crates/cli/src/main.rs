use std::process::ExitCode;

use clap::Parser;
use pimtype_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.body);
            if !out.body.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("pimtype: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
