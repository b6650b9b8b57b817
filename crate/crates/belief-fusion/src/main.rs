use std::process::exit;

use clap::error::ErrorKind;
use clap::Parser;

use belief_fusion::cli::{exit_code, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            exit(code);
        }
    };
    if let Err(err) = cli.run() {
        eprintln!("error: {err}");
        exit(exit_code(&err));
    }
}
