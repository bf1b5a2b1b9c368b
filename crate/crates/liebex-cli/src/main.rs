use clap::Parser;

use liebex_cli::{run, Cli, CliError};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(CliError::Domain(message)) => {
            print!("{message}");
            std::process::exit(1);
        }
        Err(CliError::Shape(message)) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
