use clap::Parser;

use stirling_forge::cli::{execute, Cli};

fn main() {
    let outcome = execute(Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::process::exit(outcome.code);
}
