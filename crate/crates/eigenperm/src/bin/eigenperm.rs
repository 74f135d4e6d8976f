use clap::Parser;

use eigenperm::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
