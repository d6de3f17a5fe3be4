use clap::Parser;

use jacobi_verma::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let out = run(&cli);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
