use clap::Parser;
use ssvis_cli::{cli, Cli};

fn main() {
    let args = Cli::parse();
    if let Err(e) = cli::run(&args) {
        eprintln!("ssvis: {e}");
        std::process::exit(e.exit_code());
    }
}
