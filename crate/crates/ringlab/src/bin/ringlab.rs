use clap::Parser;

fn main() {
    let cli = ringlab::cli::Cli::parse();
    std::process::exit(ringlab::cli::run(cli));
}
