use clap::Parser;
use ncpspec_cli::{run, Cli, RunConfig};

fn main() {
    let cli = Cli::parse();
    let result = RunConfig::from_command(cli.command).and_then(|config| run(&config));
    if let Err(e) = result {
        eprintln!("ncpspec: {e}");
        std::process::exit(e.exit_code());
    }
}
