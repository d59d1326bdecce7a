use clap::Parser;
use std::path::PathBuf;
use surfsat::cli::{run, AnalysisRequest, Command, OutputFormat};

/// Saturation and affinisation analysis of open algebraic surfaces.
#[derive(Debug, Parser)]
#[command(name = "surfsat", version)]
struct Args {
    /// Analysis to run.
    #[arg(value_enum)]
    command: Command,
    /// Input JSON document.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Log progress to stderr.
    #[arg(long)]
    verbose: bool,
}

fn main() {
    let args = Args::parse();
    env_logger::Builder::new()
        .filter_level(if args.verbose { log::LevelFilter::Debug } else { log::LevelFilter::Warn })
        .init();
    let outcome = run(&AnalysisRequest { input: args.input, command: args.command, format: args.format });
    print!("{}", outcome.render(args.format));
    std::process::exit(outcome.status.code());
}
