use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use singular_riemann_cli::{parse_config, run, CliError, CliResult, Command, Format};

#[derive(Debug, Parser)]
#[command(name = "singular-riemann", version, about = "Exact Riemann solver for Euler flow with a point source")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML problem description.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output file; standard output if absent.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Output format; `structured` is JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

fn execute(cli: &Cli) -> CliResult<()> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::validation("--config", "config path required"))?;
    let text = std::fs::read_to_string(path)?;
    let cfg = parse_config(&text)?;
    let format = cli.format.unwrap_or(cli.command.default_format());
    let mut out: Box<dyn Write> = match &cli.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    run(cli.command, &cfg, format, cli.seed, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let report = serde_json::to_string(&e.report()).unwrap_or_default();
            println!("{report}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
