//! Front end for the `singular-riemann` solver: TOML configs, the five
//! subcommands and their CSV / JSON output.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::io::Write;

pub use config::{emit_config, parse_config, ProblemConfig};
pub use error::{CliError, CliResult};
pub use output::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::Subcommand)]
pub enum Command {
    /// Solve and print metadata: structure type, Mach numbers, states, waves.
    Solve,
    /// Sample the solution on the configured grid.
    Profile,
    /// Stationary-wave Mach map over a Mach range.
    Curve,
    /// Critical Mach numbers and admissible sets.
    Critical,
    /// Structure atlas over inflow Mach numbers.
    Sweep,
}

impl Command {
    pub fn default_format(self) -> Format {
        match self {
            Command::Solve | Command::Critical => Format::Structured,
            _ => Format::Csv,
        }
    }
}

/// Runs one command and writes its output.
pub fn run<W: Write>(cmd: Command, cfg: &ProblemConfig, format: Format, seed: u64, out: W) -> CliResult<()> {
    use output::write_json;
    match (cmd, format) {
        (Command::Solve, Format::Structured) => write_json(out, &commands::solve_report(cfg)?.0),
        (Command::Solve, Format::Csv) => commands::solve_table(&commands::solve_report(cfg)?.0).write_csv(out),
        (Command::Profile, Format::Structured) => write_json(out, &commands::profile(cfg)?),
        (Command::Profile, Format::Csv) => commands::profile_table(&commands::profile(cfg)?).write_csv(out),
        (Command::Curve, Format::Structured) => write_json(out, &commands::curve(cfg)?),
        (Command::Curve, Format::Csv) => commands::curve_table(&commands::curve(cfg)?).write_csv(out),
        (Command::Critical, Format::Structured) => write_json(out, &commands::critical(cfg)?),
        (Command::Critical, Format::Csv) => commands::critical_table(&commands::critical(cfg)?).write_csv(out),
        (Command::Sweep, Format::Structured) => write_json(out, &commands::sweep(cfg, seed)?),
        (Command::Sweep, Format::Csv) => commands::sweep_table(&commands::sweep(cfg, seed)?).write_csv(out),
    }
}
