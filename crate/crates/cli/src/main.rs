use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

mod commands;
mod config;
mod output;

use commands::{Report, Status, DEFAULT_DEPTH, DEFAULT_STATES};
use config::{ConfigError, RunConfig};
use output::Format;

/// Exactly solvable polynomial + Coulomb radial potentials: superpotential,
/// partner hierarchy and a shooting cross-check.
#[derive(Parser)]
#[command(name = "ces", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Superpotential, constraints, ground state and Riccati residual.
    Solve {
        #[command(flatten)]
        input: ConfigArgs,
    },
    /// Ladder of partner potentials with analytic (and numeric) energies.
    Hierarchy {
        #[command(flatten)]
        input: ConfigArgs,
        #[arg(long, value_name = "K")]
        depth: Option<usize>,
        /// Also shoot each member's ground state.
        #[arg(long)]
        numeric: bool,
    },
    /// Lowest bound states by RK4 shooting.
    Shoot {
        #[command(flatten)]
        input: ConfigArgs,
        #[arg(long, value_name = "K")]
        states: Option<usize>,
        /// Write `r,u` samples per state as CSV.
        #[arg(long, value_name = "PATH")]
        wf_out: Option<PathBuf>,
    },
    /// Regenerate a benchmark table and compare with the printed values.
    Reproduce {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        table: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    /// Print the effective configuration instead of running.
    #[arg(long)]
    dump_config: bool,
    #[command(flatten)]
    output: OutputArgs,
}

impl ConfigArgs {
    fn load(&self) -> Result<RunConfig> {
        let text = std::fs::read_to_string(&self.config)
            .with_context(|| format!("reading {}", self.config.display()))?;
        RunConfig::parse(&text).with_context(|| format!("in {}", self.config.display()))
    }
}

fn emit(output: &OutputArgs, body: &str) -> Result<()> {
    match &output.out {
        Some(path) => {
            std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    let (report, output) = match cli.command {
        Command::Solve { input } => {
            let cfg = input.load()?;
            if input.dump_config {
                (dump(&cfg), input.output)
            } else {
                (commands::solve(&cfg, input.output.format)?, input.output)
            }
        }
        Command::Hierarchy {
            input,
            depth,
            numeric,
        } => {
            let mut cfg = input.load()?;
            cfg.depth = depth.or(cfg.depth);
            if input.dump_config {
                (dump(&cfg), input.output)
            } else {
                let depth = cfg.depth.unwrap_or(DEFAULT_DEPTH);
                (
                    commands::hierarchy(&cfg, depth, numeric, input.output.format)?,
                    input.output,
                )
            }
        }
        Command::Shoot {
            input,
            states,
            wf_out,
        } => {
            let mut cfg = input.load()?;
            cfg.states = states.or(cfg.states);
            if input.dump_config {
                (dump(&cfg), input.output)
            } else {
                let states = cfg.states.unwrap_or(DEFAULT_STATES);
                let report = commands::shoot(&cfg, states, wf_out.as_deref(), input.output.format)?;
                (report, input.output)
            }
        }
        Command::Reproduce { table, output } => {
            (commands::reproduce(table, output.format)?, output)
        }
    };
    emit(&output, &report.body)?;
    Ok(report.status)
}

fn dump(cfg: &RunConfig) -> Report {
    Report {
        body: cfg.to_text(),
        status: Status::Ok,
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use ces_core::Error as E;
    if err.downcast_ref::<ConfigError>().is_some() || err.downcast_ref::<std::io::Error>().is_some()
    {
        return 1;
    }
    match err.downcast_ref::<E>() {
        Some(E::ConstraintsNotSatisfied(_)) => 2,
        Some(
            E::InvalidDegree(_)
            | E::NonConfining { .. }
            | E::NonFinite(_)
            | E::DepthExceeded { .. },
        )
        | Some(E::InvalidConfig(_)) => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
