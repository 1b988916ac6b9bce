mod cli;
mod commands;
mod output;
mod source;

use std::process::ExitCode;

use clap::Parser;
use fracspec::Config;

use cli::{Cli, Command};
use output::Sink;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    VerificationFailed = 1,
    Usage = 2,
    NotInvertible = 3,
}

fn configure_threads() {
    if let Some(n) = std::env::var("FS_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    let cfg = Config {
        target_abs_error: cli.target_error,
        max_terms: cli.max_terms,
        line_grid_step: cli.grid_step,
    };
    cfg.validate()?;
    let sink = Sink::new(cli.format, cli.output);
    match cli.command {
        Command::Zeta { s } => commands::zeta(&s, &cfg, &sink),
        Command::Zeros { t_min, t_max } => commands::zeros(t_min, t_max, &cfg, &sink),
        Command::String { source, action } => commands::string(&source, action, &sink),
        Command::Spectral { source, action } => commands::spectral(&source, action, &cfg, &sink),
        Command::Op { action } => commands::op(action, &cfg, &sink),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Status::Usage as u8)
        }
    }
}
