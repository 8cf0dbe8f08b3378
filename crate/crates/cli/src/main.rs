use std::fs;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use tsid_cli::{execute, Cli, RunConfig};

fn run() -> anyhow::Result<u8> {
    let cfg = RunConfig::from_cli(Cli::parse())?;
    if let Some(threads) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let outcome = execute(&cfg)?;
    for w in &outcome.warnings {
        eprintln!("warning: {w}");
    }
    match &cfg.out {
        Some(path) => fs::write(path, &outcome.body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", outcome.body),
    }
    Ok(outcome.exit_code as u8)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
