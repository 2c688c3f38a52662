//! `localmodel` command-line driver.
//!
//! Exit status: 0 when every check passes, 1 on a failed check, 2 on a
//! usage error and 3 when a budget is exceeded.

mod commands;
mod config;
mod golden;
mod report;

use anyhow::Result;
use clap::Parser;
use config::{Command, Flags, Format, RunConfig};
use report::{emit, Report};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "localmodel", version, about = "Local models, Schubert cells and Iwahori-Hecke algebras of GU_d")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    flags: Flags,
    /// Regenerate the golden fixtures into DIR and exit
    #[arg(long, value_name = "DIR", env = "LOCALMODEL_REGEN_GOLDEN")]
    regen_golden: Option<PathBuf>,
}

const USAGE: u8 = 2;
const CHECK: u8 = 1;
const BUDGET: u8 = 3;

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<localmodel::Error>() {
        Some(localmodel::Error::Budget(_)) => BUDGET,
        Some(localmodel::Error::InvalidInput(_) | localmodel::Error::InvalidField(_) | localmodel::Error::Dimension(_)) => USAGE,
        Some(_) => CHECK,
        None => USAGE,
    }
}

fn write_out(cfg: &RunConfig, text: &str) -> Result<()> {
    match &cfg.out {
        Some(p) => std::fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<bool> {
    if let Some(dir) = &cli.regen_golden {
        let names = golden::regen(cfg, dir)?;
        eprintln!("wrote {} fixtures to {}", names.len(), dir.display());
        return Ok(true);
    }
    let Some(command) = cli.command else {
        anyhow::bail!("a subcommand is required; see --help");
    };
    if command == Command::PointDump {
        let (text, ok) = commands::point_dump(cfg)?;
        write_out(cfg, &text)?;
        return Ok(ok);
    }
    let start = Instant::now();
    let mut report = Report::new(command.name(), serde_json::to_value(cfg)?);
    let runner = match command {
        Command::Census => commands::census,
        Command::Admissible => commands::admissible_set,
        Command::Bernstein => commands::bernstein,
        Command::CenterCheck => commands::center_check,
        Command::FitParams => commands::fit_params,
        Command::CrossValidate => commands::cross_validate,
        Command::ClassifyForm => commands::classify_form,
        Command::UnitarizeDemo => commands::unitarize_demo,
        Command::PointDump => unreachable!(),
    };
    runner(cfg, &mut report)?;
    if cfg.timing {
        report.timing = Some(BTreeMap::from([("total".to_string(), start.elapsed().as_secs_f64())]));
    }
    if cfg.format == Format::Csv && command != Command::Census {
        anyhow::bail!("csv output is only available for census");
    }
    write_out(cfg, &emit(&report, cfg.format)?)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::resolve(&cli.flags) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(USAGE);
        }
    };
    if let Some(j) = cfg.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE);
        }
    }
    match run(&cli, &cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(CHECK),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
