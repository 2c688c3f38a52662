//! Regenerates the fixture files from the oracles.

use crate::commands;
use crate::config::RunConfig;
use crate::report::Report;
use anyhow::{Context, Result};
use serde_json::Value;
use std::path::Path;

type Runner = fn(&RunConfig, &mut Report) -> Result<()>;

fn fixtures(base: &RunConfig) -> Vec<(String, RunConfig, Runner)> {
    let with = |d: usize, q: u32| RunConfig { d, q: vec![q], mu: None, exponents: None, m: 0, n: 1, verify_generators: 0, ..base.clone() };
    let mut out: Vec<(String, RunConfig, Runner)> = Vec::new();
    for (d, q) in [(2, 3), (2, 5), (4, 3)] {
        out.push((format!("census_d{d}_q{q}.json"), with(d, q), commands::census));
    }
    for d in [2, 4] {
        out.push((format!("admissible_d{d}.json"), with(d, 3), commands::admissible_set));
        out.push((format!("bernstein_d{d}.json"), with(d, 3), commands::bernstein));
    }
    out
}

/// Writes every fixture into `dir` and returns the file names.
pub fn regen(base: &RunConfig, dir: &Path) -> Result<Vec<String>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut names = Vec::new();
    for (name, cfg, run) in fixtures(base) {
        let mut report = Report::new(&name, Value::Null);
        run(&cfg, &mut report)?;
        anyhow::ensure!(report.passed(), "oracle checks failed while generating {name}");
        let text = serde_json::to_string_pretty(&report.data)? + "\n";
        std::fs::write(dir.join(&name), text).with_context(|| format!("writing {name}"))?;
        names.push(name);
    }
    Ok(names)
}
