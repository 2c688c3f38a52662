//! Reports and their JSON, CSV and text renderings.

use crate::config::Format;
use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub config: Value,
    pub verdicts: Vec<Verdict>,
    pub data: Value,
    pub digests: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<BTreeMap<String, f64>>,
}

pub fn sha256(v: &Value) -> String {
    hex::encode(Sha256::digest(v.to_string().as_bytes()))
}

impl Report {
    pub fn new(command: &str, config: Value) -> Report {
        Report {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config,
            verdicts: Vec::new(),
            data: Value::Null,
            digests: BTreeMap::new(),
            timing: None,
        }
    }

    pub fn check(&mut self, check: &str, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { check: check.into(), pass, detail: detail.into() });
    }

    pub fn set_data(&mut self, data: Value) {
        self.digests.insert("data".into(), sha256(&data));
        self.data = data;
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

fn csv_field(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

pub fn emit(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(report)? + "\n"),
        Format::Csv => {
            let Some(cells) = report.data.get("cells").and_then(Value::as_array) else {
                bail!("csv output is only available for census tables");
            };
            let mut out = String::from("word,gamma,size\n");
            for c in cells {
                let row: Vec<String> = ["word", "gamma", "size"].iter().map(|k| csv_field(&c[*k])).collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "{} (localmodel {})", report.command, report.version)?;
            for v in &report.verdicts {
                let mark = if v.pass { "PASS" } else { "FAIL" };
                if v.detail.is_empty() {
                    writeln!(out, "{mark}  {}", v.check)?;
                } else {
                    writeln!(out, "{mark}  {}: {}", v.check, v.detail)?;
                }
            }
            if let Some(cells) = report.data.get("cells").and_then(Value::as_array) {
                for c in cells {
                    writeln!(out, "  {:<16} gamma {:>2}  size {}", csv_field(&c["word"]), c["gamma"], c["size"])?;
                }
            }
            for (k, d) in &report.digests {
                writeln!(out, "digest {k} {d}")?;
            }
            if let Some(t) = &report.timing {
                for (k, s) in t {
                    writeln!(out, "time {k} {s:.3}s")?;
                }
            }
            let failed = report.verdicts.iter().filter(|v| !v.pass).count();
            writeln!(out, "{} checks, {failed} failed", report.verdicts.len())?;
            Ok(out)
        }
    }
}
