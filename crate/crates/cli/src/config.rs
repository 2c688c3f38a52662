//! Run configuration merged from flags, `LOCALMODEL_*` variables and a key=value file.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Enumerate a window and partition its points into cells
    Census,
    /// Stream the canonical chains of a window as JSON lines
    PointDump,
    /// Admissible set of a cocharacter with lengths
    Admissible,
    /// Central element and trace element in the T-basis
    Bernstein,
    /// Centrality, characterization and trace normalization checks
    CenterCheck,
    /// Read parameter exponents off the cell sizes
    FitParams,
    /// Compare counted structure constants with the symbolic product
    CrossValidate,
    /// Isometry class of an integral hermitian Gram matrix
    ClassifyForm,
    /// Hensel unitarization of perturbed Iwahori elements
    UnitarizeDemo,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Census => "census",
            Command::PointDump => "point-dump",
            Command::Admissible => "admissible",
            Command::Bernstein => "bernstein",
            Command::CenterCheck => "center-check",
            Command::FitParams => "fit-params",
            Command::CrossValidate => "cross-validate",
            Command::ClassifyForm => "classify-form",
            Command::UnitarizeDemo => "unitarize-demo",
        }
    }
}

/// Flags shared by every subcommand. Unset values fall back to the config file, then defaults.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    #[arg(long, global = true, env = "LOCALMODEL_D")]
    pub d: Option<usize>,
    /// Prime, or comma separated primes for fit-params
    #[arg(long, global = true, env = "LOCALMODEL_Q")]
    pub q: Option<String>,
    #[arg(long, global = true, env = "LOCALMODEL_M")]
    pub m: Option<i32>,
    #[arg(long, global = true, env = "LOCALMODEL_N")]
    pub n: Option<i32>,
    /// Cocharacter as comma separated integers
    #[arg(long, global = true, env = "LOCALMODEL_MU", allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Parameter exponents per simple reflection, skipping the fit
    #[arg(long, global = true, env = "LOCALMODEL_EXPONENTS")]
    pub exponents: Option<String>,
    #[arg(long, global = true, env = "LOCALMODEL_SEED")]
    pub seed: Option<u64>,
    #[arg(long, global = true, env = "LOCALMODEL_BUDGET")]
    pub budget: Option<u128>,
    #[arg(long, global = true, env = "LOCALMODEL_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long, global = true, env = "LOCALMODEL_FORMAT")]
    pub format: Option<Format>,
    #[arg(long, global = true, env = "LOCALMODEL_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "LOCALMODEL_CONFIG")]
    pub config: Option<PathBuf>,
    /// Sample K Iwahori generators and count their orbits inside each cell
    #[arg(long, global = true, env = "LOCALMODEL_VERIFY_GENERATORS")]
    pub verify_generators: Option<usize>,
    /// Truncation height for unitarize-demo
    #[arg(long, global = true, env = "LOCALMODEL_HEIGHT")]
    pub height: Option<usize>,
    /// Number of random inputs for unitarize-demo
    #[arg(long, global = true, env = "LOCALMODEL_COUNT")]
    pub count: Option<usize>,
    /// Integral Gram matrix as JSON, e.g. [[0,1],[1,0]]
    #[arg(long, global = true, env = "LOCALMODEL_GRAM")]
    pub gram: Option<String>,
    /// Add wall-clock timings to the report
    #[arg(long, global = true, env = "LOCALMODEL_TIMING")]
    pub timing: bool,
}

/// Fully resolved configuration.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub d: usize,
    pub q: Vec<u32>,
    pub m: i32,
    pub n: i32,
    pub mu: Option<Vec<i32>>,
    pub exponents: Option<Vec<u32>>,
    pub seed: u64,
    pub budget: u128,
    pub verify_generators: usize,
    pub height: usize,
    pub count: usize,
    pub gram: Option<Vec<Vec<i64>>>,
    #[serde(skip)]
    pub jobs: Option<usize>,
    #[serde(skip)]
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timing: bool,
}

fn parse_file(path: &PathBuf) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| anyhow!("{}:{}: expected key=value", path.display(), i + 1))?;
        out.insert(k.trim().replace('_', "-"), v.trim().to_string());
    }
    Ok(out)
}

fn list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',').map(|x| x.trim().parse::<T>().map_err(|_| anyhow!("cannot parse {x:?} in {s:?}"))).collect()
}

impl RunConfig {
    pub fn resolve(flags: &Flags) -> Result<RunConfig> {
        let file = match &flags.config {
            Some(p) => parse_file(p)?,
            None => BTreeMap::new(),
        };
        const KEYS: [&str; 15] = [
            "d", "q", "m", "n", "mu", "exponents", "seed", "budget", "jobs", "format", "out", "verify-generators", "height", "count", "gram",
        ];
        if let Some(k) = file.keys().find(|k| !KEYS.contains(&k.as_str()) && k.as_str() != "timing") {
            bail!("unknown config key {k:?}");
        }
        fn pick<T: std::str::FromStr>(flag: Option<T>, file: &BTreeMap<String, String>, key: &str) -> Result<Option<T>> {
            match flag {
                Some(v) => Ok(Some(v)),
                None => file.get(key).map(|s| s.parse::<T>().map_err(|_| anyhow!("config key {key}: cannot parse {s:?}"))).transpose(),
            }
        }
        let d = pick(flags.d, &file, "d")?.unwrap_or(2);
        let q = list::<u32>(&pick(flags.q.clone(), &file, "q")?.unwrap_or_else(|| "3".into()))?;
        let mu = pick(flags.mu.clone(), &file, "mu")?.map(|s| list::<i32>(&s)).transpose()?;
        let exponents = pick(flags.exponents.clone(), &file, "exponents")?.map(|s| list::<u32>(&s)).transpose()?;
        let gram = pick(flags.gram.clone(), &file, "gram")?
            .map(|s| serde_json::from_str::<Vec<Vec<i64>>>(&s).context("gram must be a JSON integer matrix"))
            .transpose()?;
        let format = match flags.format {
            Some(f) => f,
            None => match file.get("format") {
                Some(s) => Format::from_str(s, true).map_err(|e| anyhow!("config key format: {e}"))?,
                None => Format::Json,
            },
        };
        let cfg = RunConfig {
            d,
            q,
            m: pick(flags.m, &file, "m")?.unwrap_or(0),
            n: pick(flags.n, &file, "n")?.unwrap_or(1),
            mu,
            exponents,
            seed: pick(flags.seed, &file, "seed")?.unwrap_or(1),
            budget: pick(flags.budget, &file, "budget")?.unwrap_or(1 << 26),
            verify_generators: pick(flags.verify_generators, &file, "verify-generators")?.unwrap_or(0),
            height: pick(flags.height, &file, "height")?.unwrap_or(4),
            count: pick(flags.count, &file, "count")?.unwrap_or(100),
            gram,
            jobs: pick(flags.jobs, &file, "jobs")?,
            format,
            out: pick(flags.out.clone(), &file, "out")?,
            timing: flags.timing || file.get("timing").is_some_and(|v| v == "true"),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.d < 2 || self.d % 2 == 1 {
            bail!("d = {} must be even and at least 2", self.d);
        }
        if self.q.is_empty() || self.q.iter().any(|&q| q == 2 || !localmodel::gfring::field::is_prime(q)) {
            bail!("q must list odd primes, got {:?}", self.q);
        }
        if self.m < 0 || self.n < 0 {
            bail!("m and n must be natural numbers");
        }
        if self.budget == 0 || self.count == 0 || self.height == 0 {
            bail!("budget, count and height must be positive");
        }
        if self.jobs == Some(0) {
            bail!("jobs must be positive");
        }
        Ok(())
    }

    pub fn q(&self) -> u32 {
        self.q[0]
    }
}
