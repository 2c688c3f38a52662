//! Parameter exponents read off the cells `C_{sτ}` of the window `(0, 1)`.

use super::algebra::ParameterSystem;
use crate::error::{Error, Result};
use crate::latmodel::{cell_census, CensusOptions, ModelWindow};
use crate::weyl::GroupCtx;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FitCount {
    pub q: u32,
    pub simple: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParameterFit {
    pub params: ParameterSystem,
    pub counts: Vec<FitCount>,
}

fn exact_log(q: u32, n: usize) -> Option<u32> {
    let (mut x, mut e) = (1usize, 0u32);
    while x < n {
        x = x.checked_mul(q as usize)?;
        e += 1;
    }
    (x == n).then_some(e)
}

/// `e_s = log_q |C_{sτ}(F_q)|`, required integral, positive and the same for every `q`.
pub fn fit_parameters(d: usize, qs: &[u32], budget: u128) -> Result<ParameterFit> {
    if qs.is_empty() {
        return Err(Error::InvalidInput("no primes to fit against".into()));
    }
    let group = GroupCtx::new(d)?;
    let opts = CensusOptions { budget, generators: 0, seed: 0 };
    let mut counts = Vec::new();
    for &q in qs {
        let ctx = ModelWindow::new(d, q, 0, 1)?.context()?;
        let census = cell_census(&ctx, &group, &opts)?;
        for s in 0..group.num_simple() {
            let w = group.from_word(&[s], 1);
            let count = census.cell(&w).map_or(0, |c| c.size);
            counts.push(FitCount { q, simple: s, count });
        }
    }
    let fail = |why: String| Error::Characterization(format!("{why}; raw counts {counts:?}"));
    let mut per_simple = Vec::new();
    for s in 0..group.num_simple() {
        let mut found: Option<u32> = None;
        for c in counts.iter().filter(|c| c.simple == s) {
            let e = exact_log(c.q, c.count)
                .filter(|&e| e >= 1)
                .ok_or_else(|| fail(format!("|C_s{s}| = {} is not a positive power of {}", c.count, c.q)))?;
            if found.is_some_and(|f| f != e) {
                return Err(fail(format!("exponent of s{s} varies with q")));
            }
            found = Some(e);
        }
        per_simple.push(found.expect("at least one prime"));
    }
    let params = ParameterSystem::new(&group, &per_simple).map_err(|e| fail(e.to_string()))?;
    Ok(ParameterFit { params, counts })
}
