//! Enumeration of the `F_q`-points of `M^(m,n)`.
//!
//! Each member is enumerated through its Hermite form: pivot exponents
//! between the bounds with the right total dimension, then every filling
//! of the entries above the pivots. A filling is kept when it is already
//! canonical, which is exactly `t`-stability of the span. Chains are then
//! assembled depth first from the self-dual bottom members.

use super::chain::{self, LatticeChain};
use super::window::ModelCtx;
use crate::error::{Error, Result};
use crate::gfring::{Fe, Submodule};
use rayon::prelude::*;

/// Number of `k`-dimensional subspaces of `F^n`, `|F| = base`.
pub fn gaussian_binomial(n: u32, k: u32, base: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num = num.saturating_mul(base.saturating_pow(n - i).saturating_sub(1));
        den = den.saturating_mul(base.saturating_pow(i + 1) - 1);
    }
    if num == u128::MAX {
        u128::MAX
    } else {
        num / den
    }
}

/// Upper bound on the search: subspace counts of each member quotient.
pub fn work_estimate(ctx: &ModelCtx) -> u128 {
    let w = ctx.window;
    let total = (w.d as i32 * (w.m + w.n)) as u32;
    let base = (w.q as u128) * (w.q as u128);
    (0..=w.d / 2).fold(0u128, |acc, _| acc.saturating_add(gaussian_binomial(total, total / 2, base)))
}

fn pivot_patterns(lo_e: &[i32], hi_e: &[i32], hi: i32, target: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(r: usize, lo_e: &[i32], hi_e: &[i32], hi: i32, left: i64, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if r == lo_e.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in lo_e[r]..=hi_e[r] {
            let used = (hi - e) as i64;
            if used <= left {
                cur.push(e);
                rec(r + 1, lo_e, hi_e, hi, left - used, cur, out);
                cur.pop();
            }
        }
    }
    rec(0, lo_e, hi_e, hi, target as i64, &mut cur, &mut out);
    out
}

/// All `L` with the bounds and dimension of member `i`.
pub fn member_candidates(ctx: &ModelCtx, i: usize) -> Vec<Submodule> {
    let w = ctx.window;
    let ring = &ctx.ring;
    let (lo, hi, width, d) = (ring.lo(), ring.hi(), ring.width(), w.d);
    let order = ctx.field.order();
    let b = w.standard_exponents(i as i64);
    let lo_e: Vec<i32> = b.iter().map(|x| x - w.m).collect();
    let hi_e: Vec<i32> = b.iter().map(|x| (x + w.n).min(hi)).collect();
    let patterns = pivot_patterns(&lo_e, &hi_e, hi, w.member_dim(i));
    patterns
        .par_iter()
        .flat_map_iter(|e| {
            let pivots: Vec<usize> = (0..d).filter(|&r| e[r] < hi).collect();
            // free slots: (column index, row, exponent)
            let mut slots = Vec::new();
            for (ci, &j) in pivots.iter().enumerate() {
                for r in 0..j {
                    for k in lo_e[r]..e[r] {
                        slots.push((ci, r, k));
                    }
                }
            }
            let mut base_cols: Vec<Vec<Fe>> = pivots
                .iter()
                .map(|&j| {
                    let mut c = vec![0; d * width];
                    c[j * width + (e[j] - lo) as usize] = 1;
                    c
                })
                .collect();
            let mut digits = vec![0u32; slots.len()];
            let mut found = Vec::new();
            loop {
                for (s, &(ci, r, k)) in slots.iter().enumerate() {
                    base_cols[ci][r * width + (k - lo) as usize] = digits[s];
                }
                let l = Submodule::from_columns(ring, d, base_cols.clone());
                if l.columns() == base_cols && chain::within_bounds(ctx, i, &l) {
                    found.push(l);
                }
                let mut s = 0;
                while s < digits.len() {
                    digits[s] += 1;
                    if digits[s] < order {
                        break;
                    }
                    digits[s] = 0;
                    s += 1;
                }
                if s == digits.len() {
                    break;
                }
            }
            found
        })
        .collect()
}

/// Every point of the window, refusing when the estimate exceeds `budget`.
pub fn enumerate_points(ctx: &ModelCtx, budget: u128) -> Result<Vec<LatticeChain>> {
    let est = work_estimate(ctx);
    if est > budget {
        return Err(Error::Budget(format!("estimated {est} candidate subspaces exceeds the ceiling {budget}")));
    }
    let d = ctx.window.d;
    let half = d / 2;
    let mut cands: Vec<Vec<Submodule>> = (0..=half).map(|i| member_candidates(ctx, i)).collect();
    let bottom: Vec<Submodule> = std::mem::take(&mut cands[0]).into_par_iter().filter(|l| chain::self_dual_bottom(ctx, l)).collect();
    cands[0] = bottom;
    let top: Vec<Submodule> = std::mem::take(&mut cands[half]).into_par_iter().filter(|l| chain::self_dual_top(ctx, l)).collect();
    cands[half] = top;
    fn extend(cands: &[Vec<Submodule>], prefix: &mut Vec<Submodule>, out: &mut Vec<Vec<Submodule>>) {
        let i = prefix.len();
        if i == cands.len() {
            out.push(prefix.clone());
            return;
        }
        for l in &cands[i] {
            if l.contains(prefix.last().expect("nonempty prefix")).unwrap_or(false) {
                prefix.push(l.clone());
                extend(cands, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut points: Vec<LatticeChain> = if half == 0 {
        Vec::new()
    } else {
        cands[0]
            .par_iter()
            .flat_map_iter(|l0| {
                let mut out = Vec::new();
                extend(&cands, &mut vec![l0.clone()], &mut out);
                out.into_iter().map(|members| LatticeChain { window: ctx.window, members })
            })
            .collect()
    };
    points.sort_by(|a, b| chain_key(a).cmp(&chain_key(b)));
    Ok(points)
}

fn chain_key(c: &LatticeChain) -> Vec<Vec<Vec<Fe>>> {
    c.members.iter().map(|l| l.columns()).collect()
}
