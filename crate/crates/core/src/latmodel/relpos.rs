//! Relative position of two periodic lattice chains.
//!
//! For chains `A`, `B` indexed by all integers (`X_{i+d} = t^{-1} X_i`) pick
//! `v_j ∈ B_j \ B_{j-1}` and let `σ(j)` be the least `i` with
//! `v_j ∈ A_i + B_{j-1}`. Then `σ(l) = π(l) - d a_l` recovers `(π, a)`.

use super::chain::LatticeChain;
use super::window::ModelCtx;
use crate::error::{Error, Result};
use crate::gfring::{Fe, Submodule};
use crate::weyl::WeylElement;
use std::collections::HashMap;

/// `(A_i)_i` given by its members `0..=d`; shifts are computed on demand.
fn shifted(a: &[Submodule], i: i64, d: usize, lo: i32, hi: i32, cache: &mut HashMap<i64, Submodule>) -> Result<Submodule> {
    if let Some(x) = cache.get(&i) {
        return Ok(x.clone());
    }
    let (s, i0) = (i.div_euclid(d as i64), i.rem_euclid(d as i64) as usize);
    let base = a[i0].to_window(lo, hi)?;
    let x = base.shift(-(s as i32))?;
    cache.insert(i, x.clone());
    Ok(x)
}

/// Relative position of full chains `a`, `b` (members `0..=d`, same window).
pub fn relative_position(a: &[Submodule], b: &[Submodule]) -> Result<WeylElement> {
    let d = a[0].rank();
    if a.len() != d + 1 || b.len() != d + 1 {
        return Err(Error::Dimension("full chains need d + 1 members".into()));
    }
    let ring = a[0].ring();
    if a.iter().chain(b).any(|x| x.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let (lo, hi) = (ring.lo(), ring.hi());
    let width = hi - lo;
    let (lo2, hi2) = (lo - width, hi + width);
    let b2: Vec<Submodule> = b.iter().map(|x| x.to_window(lo2, hi2)).collect::<Result<_>>()?;
    let mut cache = HashMap::new();
    let i_min = -(width as i64) * d as i64;
    let i_max = width as i64 * d as i64;
    let mut sigma = Vec::with_capacity(d);
    for j in 1..=d {
        let prev = &b2[j - 1];
        let v: Vec<Fe> = b2[j]
            .columns()
            .into_iter()
            .find(|c| !prev.contains_vector(c))
            .ok_or_else(|| Error::Internal(format!("chain member {j} does not grow")))?;
        let test = |i: i64, cache: &mut HashMap<i64, Submodule>| -> Result<bool> {
            let ai = shifted(a, i, d, lo2, hi2, cache)?;
            Ok(ai.join(prev)?.contains_vector(&v))
        };
        let (mut lo_i, mut hi_i) = (i_min, i_max);
        if test(lo_i, &mut cache)? || !test(hi_i, &mut cache)? {
            return Err(Error::Internal("jump index outside the search range".into()));
        }
        while hi_i - lo_i > 1 {
            let mid = (lo_i + hi_i) / 2;
            if test(mid, &mut cache)? {
                hi_i = mid;
            } else {
                lo_i = mid;
            }
        }
        sigma.push(hi_i);
    }
    let dd = d as i64;
    let mut pi = vec![0; d];
    let mut av = vec![0; d];
    for l in 0..d {
        let s = sigma[l];
        let p0 = (s - 1).rem_euclid(dd);
        pi[l] = p0 as usize;
        av[l] = ((p0 + 1 - s) / dd) as i32;
    }
    let gamma = av[0] + av[d - 1];
    WeylElement::new(pi, av, gamma).map_err(|e| Error::Internal(format!("invariant is not a group element: {e}")))
}

/// Full standard chain `λ_0..λ_d` in the context window.
pub fn standard_full_chain(ctx: &ModelCtx) -> Vec<Submodule> {
    (0..=ctx.window.d).map(|i| ctx.standard_lattice(i as i64, 0).expect("fits")).collect()
}

/// Relative position of a point with respect to the standard chain.
pub fn relative_position_to_base(ctx: &ModelCtx, chain: &LatticeChain) -> Result<WeylElement> {
    let full = chain.full_chain(ctx)?;
    relative_position(&standard_full_chain(ctx), &full)
}

/// `w·λ_0..w·λ_d` in a window wide enough to hold them and `[lo, hi)`.
pub fn translate_standard(ctx: &ModelCtx, w: &WeylElement) -> Result<Vec<Submodule>> {
    let base = standard_full_chain(ctx);
    let moved: Vec<Submodule> = base.iter().map(|l| l.monomial_image(w.pi(), w.a())).collect::<Result<_>>()?;
    let lo = moved.iter().map(|l| l.ring().lo()).min().unwrap_or(0).min(ctx.ring.lo());
    let hi = moved.iter().map(|l| l.ring().hi()).max().unwrap_or(0).max(ctx.ring.hi());
    moved.iter().map(|l| l.to_window(lo, hi)).collect()
}
