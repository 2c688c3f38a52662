//! Structure constants of the Hecke algebra by counting lattice chains.
//!
//! `N^w_{x,y} = #{F : pos(λ, F) = x, pos(F, wλ) = y}`.

use super::census::Census;
use super::chain::is_local_model_point;
use super::chain::LatticeChain;
use super::relpos::{relative_position, translate_standard};
use super::window::ModelCtx;
use crate::error::{Error, Result};
use crate::gfring::Submodule;
use crate::weyl::WeylElement;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Refuses unless the cell of `x` lies in the census window.
pub fn check_representable(ctx: &ModelCtx, x: &WeylElement) -> Result<()> {
    let moved = translate_standard(ctx, x)?;
    let members: Result<Vec<Submodule>> =
        moved.iter().take(ctx.window.d / 2 + 1).map(|l| l.to_window(ctx.ring.lo(), ctx.ring.hi())).collect();
    let ok = match members {
        Ok(members) => is_local_model_point(ctx, &LatticeChain { window: ctx.window, members }).pass(),
        Err(_) => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Window(format!("the cell of {x} does not lie in the window {:?}", ctx.window)))
    }
}

/// Counts over the cell of `x` against an arbitrary full chain `rep` (members `0..=d`).
pub fn count_against(ctx: &ModelCtx, census: &Census, x: &WeylElement, rep: &[Submodule]) -> Result<BTreeMap<WeylElement, u64>> {
    check_representable(ctx, x)?;
    let (lo, hi) = (rep[0].ring().lo(), rep[0].ring().hi());
    let cell = census.cell(x).map(|c| c.members.clone()).unwrap_or_default();
    let positions: Vec<WeylElement> = cell
        .par_iter()
        .map(|&i| {
            let full = census.points[i].full_chain(ctx)?;
            let full: Vec<Submodule> = full.iter().map(|l| l.to_window(lo, hi)).collect::<Result<_>>()?;
            relative_position(&full, rep)
        })
        .collect::<Result<_>>()?;
    let mut out = BTreeMap::new();
    for y in positions {
        *out.entry(y).or_insert(0) += 1;
    }
    Ok(out)
}

/// `N^w_{x,y}` for every `y`, using the monomial representative `wλ`.
pub fn convolution_row(ctx: &ModelCtx, census: &Census, x: &WeylElement, w: &WeylElement) -> Result<BTreeMap<WeylElement, u64>> {
    let rep = translate_standard(ctx, w)?;
    count_against(ctx, census, x, &rep)
}

pub fn convolution_count(ctx: &ModelCtx, census: &Census, x: &WeylElement, y: &WeylElement, w: &WeylElement) -> Result<u64> {
    Ok(convolution_row(ctx, census, x, w)?.get(y).copied().unwrap_or(0))
}
