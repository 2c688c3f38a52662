//! Lattice chains `L_0 ⊆ ⋯ ⊆ L_{d/2}` and the conditions cutting out points.

use super::window::{ModelCtx, ModelWindow};
use crate::error::{Error, Result};
use crate::gfring::{Submodule, SubmoduleJson};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeChain {
    pub window: ModelWindow,
    pub members: Vec<Submodule>,
}

/// Outcome of each defining condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointDiagnostics {
    pub nesting: bool,
    pub bounds: bool,
    pub rank: bool,
    pub self_dual_bottom: bool,
    pub self_dual_top: bool,
}

impl PointDiagnostics {
    pub fn pass(&self) -> bool {
        self.nesting && self.bounds && self.rank && self.self_dual_bottom && self.self_dual_top
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub window: ModelWindow,
    pub members: Vec<SubmoduleJson>,
}

pub fn standard_chain(ctx: &ModelCtx) -> LatticeChain {
    let members = (0..=ctx.window.d / 2)
        .map(|i| ctx.standard_lattice(i as i64, 0).expect("standard lattice fits the window"))
        .collect();
    LatticeChain { window: ctx.window, members }
}

/// Bounds `t^n λ_i ⊆ L ⊆ t^{-m} λ_i`.
pub(crate) fn within_bounds(ctx: &ModelCtx, i: usize, l: &Submodule) -> bool {
    let w = ctx.window;
    let inner = ctx.standard_lattice(i as i64, w.n).expect("inner bound fits");
    let outer = ctx.standard_lattice(i as i64, -w.m).expect("outer bound fits");
    l.contains(&inner).unwrap_or(false) && outer.contains(l).unwrap_or(false)
}

pub(crate) fn self_dual_bottom(ctx: &ModelCtx, l: &Submodule) -> bool {
    matches!(ctx.form.dual_lattice(l, ctx.window.gamma()), Ok(x) if &x == l)
}

pub(crate) fn self_dual_top(ctx: &ModelCtx, l: &Submodule) -> bool {
    matches!(ctx.form.dual_lattice(l, ctx.window.gamma() - 1), Ok(x) if &x == l)
}

pub fn is_local_model_point(ctx: &ModelCtx, chain: &LatticeChain) -> PointDiagnostics {
    let d = ctx.window.d;
    let ms = &chain.members;
    let shaped = ms.len() == d / 2 + 1 && ms.iter().all(|l| l.ring() == &ctx.ring && l.rank() == d);
    if !shaped {
        return PointDiagnostics { nesting: false, bounds: false, rank: false, self_dual_bottom: false, self_dual_top: false };
    }
    PointDiagnostics {
        nesting: ms.windows(2).all(|p| p[1].contains(&p[0]).unwrap_or(false)),
        bounds: ms.iter().enumerate().all(|(i, l)| within_bounds(ctx, i, l)),
        rank: ms.iter().enumerate().all(|(i, l)| l.dim() == ctx.window.member_dim(i)),
        self_dual_bottom: self_dual_bottom(ctx, &ms[0]),
        self_dual_top: self_dual_top(ctx, &ms[d / 2]),
    }
}

impl LatticeChain {
    /// Periodic chain `F_0..F_d` with `F_{d-i} = t^{n-m-1} F̂_i`.
    pub fn full_chain(&self, ctx: &ModelCtx) -> Result<Vec<Submodule>> {
        let d = self.window.d;
        let mut full: Vec<Submodule> = self.members.clone();
        for i in (0..d / 2).rev() {
            full.push(ctx.form.dual_lattice(&self.members[i], self.window.gamma() - 1)?);
        }
        if full.len() != d + 1 {
            return Err(Error::Internal("chain has the wrong length".into()));
        }
        Ok(full)
    }

    pub fn to_json(&self) -> ChainJson {
        ChainJson { window: self.window, members: self.members.iter().map(|l| l.to_json()).collect() }
    }
}
