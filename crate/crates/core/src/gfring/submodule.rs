//! Submodules of `(t^lo F[t] / t^hi F[t])^d` in lattice Hermite form.
//!
//! A submodule is read as the lattice `L` with `t^hi O^d ⊆ L ⊆ t^lo O^d`.
//! The canonical generators are one column per pivot row `r` with pivot
//! exponent `e_r < hi`: zero below row `r`, exactly `t^{e_r}` at row `r`,
//! and entries above reduced modulo `t^{e_i}` in every pivot row `i`.

use super::field::{Fe, FieldCtx};
use super::linalg;
use super::matrix::{mul_column, shift_column, sub_mul_column, TruncMatrix};
use super::series::{series_inverse, SeriesRing};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::hash::{Hash, Hasher};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    ring: SeriesRing,
    rank: usize,
    canon: TruncMatrix,
    pivots: Vec<(usize, i32)>,
}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.ring.lo().hash(state);
        self.ring.hi().hash(state);
        for c in self.canon.columns() {
            c.hash(state);
        }
    }
}

/// JSON form: a header plus one coefficient list per canonical column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleJson {
    pub lo: i32,
    pub hi: i32,
    pub p: u32,
    pub modulus: Vec<u32>,
    pub rank: usize,
    pub columns: Vec<Vec<Fe>>,
}

fn row_val(col: &[Fe], r: usize, w: usize) -> Option<usize> {
    col[r * w..(r + 1) * w].iter().position(|&c| c != 0)
}

/// Column Hermite form of the lattice spanned by `gens` and `t^hi O^d`.
fn hermite(f: &FieldCtx, rank: usize, w: usize, gens: Vec<Vec<Fe>>) -> Vec<(usize, usize, Vec<Fe>)> {
    let mut pool: Vec<Vec<Fe>> = gens.into_iter().filter(|c| c.iter().any(|&x| x != 0)).collect();
    let mut pivots: Vec<(usize, usize, Vec<Fe>)> = Vec::new();
    for r in (0..rank).rev() {
        let best = pool
            .iter()
            .enumerate()
            .filter_map(|(i, c)| row_val(c, r, w).map(|k| (k, i)))
            .min();
        let Some((k, idx)) = best else { continue };
        let pcol = pool.swap_remove(idx);
        let unit = &pcol[r * w + k..(r + 1) * w];
        let uinv = series_inverse(f, unit, w - k).expect("leading coefficient is nonzero");
        let pcol = mul_column(f, w, &uinv, &pcol);
        for c in pool.iter_mut() {
            if row_val(c, r, w).is_some() {
                let s = c[r * w + k..(r + 1) * w].to_vec();
                sub_mul_column(f, w, c, &s, &pcol);
            }
        }
        let completion = shift_column(w, &pcol, w - k);
        pool.push(completion);
        pool.retain(|c| c.iter().any(|&x| x != 0));
        pivots.push((r, k, pcol));
    }
    pivots.reverse();
    let profile: Vec<Option<usize>> = {
        let mut p = vec![None; rank];
        for (r, k, _) in &pivots {
            p[*r] = Some(*k);
        }
        p
    };
    let reducers: Vec<(usize, usize, Vec<Fe>)> = pivots.clone();
    for (rj, _, g) in pivots.iter_mut() {
        for i in (0..*rj).rev() {
            let Some(ki) = profile[i] else { continue };
            let s = g[i * w + ki..(i + 1) * w].to_vec();
            if s.iter().all(|&c| c == 0) {
                continue;
            }
            let gi = &reducers.iter().find(|(r, _, _)| *r == i).expect("pivot column").2;
            sub_mul_column(f, w, g, &s, gi);
        }
    }
    pivots
}

impl Submodule {
    /// Canonical form of the span of the columns of `gens`.
    pub fn canonicalize(gens: &TruncMatrix) -> Submodule {
        let cols: Vec<Vec<Fe>> = gens.columns().map(|c| c.to_vec()).collect();
        Self::from_columns(gens.ring(), gens.rows(), cols)
    }

    /// Canonical form of the span of flat columns.
    pub fn from_columns(ring: &SeriesRing, rank: usize, cols: Vec<Vec<Fe>>) -> Submodule {
        let w = ring.width();
        let piv = hermite(ring.field(), rank, w, cols);
        let pivots = piv.iter().map(|(r, k, _)| (*r, *k as i32 + ring.lo())).collect();
        let columns: Vec<Vec<Fe>> = piv.into_iter().map(|(_, _, c)| c).collect();
        let canon = TruncMatrix::from_columns(ring, rank, &columns).expect("column lengths agree");
        Submodule { ring: ring.clone(), rank, canon, pivots }
    }

    pub fn zero(ring: &SeriesRing, rank: usize) -> Submodule {
        Self::from_columns(ring, rank, Vec::new())
    }

    /// `t^lo O^d`, the whole ambient module.
    pub fn full(ring: &SeriesRing, rank: usize) -> Submodule {
        Self::diagonal(ring, &vec![ring.lo(); rank]).expect("window start is representable")
    }

    /// `⊕ t^{b_r} O e_r`, each `b_r` in `[lo, hi]`.
    pub fn diagonal(ring: &SeriesRing, b: &[i32]) -> Result<Submodule> {
        let w = ring.width();
        let mut cols = Vec::new();
        for (r, &e) in b.iter().enumerate() {
            if e < ring.lo() || e > ring.hi() {
                return Err(Error::Window(format!("exponent {e} outside [{}, {}]", ring.lo(), ring.hi())));
            }
            if e < ring.hi() {
                let mut c = vec![0; b.len() * w];
                c[r * w + (e - ring.lo()) as usize] = 1;
                cols.push(c);
            }
        }
        Ok(Self::from_columns(ring, b.len(), cols))
    }

    pub fn ring(&self) -> &SeriesRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn canon(&self) -> &TruncMatrix {
        &self.canon
    }

    /// `(row, exponent)` for each canonical column.
    pub fn pivots(&self) -> &[(usize, i32)] {
        &self.pivots
    }

    /// Pivot exponent per row, `hi` when the row has no pivot.
    pub fn row_exponents(&self) -> Vec<i32> {
        let mut e = vec![self.ring.hi(); self.rank];
        for &(r, x) in &self.pivots {
            e[r] = x;
        }
        e
    }

    /// Elementary divisor exponents inside the window.
    pub fn divisor_profile(&self) -> Vec<i32> {
        let mut p: Vec<i32> = self.pivots.iter().map(|&(_, e)| e).collect();
        p.sort_unstable();
        p
    }

    /// Dimension over the coefficient field.
    pub fn dim(&self) -> usize {
        self.pivots.iter().map(|&(_, e)| (self.ring.hi() - e) as usize).sum()
    }

    /// Dimension over the prime field.
    pub fn dim_prime(&self) -> usize {
        self.dim() * self.ring.field().deg() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn columns(&self) -> Vec<Vec<Fe>> {
        self.canon.columns().map(|c| c.to_vec()).collect()
    }

    /// Membership of a flat vector.
    pub fn contains_vector(&self, v: &[Fe]) -> bool {
        let f = self.ring.field();
        let w = self.ring.width();
        let lo = self.ring.lo();
        let mut x = v.to_vec();
        let exps = self.row_exponents();
        for r in (0..self.rank).rev() {
            let k = (exps[r] - lo) as usize;
            if x[r * w..r * w + k].iter().any(|&c| c != 0) {
                return false;
            }
            if k < w {
                let s = x[r * w + k..(r + 1) * w].to_vec();
                if s.iter().any(|&c| c != 0) {
                    let idx = self.pivots.iter().position(|&(pr, _)| pr == r).expect("pivot row");
                    sub_mul_column(f, w, &mut x, &s, self.canon.column(idx));
                }
            }
        }
        true
    }

    fn check_compat(&self, other: &Submodule) -> Result<()> {
        if self.ring != other.ring || self.rank != other.rank {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.check_compat(other)?;
        Ok(other.canon.columns().all(|c| self.contains_vector(c)))
    }

    pub fn join(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compat(other)?;
        let mut cols = self.columns();
        cols.extend(other.columns());
        Ok(Self::from_columns(&self.ring, self.rank, cols))
    }

    /// Basis over the coefficient field: `t^k g` for each canonical `g`.
    pub fn field_basis(&self) -> Vec<Vec<Fe>> {
        let w = self.ring.width();
        let mut out = Vec::with_capacity(self.dim());
        for (idx, &(_, e)) in self.pivots.iter().enumerate() {
            let g = self.canon.column(idx);
            for k in 0..(self.ring.hi() - e) as usize {
                out.push(shift_column(w, g, k));
            }
        }
        out
    }

    pub fn meet(&self, other: &Submodule) -> Result<Submodule> {
        self.check_compat(other)?;
        let f = self.ring.field();
        let ba = self.field_basis();
        let bb = other.field_basis();
        if ba.is_empty() || bb.is_empty() {
            return Ok(Self::zero(&self.ring, self.rank));
        }
        let len = self.rank * self.ring.width();
        let ncols = ba.len() + bb.len();
        let rows: Vec<Vec<Fe>> = (0..len)
            .map(|i| ba.iter().map(|v| v[i]).chain(bb.iter().map(|v| f.neg(v[i]))).collect())
            .collect();
        let ns = linalg::nullspace(f, &rows, ncols);
        let gens: Vec<Vec<Fe>> = ns
            .iter()
            .map(|coef| {
                let mut v = vec![0; len];
                for (c, b) in coef.iter().zip(&ba) {
                    if *c != 0 {
                        for (x, &y) in v.iter_mut().zip(b) {
                            *x = f.add(*x, f.mul(*c, y));
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_columns(&self.ring, self.rank, gens))
    }

    pub fn meet_join(&self, other: &Submodule) -> Result<(Submodule, Submodule)> {
        Ok((self.meet(other)?, self.join(other)?))
    }

    /// Same lattice in another window; errors unless exactly representable.
    pub fn to_window(&self, lo: i32, hi: i32) -> Result<Submodule> {
        let target = self.ring.rewindow(lo, hi)?;
        let (w0, w1) = (self.ring.width(), target.width());
        let mut cols = Vec::new();
        for c in self.canon.columns() {
            let mut out = vec![0; self.rank * w1];
            for r in 0..self.rank {
                for k in 0..w0 {
                    let a = c[r * w0 + k];
                    if a == 0 {
                        continue;
                    }
                    let e = k as i32 + self.ring.lo();
                    if e < lo {
                        return Err(Error::Window(format!("lattice reaches t^{e}, below {lo}")));
                    }
                    if e < hi {
                        out[r * w1 + (e - lo) as usize] = a;
                    }
                }
            }
            cols.push(out);
        }
        if hi > self.ring.hi() {
            for r in 0..self.rank {
                let mut c = vec![0; self.rank * w1];
                let e = self.ring.hi();
                if e < lo {
                    return Err(Error::Window("window lies above the lattice floor".into()));
                }
                c[r * w1 + (e - lo) as usize] = 1;
                cols.push(c);
            }
        } else if hi < self.ring.hi() {
            let floor = Submodule::diagonal(&self.ring, &vec![hi.max(self.ring.lo()); self.rank])?;
            if !self.contains(&floor)? {
                return Err(Error::Window(format!("lattice does not contain t^{hi} O^d")));
            }
        }
        Ok(Self::from_columns(&target, self.rank, cols))
    }

    /// Image under `x ↦ y`, `y_{pi(i)} = t^{a_i} x_i`, in the window shifted by the extremes of `a`.
    pub fn monomial_image(&self, pi: &[usize], a: &[i32]) -> Result<Submodule> {
        let d = self.rank;
        if pi.len() != d || a.len() != d {
            return Err(Error::Dimension("monomial size differs from rank".into()));
        }
        let amin = *a.iter().min().unwrap_or(&0);
        let amax = *a.iter().max().unwrap_or(&0);
        let (lo, hi) = (self.ring.lo() + amin, self.ring.hi() + amax);
        let target = self.ring.rewindow(lo, hi)?;
        let (w0, w1) = (self.ring.width(), target.width());
        let mut cols = Vec::new();
        for c in self.canon.columns() {
            let mut out = vec![0; d * w1];
            for i in 0..d {
                for k in 0..w0 {
                    let x = c[i * w0 + k];
                    if x != 0 {
                        let e = k as i32 + self.ring.lo() + a[i];
                        out[pi[i] * w1 + (e - lo) as usize] = x;
                    }
                }
            }
            cols.push(out);
        }
        for i in 0..d {
            let e = self.ring.hi() + a[i];
            if e < hi {
                let mut out = vec![0; d * w1];
                out[pi[i] * w1 + (e - lo) as usize] = 1;
                cols.push(out);
            }
        }
        Ok(Self::from_columns(&target, d, cols))
    }

    /// `t^k L` in the same window.
    pub fn shift(&self, k: i32) -> Result<Submodule> {
        let id: Vec<usize> = (0..self.rank).collect();
        self.monomial_image(&id, &vec![k; self.rank])?.to_window(self.ring.lo(), self.ring.hi())
    }

    /// Image under a matrix over `F[t]/t^h` with `h >= hi - lo`, invertible modulo `t`.
    pub fn apply_matrix(&self, g: &TruncMatrix) -> Result<Submodule> {
        let gr = g.ring();
        if gr.lo() != 0 || gr.width() < self.ring.width() || g.rows() != self.rank || g.cols() != self.rank {
            return Err(Error::Window("matrix precision or shape does not cover the window".into()));
        }
        if gr.field() != self.ring.field() {
            return Err(Error::RingMismatch);
        }
        let f = self.ring.field();
        let w = self.ring.width();
        let d = self.rank;
        let mut cols = Vec::new();
        for c in self.canon.columns() {
            let mut out = vec![0; d * w];
            for r in 0..d {
                for k in 0..d {
                    let s = g.entry_coeffs(r, k);
                    let src = &c[k * w..(k + 1) * w];
                    let dst = &mut out[r * w..(r + 1) * w];
                    for (j, &sc) in s.iter().enumerate().take(w) {
                        if sc == 0 {
                            continue;
                        }
                        for i in 0..w - j {
                            if src[i] != 0 {
                                dst[i + j] = f.add(dst[i + j], f.mul(sc, src[i]));
                            }
                        }
                    }
                }
            }
            cols.push(out);
        }
        Ok(Self::from_columns(&self.ring, d, cols))
    }

    pub fn to_json(&self) -> SubmoduleJson {
        let h = self.ring.field().header();
        SubmoduleJson {
            lo: self.ring.lo(),
            hi: self.ring.hi(),
            p: h.p,
            modulus: h.modulus,
            rank: self.rank,
            columns: self.columns(),
        }
    }
}
