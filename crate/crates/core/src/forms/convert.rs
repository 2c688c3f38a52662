//! Hermitian forms on `K^d` versus alternating `k`-forms, `K = F_{p^2}`.
//!
//! Forward: `ψ(v, w) = Tr(ζ φ(v, w))`. Inverse:
//! `φ(v, w) = ½ (ζ^{-1} ψ(v, w) + ψ(ζ^{-1} v, w))`.
//! Alternating Grams use the `k`-basis `e_1..e_d, θe_1..θe_d` where `θ` is
//! the class of `x` modulo the field polynomial.

use crate::error::{Error, Result};
use crate::gfring::{Fe, FieldCtx};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormKind {
    Hermitian,
    Alternating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    HermitianToAlternating,
    AlternatingToHermitian,
}

/// Row-major Gram matrix; hermitian ones are `d x d` over `K`, alternating ones `2d x 2d` over `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormGram {
    pub kind: FormKind,
    pub size: usize,
    pub entries: Vec<Fe>,
}

impl FormGram {
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.entries[r * self.size + c]
    }
}

/// Least nonzero encoded element with `conj(ζ) = -ζ`.
pub fn default_zeta(f: &FieldCtx) -> Result<Fe> {
    f.elements()
        .find(|&z| z != 0 && f.frob(z) == f.neg(z))
        .ok_or_else(|| Error::Domain("no anti-fixed element".into()))
}

fn check_field(f: &FieldCtx, zeta: Fe) -> Result<()> {
    if f.deg() != 2 {
        return Err(Error::Domain("needs the quadratic extension".into()));
    }
    if f.p() == 2 {
        return Err(Error::Domain("characteristic 2".into()));
    }
    if zeta == 0 || zeta >= f.order() || f.frob(zeta) != f.neg(zeta) {
        return Err(Error::InvalidInput("ζ must be nonzero with conj(ζ) = -ζ".into()));
    }
    Ok(())
}

pub fn is_hermitian(f: &FieldCtx, g: &FormGram) -> bool {
    let n = g.size;
    g.kind == FormKind::Hermitian
        && g.entries.len() == n * n
        && (0..n).all(|i| (0..n).all(|j| g.get(j, i) == f.frob(g.get(i, j))))
}

pub fn is_alternating(f: &FieldCtx, g: &FormGram) -> bool {
    let n = g.size;
    g.kind == FormKind::Alternating
        && g.entries.len() == n * n
        && g.entries.iter().all(|&x| x < f.p())
        && (0..n).all(|i| g.get(i, i) == 0 && (0..n).all(|j| g.get(j, i) == f.neg(g.get(i, j))))
}

/// `k`-matrix (row-major, `2d x 2d`) of multiplication by `x` on `K^d`.
pub fn multiplication_matrix(f: &FieldCtx, x: Fe, d: usize) -> Vec<Fe> {
    let n = 2 * d;
    let theta = f.p();
    let mut m = vec![0; n * n];
    for i in 0..d {
        for (eps, basis) in [(0usize, 1), (1, theta)] {
            let img = f.mul(x, basis);
            let [c0, c1] = f.coords(img);
            let col = eps * d + i;
            m[i * n + col] = c0;
            m[(d + i) * n + col] = c1;
        }
    }
    m
}

/// `ψ(x v, w) = ψ(v, conj(x) w)` for `x = θ`, which generates `K` over `k`.
pub fn is_internally_hermitian(f: &FieldCtx, g: &FormGram) -> bool {
    let n = g.size;
    if n % 2 == 1 {
        return false;
    }
    let d = n / 2;
    let theta = f.p();
    let t = multiplication_matrix(f, theta, d);
    let tc = multiplication_matrix(f, f.frob(theta), d);
    for r in 0..n {
        for c in 0..n {
            let mut lhs = 0;
            let mut rhs = 0;
            for k in 0..n {
                lhs = f.add(lhs, f.mul(t[k * n + r], g.get(k, c)));
                rhs = f.add(rhs, f.mul(g.get(r, k), tc[k * n + c]));
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

pub fn convert_form(f: &FieldCtx, input: &FormGram, direction: Direction, zeta: Fe) -> Result<FormGram> {
    check_field(f, zeta)?;
    match direction {
        Direction::HermitianToAlternating => {
            if !is_hermitian(f, input) {
                return Err(Error::InvalidInput("input is not a hermitian Gram matrix".into()));
            }
            let d = input.size;
            let n = 2 * d;
            let basis = |a: usize| -> (usize, Fe) { (a % d, if a < d { 1 } else { f.p() }) };
            let mut entries = vec![0; n * n];
            for a in 0..n {
                let (i, x) = basis(a);
                for b in 0..n {
                    let (j, y) = basis(b);
                    let phi = f.mul(f.mul(x, f.frob(y)), input.get(i, j));
                    entries[a * n + b] = f.trace(f.mul(zeta, phi));
                }
            }
            Ok(FormGram { kind: FormKind::Alternating, size: n, entries })
        }
        Direction::AlternatingToHermitian => {
            if !is_alternating(f, input) || !is_internally_hermitian(f, input) {
                return Err(Error::InvalidInput("input is not an internally hermitian alternating Gram".into()));
            }
            let d = input.size / 2;
            let zi = f.inv(zeta);
            let [c0, c1] = f.coords(zi);
            let half = f.inv(f.from_int(2));
            let mut entries = vec![0; d * d];
            for i in 0..d {
                for j in 0..d {
                    let psi = input.get(i, j);
                    let psi_z = f.add(f.mul(c0, psi), f.mul(c1, input.get(d + i, j)));
                    entries[i * d + j] = f.mul(half, f.add(f.mul(zi, psi), psi_z));
                }
            }
            Ok(FormGram { kind: FormKind::Hermitian, size: d, entries })
        }
    }
}
