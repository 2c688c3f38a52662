//! The centre element supported on `Adm(μ)`, found by solving the
//! commutator equations exactly over `Q(v)`.

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::laurent::Laurent;
use crate::error::{Error, Result};
use crate::weyl::{admissible, Cocharacter, WeylElement};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Dense polynomial in `v`, lowest degree first, no trailing zeros.
type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Exact quotient, `None` when `b` does not divide `a`.
fn poly_div_exact(a: &Poly, b: &Poly) -> Option<Poly> {
    if b.is_empty() {
        return None;
    }
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let lead = b.last().expect("nonzero divisor");
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        if !(top % lead).is_zero() {
            return None;
        }
        let c = top / lead;
        for (j, y) in b.iter().enumerate() {
            rem[k + j] -= &c * y;
        }
        q[k] = c;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(q))
}

/// `(shift, poly)` with the Laurent polynomial equal to `v^shift · poly`.
fn to_poly(l: &Laurent, shift: i32) -> Poly {
    let mut out = Vec::new();
    for (e, c) in l.terms() {
        let k = (e - shift) as usize;
        if out.len() <= k {
            out.resize(k + 1, BigInt::zero());
        }
        out[k] = BigInt::from(c);
    }
    out
}

fn from_poly(p: &Poly, shift: i32) -> Result<Laurent> {
    let mut out = Laurent::zero();
    for (k, c) in p.iter().enumerate() {
        let c = c.to_i128().ok_or_else(|| Error::Internal("coefficient exceeds 128 bits".into()))?;
        out.add_term(k as i32 + shift, c);
    }
    Ok(out)
}

/// Fraction-free Gauss-Jordan; returns the rank and pivot columns. Every
/// pivot row ends with the same diagonal entry, the last pivot.
fn bareiss_gauss_jordan(m: &mut Vec<Vec<Poly>>, cols: usize) -> Result<Vec<usize>> {
    let mut prev: Poly = vec![BigInt::one()];
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_empty()) else { continue };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        let piv = pivot_row[c].clone();
        let updated: Vec<Option<Vec<Poly>>> = m
            .par_iter()
            .enumerate()
            .map(|(i, row)| {
                if i == r {
                    return Ok(None);
                }
                let f = &row[c];
                let mut new = Vec::with_capacity(cols);
                for j in 0..cols {
                    let num = poly_sub(&poly_mul(&piv, &row[j]), &poly_mul(f, &pivot_row[j]));
                    let val = poly_div_exact(&num, &prev)
                        .ok_or_else(|| Error::Internal("inexact fraction-free step".into()))?;
                    new.push(val);
                }
                Ok(Some(new))
            })
            .collect::<Result<_>>()?;
        for (i, u) in updated.into_iter().enumerate() {
            if let Some(u) = u {
                m[i] = u;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
        m.retain(|row| row.iter().any(|x| !x.is_empty()));
    }
    Ok(pivots)
}

#[derive(Debug, Clone, Serialize)]
pub struct Characterization {
    pub unknowns: usize,
    pub equations: usize,
    pub rank: usize,
    pub element: HeckeElement,
}

/// Solves for central elements supported on `Adm(μ)` with `T_{t_μ}`
/// coefficient `q(μ)^{-1/2}`; fails unless the solution is unique and
/// equals `z_μ`.
pub fn central_from_characterization(alg: &HeckeAlgebra, mu: &Cocharacter) -> Result<Characterization> {
    if mu.d() != alg.d() || !mu.is_dominant() {
        return Err(Error::InvalidInput(format!("{:?} is not a dominant cocharacter of rank {}", mu.a, alg.d())));
    }
    let adm: Vec<WeylElement> = admissible(alg.group(), mu).into_iter().collect();
    let n = adm.len();
    let gens = alg.generators();
    // columns[w] = [T_w, g] for every generator g
    let columns: Vec<Vec<HeckeElement>> = adm
        .par_iter()
        .map(|w| gens.iter().map(|g| alg.commutator(&alg.t(w), g)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut rows: BTreeMap<(usize, WeylElement), Vec<Laurent>> = BTreeMap::new();
    for (j, per_gen) in columns.iter().enumerate() {
        for (g, c) in per_gen.iter().enumerate() {
            for (u, x) in c.terms() {
                rows.entry((g, u.clone())).or_insert_with(|| vec![Laurent::zero(); n])[j] = x.clone();
            }
        }
    }
    let laurent_rows: Vec<Vec<Laurent>> = rows.into_values().collect();
    let equations = laurent_rows.len();
    let mut m: Vec<Vec<Poly>> = laurent_rows
        .iter()
        .map(|row| {
            let shift = row.iter().filter_map(Laurent::min_exp).min().unwrap_or(0);
            row.iter().map(|x| to_poly(x, shift)).collect()
        })
        .collect();
    let pivots = bareiss_gauss_jordan(&mut m, n)?;
    let rank = pivots.len();
    if rank + 1 != n {
        return Err(Error::Characterization(format!(
            "solution space has dimension {} over {} unknowns and {} equations",
            n - rank,
            n,
            equations
        )));
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("one free column");
    let det = if rank == 0 { vec![BigInt::one()] } else { m[rank - 1][pivots[rank - 1]].clone() };
    let mut x: Vec<Poly> = vec![Vec::new(); n];
    x[free] = det;
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = poly_sub(&Vec::new(), &m[k][free]);
    }
    for row in &laurent_rows {
        let shift = row.iter().filter_map(Laurent::min_exp).min().unwrap_or(0);
        let mut acc: Poly = Vec::new();
        for (j, e) in row.iter().enumerate() {
            let prod = poly_mul(&to_poly(e, shift), &x[j]);
            acc = poly_sub(&acc, &prod);
        }
        if !acc.is_empty() {
            return Err(Error::Internal("null vector fails an equation".into()));
        }
    }
    let t_mu = WeylElement::translation(mu)?;
    let k = adm.iter().position(|w| *w == t_mu).ok_or_else(|| Error::Internal("t_μ missing from Adm(μ)".into()))?;
    if x[k].is_empty() {
        return Err(Error::Characterization("every central solution vanishes on the dominant cell".into()));
    }
    // divide by the v-adic part of x_k, then by the rest
    let low = x[k].iter().position(|c| !c.is_zero()).expect("nonzero");
    let xk: Poly = x[k][low..].to_vec();
    let e = alg.half_weight(mu)? as i32;
    let mut element = HeckeElement::zero(alg.d());
    for (j, w) in adm.iter().enumerate() {
        let q = poly_div_exact(&x[j], &xk)
            .ok_or_else(|| Error::Characterization(format!("coefficient at {w} is not a Laurent polynomial")))?;
        element.add_term(w, &from_poly(&q, -(low as i32) - e)?);
    }
    if element.coeff(&t_mu) != Laurent::monomial(1, -e) {
        return Err(Error::Internal("normalization failed".into()));
    }
    let z = alg.bernstein_z(mu)?;
    if element != z {
        return Err(Error::Characterization(format!("unique central solution differs from z_μ: {element} vs {z}")));
    }
    Ok(Characterization { unknowns: n, equations, rank, element })
}
