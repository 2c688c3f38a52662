//! Isometry classes of hermitian forms for the unramified quadratic extension.
//!
//! Units are norms and norms have even valuation, so the class is the parity
//! of the valuation of the determinant.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// `p^valuation · u` with `u` represented by its residue mod `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFieldScalar {
    pub valuation: i32,
    pub unit_class: u32,
}

impl LocalFieldScalar {
    pub fn new(valuation: i32, unit_class: u32, p: u32) -> Result<Self> {
        if unit_class == 0 || unit_class >= p {
            return Err(Error::InvalidInput(format!("unit class {unit_class} not in 1..{p}")));
        }
        Ok(LocalFieldScalar { valuation, unit_class })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryClass {
    QuasiSplit,
    NonQuasiSplit,
}

/// Determinant of an integer matrix by fraction-free elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Class of the symmetric integer Gram matrix `m`.
pub fn isometry_class_int(m: &[Vec<BigInt>], p: u32) -> Result<IsometryClass> {
    let n = m.len();
    if n == 0 || n % 2 == 1 || m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("gram must be square of even size".into()));
    }
    if (0..n).any(|i| (0..n).any(|j| m[i][j] != m[j][i])) {
        return Err(Error::InvalidInput("gram is not hermitian".into()));
    }
    let mut det = det_bareiss(m).abs();
    if det.is_zero() {
        return Err(Error::Domain("singular gram".into()));
    }
    let pb = BigInt::from(p);
    let mut v = 0u32;
    while (&det % &pb).is_zero() {
        det /= &pb;
        v += 1;
    }
    Ok(if v % 2 == 0 { IsometryClass::QuasiSplit } else { IsometryClass::NonQuasiSplit })
}

/// Class of a Gram matrix of scalars (`None` is zero).
pub fn isometry_class(gram: &[Vec<Option<LocalFieldScalar>>], p: u32) -> Result<IsometryClass> {
    if gram.iter().flatten().flatten().any(|s| s.unit_class == 0 || s.unit_class >= p) {
        return Err(Error::InvalidInput("unit class outside 1..p".into()));
    }
    let shift = gram.iter().flatten().flatten().map(|s| s.valuation).min().unwrap_or(0).min(0);
    let m: Vec<Vec<BigInt>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| match s {
                    None => BigInt::zero(),
                    Some(s) => BigInt::from(p).pow((s.valuation - shift) as u32) * BigInt::from(s.unit_class),
                })
                .collect()
        })
        .collect();
    isometry_class_int(&m, p)
}
