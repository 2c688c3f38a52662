//! Truncated Laurent series `t^lo F[t] / t^hi F[t]`.

use super::field::{Fe, FieldCtx};
use crate::error::{Error, Result};
use std::sync::Arc;

/// Exponent window `[lo, hi)` over a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRing {
    field: Arc<FieldCtx>,
    lo: i32,
    hi: i32,
}

/// Coefficients of `t^lo .. t^{hi-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruncSeries {
    pub(crate) coeffs: Vec<Fe>,
}

impl TruncSeries {
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl SeriesRing {
    pub fn new(field: Arc<FieldCtx>, lo: i32, hi: i32) -> Result<Self> {
        if lo > 0 || hi <= lo {
            return Err(Error::Window(format!("bad window [{lo}, {hi})")));
        }
        Ok(SeriesRing { field, lo, hi })
    }

    /// Window that may start above zero; used for ideals such as `tO`.
    pub fn with_window(field: Arc<FieldCtx>, lo: i32, hi: i32) -> Result<Self> {
        if hi <= lo {
            return Err(Error::Window(format!("bad window [{lo}, {hi})")));
        }
        Ok(SeriesRing { field, lo, hi })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    /// Number of coefficients.
    pub fn width(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    /// Same field, different window.
    pub fn rewindow(&self, lo: i32, hi: i32) -> Result<Self> {
        SeriesRing::with_window(self.field.clone(), lo, hi)
    }

    pub fn zero(&self) -> TruncSeries {
        TruncSeries { coeffs: vec![0; self.width()] }
    }

    pub fn one(&self) -> Result<TruncSeries> {
        self.monomial(1, 0)
    }

    /// `c t^e`; exponents at or above `hi` give zero.
    pub fn monomial(&self, c: Fe, e: i32) -> Result<TruncSeries> {
        let mut x = self.zero();
        if e < self.lo {
            return Err(Error::Window(format!("exponent {e} below window start {}", self.lo)));
        }
        if e < self.hi {
            x.coeffs[(e - self.lo) as usize] = c;
        }
        Ok(x)
    }

    pub fn from_coeffs(&self, coeffs: Vec<Fe>) -> Result<TruncSeries> {
        if coeffs.len() != self.width() || coeffs.iter().any(|&c| c >= self.field.order()) {
            return Err(Error::InvalidInput("coefficient vector does not fit the ring".into()));
        }
        Ok(TruncSeries { coeffs })
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, x: &TruncSeries, e: i32) -> Fe {
        if e < self.lo || e >= self.hi {
            0
        } else {
            x.coeffs[(e - self.lo) as usize]
        }
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn valuation(&self, x: &TruncSeries) -> Option<i32> {
        x.coeffs.iter().position(|&c| c != 0).map(|k| k as i32 + self.lo)
    }

    pub fn add(&self, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
        let f = &self.field;
        TruncSeries { coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, x: &TruncSeries, y: &TruncSeries) -> TruncSeries {
        let f = &self.field;
        TruncSeries { coeffs: x.coeffs.iter().zip(&y.coeffs).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    pub fn neg(&self, x: &TruncSeries) -> TruncSeries {
        TruncSeries { coeffs: x.coeffs.iter().map(|&a| self.field.neg(a)).collect() }
    }

    pub fn scale(&self, c: Fe, x: &TruncSeries) -> TruncSeries {
        TruncSeries { coeffs: x.coeffs.iter().map(|&a| self.field.mul(c, a)).collect() }
    }

    /// Product truncated above `hi`; a nonzero term below `lo` is an error.
    pub fn mul(&self, x: &TruncSeries, y: &TruncSeries) -> Result<TruncSeries> {
        let f = &self.field;
        let w = self.width();
        let mut out = vec![0; w];
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let e = i as i32 + j as i32 + 2 * self.lo;
                if e >= self.hi {
                    break;
                }
                if e < self.lo {
                    return Err(Error::Window(format!("product term t^{e} below window start {}", self.lo)));
                }
                let k = (e - self.lo) as usize;
                out[k] = f.add(out[k], f.mul(a, b));
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Multiplication by `t^k`, truncating above `hi`.
    pub fn shift(&self, x: &TruncSeries, k: i32) -> Result<TruncSeries> {
        let mut out = self.zero();
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let e = i as i32 + self.lo + k;
            if e < self.lo {
                return Err(Error::Window(format!("shift produces t^{e} below window start")));
            }
            if e < self.hi {
                out.coeffs[(e - self.lo) as usize] = a;
            }
        }
        Ok(out)
    }

    /// Coefficient-wise Frobenius.
    pub fn conj(&self, x: &TruncSeries) -> Result<TruncSeries> {
        if self.field.deg() != 2 {
            return Err(Error::Domain("conjugation needs a quadratic coefficient field".into()));
        }
        Ok(TruncSeries { coeffs: x.coeffs.iter().map(|&a| self.field.frob(a)).collect() })
    }

    /// Inverse of a unit of `F[t]/t^hi` (requires `lo = 0`).
    pub fn inv(&self, x: &TruncSeries) -> Result<TruncSeries> {
        if self.lo != 0 {
            return Err(Error::Domain("inversion needs window starting at 0".into()));
        }
        let coeffs = series_inverse(&self.field, &x.coeffs, self.width())?;
        Ok(TruncSeries { coeffs })
    }

    /// Re-expresses `x` in another window of the same field; exact or error.
    pub fn convert(&self, x: &TruncSeries, target: &SeriesRing) -> Result<TruncSeries> {
        let mut out = target.zero();
        for (i, &a) in x.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let e = i as i32 + self.lo;
            if e < target.lo {
                return Err(Error::Window(format!("term t^{e} below target window")));
            }
            if e < target.hi {
                out.coeffs[(e - target.lo) as usize] = a;
            }
        }
        Ok(out)
    }
}

/// Inverse of the power series `a` modulo `t^n`; `a[0]` must be nonzero.
pub(crate) fn series_inverse(f: &FieldCtx, a: &[Fe], n: usize) -> Result<Vec<Fe>> {
    let a0 = *a.first().unwrap_or(&0);
    if a0 == 0 {
        return Err(Error::Domain("series is not a unit".into()));
    }
    let i0 = f.inv(a0);
    let mut b = vec![0; n];
    for k in 0..n {
        let mut s = if k == 0 { 1 } else { 0 };
        for j in 1..=k.min(a.len().saturating_sub(1)) {
            s = f.sub(s, f.mul(a[j], b[k - j]));
        }
        b[k] = f.mul(s, i0);
    }
    Ok(b)
}
