//! Matrices over a truncated series ring, stored column by column.

use super::field::{Fe, FieldCtx};
use super::series::{SeriesRing, TruncSeries};
use crate::error::{Error, Result};

/// `rows x cols` matrix; every entry lives in the ring window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncMatrix {
    ring: SeriesRing,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// In a block of `rows` series of width `w`: `dst -= s * src` where `s` has exponents `0..`.
pub(crate) fn sub_mul_column(f: &FieldCtx, w: usize, dst: &mut [Fe], s: &[Fe], src: &[Fe]) {
    for (k, &c) in s.iter().enumerate() {
        if c == 0 || k >= w {
            continue;
        }
        let nc = f.neg(c);
        for (drow, srow) in dst.chunks_mut(w).zip(src.chunks(w)) {
            for i in 0..w - k {
                let b = srow[i];
                if b != 0 {
                    drow[i + k] = f.add(drow[i + k], f.mul(nc, b));
                }
            }
        }
    }
}

/// `s * col` for `s` with exponents `0..`, truncated at the window top.
pub(crate) fn mul_column(f: &FieldCtx, w: usize, s: &[Fe], col: &[Fe]) -> Vec<Fe> {
    let mut out = vec![0; col.len()];
    for (k, &c) in s.iter().enumerate() {
        if c == 0 || k >= w {
            continue;
        }
        for (orow, crow) in out.chunks_mut(w).zip(col.chunks(w)) {
            for i in 0..w - k {
                let b = crow[i];
                if b != 0 {
                    orow[i + k] = f.add(orow[i + k], f.mul(c, b));
                }
            }
        }
    }
    out
}

/// Multiplies a column by `t^k` (`k >= 0`), truncating at the top.
pub(crate) fn shift_column(w: usize, col: &[Fe], k: usize) -> Vec<Fe> {
    let mut out = vec![0; col.len()];
    if k < w {
        for (orow, crow) in out.chunks_mut(w).zip(col.chunks(w)) {
            orow[k..].copy_from_slice(&crow[..w - k]);
        }
    }
    out
}

impl TruncMatrix {
    pub fn zeros(ring: &SeriesRing, rows: usize, cols: usize) -> Self {
        TruncMatrix { ring: ring.clone(), rows, cols, data: vec![0; rows * cols * ring.width()] }
    }

    pub fn identity(ring: &SeriesRing, n: usize) -> Result<Self> {
        let mut m = Self::zeros(ring, n, n);
        let one = ring.one()?;
        for i in 0..n {
            m.set(i, i, &one);
        }
        Ok(m)
    }

    /// Anti-identity `J`.
    pub fn anti_identity(ring: &SeriesRing, n: usize) -> Result<Self> {
        let mut m = Self::zeros(ring, n, n);
        let one = ring.one()?;
        for i in 0..n {
            m.set(i, n - 1 - i, &one);
        }
        Ok(m)
    }

    /// Builds from row-major entries.
    pub fn from_entries(ring: &SeriesRing, rows: usize, cols: usize, entries: &[TruncSeries]) -> Result<Self> {
        if entries.len() != rows * cols || entries.iter().any(|e| e.coeffs.len() != ring.width()) {
            return Err(Error::Dimension("entry list does not match the shape".into()));
        }
        let mut m = Self::zeros(ring, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, &entries[r * cols + c]);
            }
        }
        Ok(m)
    }

    /// Builds from flat columns (`rows * width` coefficients each).
    pub fn from_columns(ring: &SeriesRing, rows: usize, columns: &[Vec<Fe>]) -> Result<Self> {
        let len = rows * ring.width();
        if columns.iter().any(|c| c.len() != len) {
            return Err(Error::Dimension("column length mismatch".into()));
        }
        let mut data = Vec::with_capacity(len * columns.len());
        for c in columns {
            data.extend_from_slice(c);
        }
        Ok(TruncMatrix { ring: ring.clone(), rows, cols: columns.len(), data })
    }

    pub fn ring(&self) -> &SeriesRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn off(&self, r: usize, c: usize) -> usize {
        (c * self.rows + r) * self.ring.width()
    }

    pub fn entry(&self, r: usize, c: usize) -> TruncSeries {
        let o = self.off(r, c);
        TruncSeries { coeffs: self.data[o..o + self.ring.width()].to_vec() }
    }

    pub fn entry_coeffs(&self, r: usize, c: usize) -> &[Fe] {
        let o = self.off(r, c);
        &self.data[o..o + self.ring.width()]
    }

    pub fn set(&mut self, r: usize, c: usize, x: &TruncSeries) {
        let o = self.off(r, c);
        let w = self.ring.width();
        self.data[o..o + w].copy_from_slice(&x.coeffs);
    }

    pub fn column(&self, c: usize) -> &[Fe] {
        let len = self.rows * self.ring.width();
        &self.data[c * len..(c + 1) * len]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[Fe]> {
        let len = (self.rows * self.ring.width()).max(1);
        self.data.chunks(len).take(self.cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &TruncMatrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("shape mismatch".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncMatrix) -> Result<TruncMatrix> {
        self.check_same(other)?;
        let f = self.ring.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(TruncMatrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &TruncMatrix) -> Result<TruncMatrix> {
        self.check_same(other)?;
        let f = self.ring.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Ok(TruncMatrix { data, ..self.clone() })
    }

    /// Every entry multiplied by the series `s`.
    pub fn scale(&self, s: &TruncSeries) -> Result<TruncMatrix> {
        let mut out = self.clone();
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, &self.ring.mul(s, &self.entry(r, c))?);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &TruncMatrix) -> Result<TruncMatrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let ring = &self.ring;
        let mut out = TruncMatrix::zeros(ring, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    let p = ring.mul(&self.entry(r, k), &other.entry(k, c))?;
                    acc = ring.add(&acc, &p);
                }
                out.set(r, c, &acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> TruncMatrix {
        let mut out = TruncMatrix::zeros(&self.ring, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, &self.entry(r, c));
            }
        }
        out
    }

    /// Entry-wise conjugation.
    pub fn conj(&self) -> Result<TruncMatrix> {
        if self.ring.field().deg() != 2 {
            return Err(Error::Domain("conjugation needs a quadratic coefficient field".into()));
        }
        let f = self.ring.field();
        Ok(TruncMatrix { data: self.data.iter().map(|&a| f.frob(a)).collect(), ..self.clone() })
    }

    /// Constant coefficients (row-major); requires `lo <= 0`.
    pub fn reduce_mod_t(&self) -> Vec<Fe> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.push(self.ring.coeff(&self.entry(r, c), 0));
            }
        }
        out
    }

    /// True when every entry has only exponents `>= e`.
    pub fn divisible_by(&self, e: i32) -> bool {
        let lo = self.ring.lo();
        let w = self.ring.width();
        self.data.chunks(w.max(1)).all(|s| s.iter().enumerate().all(|(k, &c)| c == 0 || k as i32 + lo >= e))
    }

    /// Re-expresses the matrix in another window.
    pub fn convert(&self, target: &SeriesRing) -> Result<TruncMatrix> {
        let mut out = TruncMatrix::zeros(target, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, &self.ring.convert(&self.entry(r, c), target)?);
            }
        }
        Ok(out)
    }

    /// Inverse over `F[t]/t^hi` (window must start at 0).
    pub fn inverse(&self) -> Result<TruncMatrix> {
        let ring = &self.ring;
        if ring.lo() != 0 {
            return Err(Error::Domain("matrix inversion needs window starting at 0".into()));
        }
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<TruncSeries>> = (0..n).map(|r| (0..n).map(|c| self.entry(r, c)).collect()).collect();
        let id = TruncMatrix::identity(ring, n)?;
        let mut b: Vec<Vec<TruncSeries>> = (0..n).map(|r| (0..n).map(|c| id.entry(r, c)).collect()).collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| ring.coeff(&a[r][col], 0) != 0)
                .ok_or_else(|| Error::Domain("matrix is not invertible modulo t".into()))?;
            a.swap(col, piv);
            b.swap(col, piv);
            let u = ring.inv(&a[col][col])?;
            for c in 0..n {
                a[col][c] = ring.mul(&u, &a[col][c])?;
                b[col][c] = ring.mul(&u, &b[col][c])?;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let s = a[r][col].clone();
                for c in 0..n {
                    let x = ring.mul(&s, &a[col][c])?;
                    a[r][c] = ring.sub(&a[r][c], &x);
                    let y = ring.mul(&s, &b[col][c])?;
                    b[r][c] = ring.sub(&b[r][c], &y);
                }
            }
        }
        let flat: Vec<TruncSeries> = b.into_iter().flatten().collect();
        TruncMatrix::from_entries(ring, n, n, &flat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    #[test]
    fn inverse_roundtrip() {
        let ring = SeriesRing::new(Arc::new(FieldCtx::quadratic(3).unwrap()), 0, 3).unwrap();
        let e = |v: Vec<Fe>| ring.from_coeffs(v).unwrap();
        let m = TruncMatrix::from_entries(&ring, 2, 2, &[e(vec![0, 1, 2]), e(vec![1, 0, 0]), e(vec![4, 3, 0]), e(vec![0, 0, 5])]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), TruncMatrix::identity(&ring, 2).unwrap());
    }
}
