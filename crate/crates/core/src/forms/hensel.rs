//! Newton lifting of approximate similitudes over `F[t]/t^h`.
//!
//! With `X = g^T G conj(g) - c G` vanishing modulo `t^k`, the correction
//! `M = (-½ X (G conj(g))^{-1})^T` makes `g + M` exact modulo `t^{2k}`.
//! `M` vanishes modulo `t`, so lattices fixed by `g` modulo `t` stay fixed.

use super::hermitian::HermitianForm;
use crate::error::{Error, Result};
use crate::gfring::{Submodule, TruncMatrix, TruncSeries};

/// `g^T G conj(g) - c G`.
pub fn similitude_defect(g: &TruncMatrix, gram: &TruncMatrix, c: &TruncSeries) -> Result<TruncMatrix> {
    let lhs = g.transpose().mul(gram)?.mul(&g.conj()?)?;
    lhs.sub(&gram.scale(c)?)
}

pub fn is_similitude(g: &TruncMatrix, gram: &TruncMatrix, c: &TruncSeries) -> Result<bool> {
    Ok(similitude_defect(g, gram, c)?.is_zero())
}

fn preserves(g: &TruncMatrix, flags: &[Submodule]) -> Result<bool> {
    for l in flags {
        if &l.apply_matrix(g)? != l {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn hensel_unitarize(g: &TruncMatrix, phi: &HermitianForm, c: &TruncSeries, flags: &[Submodule]) -> Result<TruncMatrix> {
    let gram = phi.gram();
    let ring = g.ring();
    if gram.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let f = ring.field();
    if f.p() == 2 {
        return Err(Error::Domain("characteristic 2".into()));
    }
    if &ring.conj(c)? != c {
        return Err(Error::InvalidInput("multiplier is not fixed by conjugation".into()));
    }
    if !similitude_defect(g, gram, c)?.divisible_by(1) {
        return Err(Error::NotSimilitude("reduction modulo t is not a similitude".into()));
    }
    if !preserves(g, flags)? {
        return Err(Error::InvalidInput("input does not preserve the flag bounds".into()));
    }
    let minus_half = f.neg(f.inv(f.from_int(2)));
    let scalar = ring.monomial(minus_half, 0)?;
    let mut cur = g.clone();
    let mut k = 1;
    while k < ring.width() {
        let x = similitude_defect(&cur, gram, c)?;
        if x.is_zero() {
            break;
        }
        let y = gram.mul(&cur.conj()?)?.inverse()?;
        let m = x.mul(&y)?.scale(&scalar)?.transpose();
        cur = cur.add(&m)?;
        k *= 2;
    }
    if !is_similitude(&cur, gram, c)? {
        return Err(Error::Internal("Newton iteration did not converge".into()));
    }
    if !preserves(&cur, flags)? {
        return Err(Error::Internal("lifted matrix leaves a flag bound".into()));
    }
    Ok(cur)
}
