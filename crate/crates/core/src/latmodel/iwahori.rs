//! Random elements of the Iwahori subgroup over `F[t]/t^h`.
//!
//! Generators are products of torus elements, root elements
//! `1 + z E_ij - conj(z) E_{j'i'}` and anti-fixed elements `1 + z E_{ii'}`,
//! with `z ∈ tS` below the diagonal, followed by a `t`-perturbation that is
//! repaired by Hensel lifting.

use crate::error::Result;
use crate::forms::{hensel_unitarize, is_similitude, HermitianForm};
use crate::gfring::{Fe, FieldCtx, SeriesRing, Submodule, TruncMatrix, TruncSeries};
use rand::Rng;
use std::sync::Arc;

/// Ring `F[t]/t^h` with the standard chain in the window `[-1, h-1)`.
#[derive(Debug, Clone)]
pub struct IwahoriSampler {
    pub ring: SeriesRing,
    pub form: HermitianForm,
    pub flags: Vec<Submodule>,
    d: usize,
}

fn random_series(f: &FieldCtx, ring: &SeriesRing, rng: &mut impl Rng, from: usize) -> TruncSeries {
    let mut c = vec![0; ring.width()];
    for x in c.iter_mut().skip(from) {
        *x = rng.gen_range(0..f.order());
    }
    ring.from_coeffs(c).expect("coefficients in range")
}

impl IwahoriSampler {
    pub fn new(field: Arc<FieldCtx>, d: usize, h: usize) -> Result<Self> {
        let ring = SeriesRing::new(field.clone(), 0, h as i32)?;
        let vec_ring = SeriesRing::new(field, -1, h as i32 - 1)?;
        let form = HermitianForm::new(&vec_ring, TruncMatrix::anti_identity(&ring, d)?, 0)?;
        let flags = (0..=d)
            .map(|i| {
                let b: Vec<i32> = (0..d).map(|r| -((r < i) as i32)).collect();
                Submodule::diagonal(&vec_ring, &b)
            })
            .collect::<Result<_>>()?;
        Ok(IwahoriSampler { ring, form, flags, d })
    }

    fn field(&self) -> &FieldCtx {
        self.ring.field()
    }

    fn unit(&self, rng: &mut impl Rng) -> TruncSeries {
        let f = self.field();
        let mut u = random_series(f, &self.ring, rng, 1);
        let mut c = u.coeffs().to_vec();
        c[0] = rng.gen_range(1..f.order());
        u = self.ring.from_coeffs(c).expect("in range");
        u
    }

    /// `diag(u_i)` with `u_{i'} = 1 / conj(u_i)`.
    pub fn torus(&self, rng: &mut impl Rng) -> Result<TruncMatrix> {
        let d = self.d;
        let mut g = TruncMatrix::zeros(&self.ring, d, d);
        for i in 0..d / 2 {
            let u = self.unit(rng);
            let v = self.ring.inv(&self.ring.conj(&u)?)?;
            g.set(i, i, &u);
            g.set(d - 1 - i, d - 1 - i, &v);
        }
        Ok(g)
    }

    /// `1 + z E_ij - conj(z) E_{j'i'}` for `j ≠ i'`, or `1 + z E_{ii'}` with `z` anti-fixed.
    pub fn root(&self, i: usize, j: usize, z: &TruncSeries) -> Result<TruncMatrix> {
        let d = self.d;
        let mut g = TruncMatrix::identity(&self.ring, d)?;
        if j == d - 1 - i {
            g.set(i, j, z);
        } else {
            g.set(i, j, z);
            g.set(d - 1 - j, d - 1 - i, &self.ring.neg(&self.ring.conj(z)?));
        }
        Ok(g)
    }

    fn random_root(&self, rng: &mut impl Rng) -> Result<TruncMatrix> {
        let d = self.d;
        let f = self.field();
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d - 1);
        if j >= i {
            j += 1;
        }
        let from = usize::from(i > j);
        let z = if j == d - 1 - i {
            let zeta = crate::forms::default_zeta(f)?;
            let mut c = vec![0; self.ring.width()];
            for x in c.iter_mut().skip(from) {
                *x = f.mul(zeta, rng.gen_range(0..f.p()));
            }
            self.ring.from_coeffs(c)?
        } else {
            random_series(f, &self.ring, rng, from)
        };
        self.root(i, j, &z)
    }

    /// Exact Iwahori element with multiplier 1.
    pub fn sample(&self, rng: &mut impl Rng) -> Result<TruncMatrix> {
        let mut g = self.torus(rng)?;
        for _ in 0..3 {
            g = g.mul(&self.random_root(rng)?)?;
        }
        let f = self.field();
        let mut p = TruncMatrix::zeros(&self.ring, self.d, self.d);
        for r in 0..self.d {
            for c in 0..self.d {
                p.set(r, c, &random_series(f, &self.ring, rng, 1));
            }
        }
        let perturbed = g.add(&p)?;
        let one = self.ring.one()?;
        hensel_unitarize(&perturbed, &self.form, &one, &self.flags)
    }

    /// Similitude with multiplier 1 fixing every lattice of the standard chain.
    pub fn is_iwahori(&self, g: &TruncMatrix) -> Result<bool> {
        let one = self.ring.one()?;
        if !is_similitude(g, self.form.gram(), &one)? {
            return Ok(false);
        }
        for l in &self.flags {
            if &l.apply_matrix(g)? != l {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `count` seeded generators acting on windows of width `h`.
pub fn iwahori_generators(field: Arc<FieldCtx>, d: usize, h: usize, count: usize, rng: &mut impl Rng) -> Result<Vec<TruncMatrix>> {
    let s = IwahoriSampler::new(field, d, h)?;
    (0..count).map(|_| s.sample(rng)).collect()
}

/// Matrix entries as nested coefficient lists, row-major.
pub fn matrix_coeffs(g: &TruncMatrix) -> Vec<Vec<Vec<Fe>>> {
    (0..g.rows()).map(|r| (0..g.cols()).map(|c| g.entry_coeffs(r, c).to_vec()).collect()).collect()
}
