//! Truncation windows `M^(m,n)` and their shared arithmetic context.

use crate::error::{Error, Result};
use crate::forms::HermitianForm;
use crate::gfring::{FieldCtx, SeriesRing, Submodule};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelWindow {
    pub d: usize,
    pub q: u32,
    pub m: i32,
    pub n: i32,
}

impl ModelWindow {
    pub fn new(d: usize, q: u32, m: i32, n: i32) -> Result<Self> {
        if d < 2 || d % 2 == 1 {
            return Err(Error::InvalidInput(format!("d = {d} must be even and at least 2")));
        }
        if m < 0 || n < 0 {
            return Err(Error::InvalidInput("m and n must be natural numbers".into()));
        }
        if q == 2 || !crate::gfring::field::is_prime(q) {
            return Err(Error::InvalidInput(format!("q = {q} must be an odd prime")));
        }
        Ok(ModelWindow { d, q, m, n })
    }

    /// Similitude type `γ = n - m` of every point.
    pub fn gamma(&self) -> i32 {
        self.n - self.m
    }

    /// Exponent vector of the standard chain member `λ_i`, any integer `i`.
    pub fn standard_exponents(&self, i: i64) -> Vec<i32> {
        let d = self.d as i64;
        let (s, i0) = (i.div_euclid(d), i.rem_euclid(d));
        (0..self.d).map(|r| -(((r as i64) < i0) as i32) - s as i32).collect()
    }

    /// Target dimension of `L_i` inside the window.
    pub fn member_dim(&self, i: usize) -> usize {
        self.d * (self.m + self.n) as usize / 2 + i
    }

    pub fn context(&self) -> Result<ModelCtx> {
        ModelCtx::new(*self)
    }
}

/// Field, ring and form for a window, built once.
#[derive(Debug, Clone)]
pub struct ModelCtx {
    pub window: ModelWindow,
    pub field: Arc<FieldCtx>,
    pub ring: SeriesRing,
    pub form: HermitianForm,
}

impl ModelCtx {
    pub fn new(window: ModelWindow) -> Result<Self> {
        let field = Arc::new(FieldCtx::quadratic(window.q)?);
        let ring = SeriesRing::new(field.clone(), -(window.m + 1), window.n)?;
        let form = HermitianForm::standard(&ring, window.d)?;
        Ok(ModelCtx { window, field, ring, form })
    }

    /// `t^k λ_i` in the window.
    pub fn standard_lattice(&self, i: i64, k: i32) -> Result<Submodule> {
        let b: Vec<i32> = self.window.standard_exponents(i).iter().map(|x| x + k).collect();
        Submodule::diagonal(&self.ring, &b)
    }
}
