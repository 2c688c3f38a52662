//! Bernstein elements `Θ_λ`, the central sums `z_μ` and the trace element.

use super::algebra::{HeckeAlgebra, HeckeElement};
use super::laurent::Laurent;
use crate::error::{Error, Result};
use crate::weyl::{finite_orbit, Cocharacter, WeylElement};

/// Strictly dominant `(d/2, …, 1, -1, …, -d/2)` of type zero.
pub fn regular_dominant(d: usize) -> Cocharacter {
    let half = d as i32 / 2;
    let a = (0..d as i32).map(|i| if i < half { half - i } else { half - 1 - i }).collect();
    Cocharacter { a, gamma: 0 }
}

impl HeckeAlgebra {
    fn check_cochar(&self, l: &Cocharacter) -> Result<()> {
        if l.d() != self.d() {
            return Err(Error::Dimension(format!("cocharacter of rank {} in the algebra of rank {}", l.d(), self.d())));
        }
        Cocharacter::new(l.a.clone(), l.gamma).map(|_| ())
    }

    /// `Σ e_s` over a reduced word of `t_ν`; `q(ν)^{1/2} = v^{half_weight}`.
    pub fn half_weight(&self, nu: &Cocharacter) -> Result<u32> {
        self.check_cochar(nu)?;
        Ok(self.weight(&WeylElement::translation(nu)?))
    }

    /// `q(μ) = v^{2 Σ e_s}`.
    pub fn q_index(&self, mu: &Cocharacter) -> Result<Laurent> {
        if !mu.is_dominant() {
            return Err(Error::InvalidInput(format!("{:?} is not dominant", mu.a)));
        }
        Ok(Laurent::q_power(self.half_weight(mu)? as i32))
    }

    /// `q(ν)^{-1/2} T_{t_ν}` for dominant `ν`.
    fn normalized_translation(&self, nu: &Cocharacter) -> Result<HeckeElement> {
        let e = self.half_weight(nu)? as i32;
        Ok(HeckeElement::term(&WeylElement::translation(nu)?, Laurent::monomial(1, -e)))
    }

    /// `Θ_λ` from an explicit decomposition `λ = λ₁ - λ₂` into dominant parts.
    pub fn theta_decomposed(&self, l1: &Cocharacter, l2: &Cocharacter) -> Result<HeckeElement> {
        if !l1.is_dominant() || !l2.is_dominant() {
            return Err(Error::InvalidInput("both parts of a Bernstein decomposition must be dominant".into()));
        }
        let a = self.normalized_translation(l1)?;
        let t2 = WeylElement::translation(l2)?;
        let e2 = self.half_weight(l2)? as i32;
        let b_inv = self.inverse_t(&t2).scale(&Laurent::monomial(1, e2));
        self.multiply(&a, &b_inv)
    }

    /// The canonical decomposition adds the least multiple of [`regular_dominant`].
    pub fn theta(&self, l: &Cocharacter) -> Result<HeckeElement> {
        self.check_cochar(l)?;
        let rho = regular_dominant(self.d());
        let mut k = 0i32;
        for i in 0..self.d() - 1 {
            let gap = l.a[i + 1] - l.a[i];
            let step = rho.a[i] - rho.a[i + 1];
            if gap > 0 {
                k = k.max((gap + step - 1) / step);
            }
        }
        let l2 = Cocharacter { a: rho.a.iter().map(|x| k * x).collect(), gamma: 0 };
        self.theta_decomposed(&l.add(&l2), &l2)
    }

    /// `z_μ = Σ Θ_λ` over the finite orbit of `μ`.
    pub fn bernstein_z(&self, mu: &Cocharacter) -> Result<HeckeElement> {
        self.check_cochar(mu)?;
        let mut z = HeckeElement::zero(self.d());
        for l in finite_orbit(mu) {
            z = z.add(&self.theta(&l)?)?;
        }
        Ok(z)
    }

    /// `(-1)^{ℓ(μ)} q(μ)^{1/2} z_μ` with `ℓ(μ) = Σ e_s` over a reduced word of `t_μ`.
    pub fn sstrace_element(&self, mu: &Cocharacter) -> Result<HeckeElement> {
        let mu_d = mu.dominant();
        let e = self.half_weight(&mu_d)? as i32;
        let sign = if e % 2 == 0 { 1 } else { -1 };
        Ok(self.bernstein_z(mu)?.scale(&Laurent::monomial(sign, e)))
    }
}
