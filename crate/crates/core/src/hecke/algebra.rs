//! The Iwahori-Hecke algebra in the `T_w` basis.

use super::laurent::Laurent;
use crate::error::{Error, Result};
use crate::weyl::{GroupCtx, WeylElement};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents `e_s` with `q_s = v^{2 e_s}`, constant on conjugacy classes of simples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSystem {
    pub d: usize,
    /// Class representative of each simple reflection.
    pub classes: Vec<usize>,
    /// Exponent per class representative.
    pub exponents: BTreeMap<usize, u32>,
}

impl ParameterSystem {
    /// Validates one exponent per simple reflection.
    pub fn new(group: &GroupCtx, per_simple: &[u32]) -> Result<Self> {
        let classes = group.simple_classes();
        if per_simple.len() != classes.len() {
            return Err(Error::Dimension(format!("{} exponents for {} simple reflections", per_simple.len(), classes.len())));
        }
        let mut exponents = BTreeMap::new();
        for (s, &e) in per_simple.iter().enumerate() {
            if e == 0 {
                return Err(Error::InvalidInput(format!("exponent of s{s} must be positive")));
            }
            if let Some(&prev) = exponents.get(&classes[s]) {
                if prev != e {
                    return Err(Error::InvalidInput(format!("conjugate simples s{} and s{s} have exponents {prev} and {e}", classes[s])));
                }
            }
            exponents.insert(classes[s], e);
        }
        Ok(ParameterSystem { d: group.d(), classes, exponents })
    }

    pub fn equal(group: &GroupCtx) -> Self {
        Self::new(group, &vec![1; group.num_simple()]).expect("constant parameters are valid")
    }

    pub fn exponent(&self, s: usize) -> u32 {
        self.exponents[&self.classes[s]]
    }

    pub fn per_simple(&self) -> Vec<u32> {
        (0..self.classes.len()).map(|s| self.exponent(s)).collect()
    }
}

/// Finitely supported `Σ c_w T_w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    d: usize,
    terms: BTreeMap<WeylElement, Laurent>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeTermJson {
    pub element: WeylElement,
    pub coeffs: Laurent,
}

impl Serialize for HeckeElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<HeckeTermJson> =
            self.terms.iter().map(|(w, c)| HeckeTermJson { element: w.clone(), coeffs: c.clone() }).collect();
        v.serialize(s)
    }
}

impl HeckeElement {
    pub fn zero(d: usize) -> Self {
        HeckeElement { d, terms: BTreeMap::new() }
    }

    pub fn basis(w: &WeylElement) -> Self {
        Self::term(w, Laurent::one())
    }

    pub fn term(w: &WeylElement, c: Laurent) -> Self {
        let mut h = Self::zero(w.d());
        h.add_term(w, &c);
        h
    }

    /// Rebuilds from serialized terms; all elements must share the rank `d`.
    pub fn from_terms(d: usize, terms: Vec<HeckeTermJson>) -> Result<Self> {
        let mut h = Self::zero(d);
        for t in terms {
            if t.element.d() != d {
                return Err(Error::Dimension(format!("term of rank {} in an element of rank {d}", t.element.d())));
            }
            h.add_term(&t.element, &t.coeffs);
        }
        Ok(h)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn add_term(&mut self, w: &WeylElement, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot = slot.add(c);
        if slot.is_zero() {
            self.terms.remove(w);
        }
    }

    pub fn coeff(&self, w: &WeylElement) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &Laurent)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, o: &HeckeElement) -> Result<()> {
        if self.d == o.d {
            Ok(())
        } else {
            Err(Error::Dimension(format!("Hecke elements of ranks {} and {}", self.d, o.d)))
        }
    }

    pub fn add(&self, o: &HeckeElement) -> Result<HeckeElement> {
        self.check(o)?;
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &HeckeElement) -> Result<HeckeElement> {
        self.add(&o.scale(&Laurent::monomial(-1, 0)))
    }

    pub fn scale(&self, c: &Laurent) -> HeckeElement {
        let mut out = Self::zero(self.d);
        for (w, x) in &self.terms {
            out.add_term(w, &x.mul(c));
        }
        out
    }

    /// Value at `v^2 = q` of every coefficient, if integral.
    pub fn specialize(&self, q: i128) -> Option<BTreeMap<WeylElement, i128>> {
        self.terms.iter().map(|(w, c)| Some((w.clone(), c.specialize(q)?))).collect()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c}) T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug, Clone)]
pub struct HeckeAlgebra {
    group: GroupCtx,
    params: ParameterSystem,
}

impl HeckeAlgebra {
    pub fn new(group: GroupCtx, params: ParameterSystem) -> Result<Self> {
        if params.d != group.d() || params.classes.len() != group.num_simple() {
            return Err(Error::Dimension(format!("parameters for rank {} used with rank {}", params.d, group.d())));
        }
        Ok(HeckeAlgebra { group, params })
    }

    /// Equal parameters `q_s = v^2`.
    pub fn equal_parameters(d: usize) -> Result<Self> {
        let group = GroupCtx::new(d)?;
        let params = ParameterSystem::equal(&group);
        Ok(HeckeAlgebra { group, params })
    }

    pub fn group(&self) -> &GroupCtx {
        &self.group
    }

    pub fn params(&self) -> &ParameterSystem {
        &self.params
    }

    pub fn d(&self) -> usize {
        self.group.d()
    }

    pub fn t(&self, w: &WeylElement) -> HeckeElement {
        HeckeElement::basis(w)
    }

    pub fn unit(&self) -> HeckeElement {
        HeckeElement::basis(&WeylElement::identity(self.d()))
    }

    pub fn t_simple(&self, s: usize) -> HeckeElement {
        HeckeElement::basis(self.group.simple(s))
    }

    /// `Σ e_s` over a reduced word of `w`, so `q_w = v^{2·weight}`.
    pub fn weight(&self, w: &WeylElement) -> u32 {
        let (word, _) = self.group.reduced_word(w);
        word.iter().map(|&s| self.params.exponent(s)).sum()
    }

    fn check(&self, h: &HeckeElement) -> Result<()> {
        if h.d == self.d() {
            Ok(())
        } else {
            Err(Error::Dimension(format!("element of rank {} in the algebra of rank {}", h.d, self.d())))
        }
    }

    /// `T_s · h`.
    pub fn left_simple(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let sr = self.group.simple(s);
        let qs = Laurent::q_power(self.params.exponent(s) as i32);
        let qm1 = qs.sub(&Laurent::one());
        let mut out = HeckeElement::zero(h.d);
        for (w, c) in &h.terms {
            let sw = sr.mul(w);
            if self.group.length(&sw) > self.group.length(w) {
                out.add_term(&sw, c);
            } else {
                out.add_term(w, &c.mul(&qm1));
                out.add_term(&sw, &c.mul(&qs));
            }
        }
        out
    }

    /// `h · T_s`.
    pub fn right_simple(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let sr = self.group.simple(s);
        let qs = Laurent::q_power(self.params.exponent(s) as i32);
        let qm1 = qs.sub(&Laurent::one());
        let mut out = HeckeElement::zero(h.d);
        for (w, c) in &h.terms {
            let ws = w.mul(sr);
            if self.group.length(&ws) > self.group.length(w) {
                out.add_term(&ws, c);
            } else {
                out.add_term(w, &c.mul(&qm1));
                out.add_term(&ws, &c.mul(&qs));
            }
        }
        out
    }

    /// `T_ω · h` for a length-zero `ω`.
    pub fn left_omega(&self, omega: &WeylElement, h: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement::zero(h.d);
        for (w, c) in &h.terms {
            out.add_term(&omega.mul(w), c);
        }
        out
    }

    pub fn right_omega(&self, h: &HeckeElement, omega: &WeylElement) -> HeckeElement {
        let mut out = HeckeElement::zero(h.d);
        for (w, c) in &h.terms {
            out.add_term(&w.mul(omega), c);
        }
        out
    }

    /// `T_x · h` along a reduced word of `x`.
    pub fn left_basis(&self, x: &WeylElement, h: &HeckeElement) -> HeckeElement {
        let (word, omega) = self.group.reduced_word(x);
        let mut out = self.left_omega(&omega, h);
        for &s in word.iter().rev() {
            out = self.left_simple(s, &out);
        }
        out
    }

    pub fn multiply(&self, h1: &HeckeElement, h2: &HeckeElement) -> Result<HeckeElement> {
        self.check(h1)?;
        self.check(h2)?;
        let d = self.d();
        let terms: Vec<(&WeylElement, &Laurent)> = h1.terms.iter().collect();
        Ok(terms
            .par_iter()
            .map(|(x, c)| self.left_basis(x, h2).scale(c))
            .reduce(|| HeckeElement::zero(d), |a, b| a.add(&b).expect("same rank")))
    }

    /// `h · T_s^{-1} = q_s^{-1} h T_s + (q_s^{-1} - 1) h`.
    pub fn right_simple_inverse(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let e = self.params.exponent(s) as i32;
        let qinv = Laurent::q_power(-e);
        let a = self.right_simple(h, s).scale(&qinv);
        let b = h.scale(&qinv.sub(&Laurent::one()));
        a.add(&b).expect("same rank")
    }

    /// `T_w^{-1}`.
    pub fn inverse_t(&self, w: &WeylElement) -> HeckeElement {
        let (word, omega) = self.group.reduced_word(w);
        let mut out = HeckeElement::basis(&omega.inverse());
        for &s in word.iter().rev() {
            out = self.right_simple_inverse(&out, s);
        }
        out
    }

    pub fn commutator(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement> {
        self.multiply(a, b)?.sub(&self.multiply(b, a)?)
    }

    /// Generators of the algebra: every `T_s`, then `T_τ`.
    pub fn generators(&self) -> Vec<HeckeElement> {
        let mut g: Vec<HeckeElement> = (0..self.group.num_simple()).map(|s| self.t_simple(s)).collect();
        g.push(self.t(self.group.tau()));
        g
    }

    /// Commutators with every generator.
    pub fn commutators(&self, h: &HeckeElement) -> Result<Vec<HeckeElement>> {
        self.check(h)?;
        self.generators().iter().map(|g| self.commutator(h, g)).collect()
    }

    pub fn is_central(&self, h: &HeckeElement) -> bool {
        match self.commutators(h) {
            Ok(cs) => cs.iter().all(HeckeElement::is_zero),
            Err(_) => false,
        }
    }

    /// Checks `(T_s T_t ⋯) = (T_t T_s ⋯)` with `m_{st}` factors for every finite `m_{st}`.
    pub fn braid_relations_hold(&self) -> bool {
        let n = self.group.num_simple();
        for s in 0..n {
            for t in s + 1..n {
                let Some(m) = self.group.coxeter_entry(s, t) else { continue };
                let mut a = self.unit();
                let mut b = self.unit();
                for k in 0..m {
                    let (x, y) = if k % 2 == 0 { (s, t) } else { (t, s) };
                    a = self.right_simple(&a, x);
                    b = self.right_simple(&b, y);
                }
                if a != b {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation() {
        let h = HeckeAlgebra::equal_parameters(2).unwrap();
        let s = h.group().simple(0).clone();
        let ts = h.t(&s);
        let sq = h.multiply(&ts, &ts).unwrap();
        let q = Laurent::q_power(1);
        let expected = ts.scale(&q.sub(&Laurent::one())).add(&h.unit().scale(&q)).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn inverse_is_inverse() {
        let h = HeckeAlgebra::equal_parameters(4).unwrap();
        let w = h.group().from_word(&[0, 1, 2, 1], 1);
        let p = h.multiply(&h.t(&w), &h.inverse_t(&w)).unwrap();
        assert_eq!(p, h.unit());
    }
}
