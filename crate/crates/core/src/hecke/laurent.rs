//! Sparse Laurent polynomials in `v` with integer coefficients.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i32, i128>,
}

/// `(v-exponent, coefficient)` pairs, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson(pub Vec<(i32, i128)>);

impl Serialize for Laurent {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentJson(self.terms.iter().map(|(&e, &c)| (e, c)).collect()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        let mut out = Laurent::zero();
        for (e, c) in j.0 {
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c v^e`.
    pub fn monomial(c: i128, e: i32) -> Self {
        let mut x = Self::zero();
        x.add_term(e, c);
        x
    }

    /// `q_s = v^{2e}`.
    pub fn q_power(e: i32) -> Self {
        Self::monomial(1, 2 * e)
    }

    pub fn add_term(&mut self, e: i32, c: i128) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: i32) -> i128 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (e, c) in o.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect() }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `c v^e`.
    pub fn scale(&self, c: i128, e: i32) -> Laurent {
        if c == 0 {
            return Laurent::zero();
        }
        Laurent { terms: self.terms.iter().map(|(&k, &x)| (k + e, x * c)).collect() }
    }

    /// Value at `v^2 = q` when it is an integer.
    pub fn specialize(&self, q: i128) -> Option<i128> {
        let mut num: i128 = 0;
        let shift = self.min_exp().unwrap_or(0).min(0);
        for (e, c) in self.terms() {
            if e % 2 != 0 {
                return None;
            }
            num += c * q.checked_pow(((e - shift) / 2) as u32)?;
        }
        let den = q.checked_pow((-shift / 2) as u32)?;
        (num % den == 0).then_some(num / den)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&e, &c)| match e {
                0 => format!("{c}"),
                1 => format!("{c}v"),
                _ => format!("{c}v^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}
