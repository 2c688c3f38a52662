//! Monomial model `(π, a, γ)` of the Iwahori-Weyl group.
//!
//! The element sends `e_i` to `t^{a_i} e_{π(i)}`. Indices are 0-based here
//! with pairing `i' = d-1-i`; the JSON form uses 1-based permutations.

use crate::error::{Error, Result};
use crate::gfring::{SeriesRing, TruncMatrix};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "WeylJson", try_from = "WeylJson")]
pub struct WeylElement {
    pi: Vec<usize>,
    a: Vec<i32>,
    gamma: i32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct WeylJson {
    pi: Vec<usize>,
    a: Vec<i32>,
    gamma: i32,
}

impl From<WeylElement> for WeylJson {
    fn from(w: WeylElement) -> Self {
        WeylJson { pi: w.pi.iter().map(|&x| x + 1).collect(), a: w.a, gamma: w.gamma }
    }
}

impl TryFrom<WeylJson> for WeylElement {
    type Error = Error;
    fn try_from(j: WeylJson) -> Result<Self> {
        if j.pi.contains(&0) {
            return Err(Error::InvalidInput("permutation entries are 1-based".into()));
        }
        WeylElement::new(j.pi.iter().map(|&x| x - 1).collect(), j.a, j.gamma)
    }
}

/// Cocharacter `a` with `a_i + a_{i'} = γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cocharacter {
    pub a: Vec<i32>,
    pub gamma: i32,
}

impl Cocharacter {
    pub fn new(a: Vec<i32>, gamma: i32) -> Result<Self> {
        let d = a.len();
        if d == 0 || d % 2 == 1 {
            return Err(Error::InvalidInput(format!("rank {d} is not even and positive")));
        }
        if (0..d).any(|i| a[i] + a[d - 1 - i] != gamma) {
            return Err(Error::InvalidInput(format!("{a:?} is not of similitude type {gamma}")));
        }
        Ok(Cocharacter { a, gamma })
    }

    pub fn zero(d: usize) -> Self {
        Cocharacter { a: vec![0; d], gamma: 0 }
    }

    /// `(1^{d/2}, 0^{d/2}; 1)`.
    pub fn minuscule(d: usize) -> Self {
        Cocharacter { a: (0..d).map(|i| i32::from(i < d / 2)).collect(), gamma: 1 }
    }

    pub fn d(&self) -> usize {
        self.a.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.a.windows(2).all(|w| w[0] >= w[1])
    }

    /// Dominant representative of the finite Weyl orbit.
    pub fn dominant(&self) -> Cocharacter {
        let mut a = self.a.clone();
        a.sort_unstable_by(|x, y| y.cmp(x));
        Cocharacter { a, gamma: self.gamma }
    }

    pub fn add(&self, o: &Cocharacter) -> Cocharacter {
        Cocharacter { a: self.a.iter().zip(&o.a).map(|(x, y)| x + y).collect(), gamma: self.gamma + o.gamma }
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter { a: self.a.iter().map(|x| -x).collect(), gamma: -self.gamma }
    }

    pub fn sub(&self, o: &Cocharacter) -> Cocharacter {
        self.add(&o.neg())
    }
}

impl WeylElement {
    pub fn new(pi: Vec<usize>, a: Vec<i32>, gamma: i32) -> Result<Self> {
        let d = pi.len();
        if d == 0 || d % 2 == 1 || a.len() != d {
            return Err(Error::InvalidInput("rank must be even and match".into()));
        }
        let mut seen = vec![false; d];
        for &x in &pi {
            if x >= d || seen[x] {
                return Err(Error::InvalidInput(format!("{pi:?} is not a permutation")));
            }
            seen[x] = true;
        }
        for i in 0..d {
            if pi[d - 1 - i] != d - 1 - pi[i] {
                return Err(Error::InvalidInput(format!("{pi:?} does not commute with the pairing")));
            }
            if a[i] + a[d - 1 - i] != gamma {
                return Err(Error::InvalidInput(format!("{a:?} is not of similitude type {gamma}")));
            }
        }
        Ok(WeylElement { pi, a, gamma })
    }

    pub(crate) fn new_unchecked(pi: Vec<usize>, a: Vec<i32>, gamma: i32) -> Self {
        WeylElement { pi, a, gamma }
    }

    pub fn identity(d: usize) -> Self {
        WeylElement { pi: (0..d).collect(), a: vec![0; d], gamma: 0 }
    }

    pub fn translation(l: &Cocharacter) -> Result<Self> {
        let l = Cocharacter::new(l.a.clone(), l.gamma)?;
        Ok(WeylElement { pi: (0..l.d()).collect(), a: l.a, gamma: l.gamma })
    }

    pub fn d(&self) -> usize {
        self.pi.len()
    }

    pub fn pi(&self) -> &[usize] {
        &self.pi
    }

    pub fn a(&self) -> &[i32] {
        &self.a
    }

    pub fn gamma(&self) -> i32 {
        self.gamma
    }

    pub fn is_translation(&self) -> bool {
        self.pi.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Translation part as a cocharacter when `π` is trivial.
    pub fn translation_part(&self) -> Option<Cocharacter> {
        self.is_translation().then(|| Cocharacter { a: self.a.clone(), gamma: self.gamma })
    }

    pub fn compose(&self, o: &WeylElement) -> Result<WeylElement> {
        if self.d() != o.d() {
            return Err(Error::Dimension(format!("ranks {} and {}", self.d(), o.d())));
        }
        Ok(self.mul(o))
    }

    /// Product without the rank check.
    pub fn mul(&self, o: &WeylElement) -> WeylElement {
        let pi = o.pi.iter().map(|&j| self.pi[j]).collect();
        let a = (0..self.d()).map(|i| o.a[i] + self.a[o.pi[i]]).collect();
        WeylElement { pi, a, gamma: self.gamma + o.gamma }
    }

    pub fn inverse(&self) -> WeylElement {
        let d = self.d();
        let mut pinv = vec![0; d];
        for (i, &x) in self.pi.iter().enumerate() {
            pinv[x] = i;
        }
        let a = (0..d).map(|i| -self.a[pinv[i]]).collect();
        WeylElement { pi: pinv, a, gamma: -self.gamma }
    }

    pub fn pow(&self, k: i32) -> WeylElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = WeylElement::identity(self.d());
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `(w·x)_{π(l)} = x_l + s a_l` for a scaled point `x`.
    pub fn act_scaled(&self, x: &[i64], scale: i64) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for l in 0..x.len() {
            out[self.pi[l]] = x[l] + scale * self.a[l] as i64;
        }
        out
    }

    /// Monomial matrix with entry `t^{a_i}` at `(π(i), i)`.
    pub fn matrix(&self, ring: &SeriesRing) -> Result<TruncMatrix> {
        let d = self.d();
        let mut m = TruncMatrix::zeros(ring, d, d);
        for i in 0..d {
            m.set(self.pi[i], i, &ring.monomial(1, self.a[i])?);
        }
        Ok(m)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi: Vec<String> = self.pi.iter().map(|x| (x + 1).to_string()).collect();
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}; {}; {}]", pi.join(" "), a.join(" "), self.gamma)
    }
}
