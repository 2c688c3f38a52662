//! Prime fields and their quadratic extensions, table driven.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Field element encoded as the integer `c0 + c1 p` for `c0 + c1 x` modulo the stored polynomial.
pub type Fe = u32;

const MAX_ORDER: u32 = 4096;

/// Arithmetic context for `F_p` (deg 1) or `F_{p^2}` (deg 2).
#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u32,
    deg: u32,
    order: u32,
    modulus: Vec<u32>,
    add_t: Vec<Fe>,
    neg_t: Vec<Fe>,
    log_t: Vec<u32>,
    exp_t: Vec<Fe>,
    inv_t: Vec<Fe>,
    frob_t: Vec<Fe>,
    generator: Fe,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.deg == other.deg && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

/// Header used when serializing field elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldHeader {
    pub p: u32,
    pub deg: u32,
    pub modulus: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl FieldCtx {
    /// `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::with_modulus(p, vec![0, 1])
    }

    /// `F_{p^2}` with the first monic irreducible `x^2 + a x + b` in `(a, b)` order.
    pub fn quadratic(p: u32) -> Result<Self> {
        check_p(p)?;
        for a in 0..p {
            for b in 1..p {
                let disc = ((a as u64 * a as u64) + 4 * (p - b) as u64) % p as u64;
                if disc != 0 && pow_mod(disc, (p as u64 - 1) / 2, p as u64) == p as u64 - 1 {
                    return Self::with_modulus(p, vec![b, a, 1]);
                }
            }
        }
        Err(Error::InvalidField(format!("no irreducible quadratic mod {p}")))
    }

    pub fn new(p: u32, deg: u32) -> Result<Self> {
        match deg {
            1 => Self::prime(p),
            2 => Self::quadratic(p),
            _ => Err(Error::InvalidField(format!("degree {deg} unsupported"))),
        }
    }

    /// Builds the tables for an explicit monic modulus given low coefficient first.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        check_p(p)?;
        let deg = modulus.len() as u32 - 1;
        if !(1..=2).contains(&deg) || modulus[deg as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField("modulus must be monic of degree 1 or 2".into()));
        }
        let order = p.pow(deg);
        if order > MAX_ORDER {
            return Err(Error::InvalidField(format!("field of order {order} exceeds table limit")));
        }
        if deg == 2 {
            let (b, a) = (modulus[0] as u64, modulus[1] as u64);
            let pp = p as u64;
            if (0..pp).any(|x| (x * x + a * x + b) % pp == 0) {
                return Err(Error::InvalidField("modulus is reducible".into()));
            }
        }
        let digits = |x: u32| -> [u64; 2] { [(x % p) as u64, if deg == 2 { (x / p) as u64 } else { 0 }] };
        let enc = |c: [u64; 2]| -> u32 { c[0] as u32 + if deg == 2 { c[1] as u32 * p } else { 0 } };
        let pp = p as u64;
        let slow_mul = |x: u32, y: u32| -> u32 {
            let (a, b) = (digits(x), digits(y));
            if deg == 1 {
                return enc([a[0] * b[0] % pp, 0]);
            }
            // x^2 = -a1 x - b0
            let c0 = a[0] * b[0];
            let c1 = a[0] * b[1] + a[1] * b[0];
            let c2 = a[1] * b[1] % pp;
            let m0 = modulus[0] as u64;
            let m1 = modulus[1] as u64;
            let r0 = (c0 + c2 * (pp - m0)) % pp;
            let r1 = (c1 + c2 * (pp - m1)) % pp;
            enc([r0, r1])
        };
        let n = order as usize;
        let mut add_t = vec![0; n * n];
        let mut neg_t = vec![0; n];
        for x in 0..order {
            let a = digits(x);
            neg_t[x as usize] = enc([(pp - a[0]) % pp, (pp - a[1]) % pp]);
            for y in 0..order {
                let b = digits(y);
                add_t[x as usize * n + y as usize] = enc([(a[0] + b[0]) % pp, (a[1] + b[1]) % pp]);
            }
        }
        let generator = (1..order)
            .find(|&g| {
                let mut x = g;
                let mut k = 1;
                while x != 1 {
                    x = slow_mul(x, g);
                    k += 1;
                }
                k == order - 1
            })
            .ok_or_else(|| Error::Internal("no multiplicative generator".into()))?;
        let m = (order - 1) as usize;
        let mut exp_t = vec![0; 2 * m];
        let mut log_t = vec![0; n];
        let mut x = 1;
        for k in 0..m {
            exp_t[k] = x;
            exp_t[k + m] = x;
            log_t[x as usize] = k as u32;
            x = slow_mul(x, generator);
        }
        let mut inv_t = vec![0; n];
        for x in 1..order {
            inv_t[x as usize] = exp_t[(m - log_t[x as usize] as usize) % m];
        }
        let mut frob_t = vec![0; n];
        for x in 1..order {
            frob_t[x as usize] = exp_t[(log_t[x as usize] as usize * p as usize) % m];
        }
        Ok(FieldCtx { p, deg, order, modulus, add_t, neg_t, log_t, exp_t, inv_t, frob_t, generator })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Generator of the multiplicative group used by the log tables.
    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn header(&self) -> FieldHeader {
        FieldHeader { p: self.p, deg: self.deg, modulus: self.modulus.clone() }
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add_t[a as usize * self.order as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp_t[(self.log_t[a as usize] + self.log_t[b as usize]) as usize]
        }
    }

    /// Inverse of a nonzero element.
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        debug_assert!(a != 0, "inverse of zero");
        self.inv_t[a as usize]
    }

    pub fn checked_inv(&self, a: Fe) -> Result<Fe> {
        if a == 0 {
            Err(Error::Domain("inverse of zero".into()))
        } else {
            Ok(self.inv_t[a as usize])
        }
    }

    #[inline]
    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let m = (self.order - 1) as u64;
        self.exp_t[((self.log_t[a as usize] as u64 * (e % m)) % m) as usize]
    }

    /// Frobenius `x ↦ x^p`; the identity on `F_p`.
    #[inline]
    pub fn frob(&self, a: Fe) -> Fe {
        self.frob_t[a as usize]
    }

    /// `g^k` for the stored generator.
    pub fn exp(&self, k: i64) -> Fe {
        let m = (self.order - 1) as i64;
        self.exp_t[k.rem_euclid(m) as usize]
    }

    /// Discrete log base the stored generator.
    pub fn log(&self, a: Fe) -> Option<u32> {
        (a != 0).then(|| self.log_t[a as usize])
    }

    /// Embeds an integer of the prime field.
    pub fn from_int(&self, k: i64) -> Fe {
        k.rem_euclid(self.p as i64) as Fe
    }

    /// True for elements of the prime subfield.
    pub fn is_prime_subfield(&self, a: Fe) -> bool {
        a < self.p
    }

    /// Coordinates over `F_p` in the basis `1, x`.
    pub fn coords(&self, a: Fe) -> [u32; 2] {
        [a % self.p, a / self.p]
    }

    pub fn from_coords(&self, c: [u32; 2]) -> Fe {
        c[0] % self.p + if self.deg == 2 { (c[1] % self.p) * self.p } else { 0 }
    }

    /// Trace to the prime field, as an element of the prime field.
    pub fn trace(&self, a: Fe) -> Fe {
        if self.deg == 1 {
            a
        } else {
            self.add(a, self.frob(a))
        }
    }

    /// Norm to the prime field.
    pub fn norm(&self, a: Fe) -> Fe {
        if self.deg == 1 {
            a
        } else {
            self.mul(a, self.frob(a))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.order
    }
}

fn check_p(p: u32) -> Result<()> {
    if p == 2 {
        return Err(Error::InvalidField("characteristic 2 is excluded".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    Ok(())
}
