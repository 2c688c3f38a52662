//! Helpers shared by the integration tests. Everything here is written
//! against first principles so it can act as an oracle.

#![allow(dead_code)]

use localmodel::forms::{default_zeta, FormGram, FormKind};
use localmodel::gfring::{Fe, FieldCtx, SeriesRing, Submodule, TruncMatrix, TruncSeries};
use localmodel::latmodel::IwahoriSampler;
use localmodel::weyl::{equivariant_perms, WeylElement};
use num_bigint::BigInt;
use rand::Rng;
use std::sync::Arc;

/// Multiplication in `F_p[x]/(modulus)` on the digit encoding, without tables.
pub fn poly_mul(p: u32, modulus: &[u32], a: Fe, b: Fe) -> Fe {
    let p64 = p as u64;
    if modulus.len() == 2 {
        return ((a as u64 * b as u64) % p64) as Fe;
    }
    let (a0, a1) = ((a % p) as u64, (a / p) as u64);
    let (b0, b1) = ((b % p) as u64, (b / p) as u64);
    let c0 = a0 * b0;
    let c1 = a0 * b1 + a1 * b0;
    let c2 = a1 * b1 % p64;
    let (m0, m1) = (modulus[0] as u64, modulus[1] as u64);
    let r0 = (c0 + c2 * (p64 - m0)) % p64;
    let r1 = (c1 + c2 * (p64 - m1)) % p64;
    (r0 + r1 * p64) as Fe
}

pub fn poly_add(p: u32, a: Fe, b: Fe) -> Fe {
    let (a0, a1) = (a % p, a / p);
    let (b0, b1) = (b % p, b / p);
    (a0 + b0) % p + ((a1 + b1) % p) * p
}

pub fn poly_pow(p: u32, modulus: &[u32], a: Fe, e: u64) -> Fe {
    let mut r = 1;
    for _ in 0..e {
        r = poly_mul(p, modulus, r, a);
    }
    r
}

/// Rank of a family of vectors over the field by plain Gaussian elimination.
pub fn rank(f: &FieldCtx, vecs: &[Vec<Fe>]) -> usize {
    let mut rows: Vec<Vec<Fe>> = vecs.to_vec();
    let n = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        let piv: Vec<Fe> = rows[r].iter().map(|&x| f.mul(x, inv)).collect();
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let k = rows[i][c];
                for j in 0..n {
                    rows[i][j] = f.sub(rows[i][j], f.mul(k, piv[j]));
                }
            }
        }
        rows[r] = piv;
        r += 1;
    }
    r
}

pub fn in_span(f: &FieldCtx, basis: &[Vec<Fe>], v: &[Fe]) -> bool {
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(f, &with) == rank(f, basis)
}

/// All `t^k g` that stay inside the window, as flat vectors.
pub fn t_orbit(ring: &SeriesRing, d: usize, gens: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let w = ring.width();
    let mut out = Vec::new();
    for g in gens {
        for k in 0..w {
            let mut v = vec![0; d * w];
            for r in 0..d {
                for i in 0..w - k {
                    v[r * w + i + k] = g[r * w + i];
                }
            }
            out.push(v);
        }
    }
    out
}

pub fn random_vector(f: &FieldCtx, len: usize, rng: &mut impl Rng) -> Vec<Fe> {
    (0..len).map(|_| rng.gen_range(0..f.order())).collect()
}

pub fn random_series(ring: &SeriesRing, rng: &mut impl Rng) -> TruncSeries {
    ring.from_coeffs(random_vector(ring.field(), ring.width(), rng)).unwrap()
}

/// Submodule spanned by a few random vectors, sparse enough to vary in size.
pub fn random_submodule(ring: &SeriesRing, d: usize, rng: &mut impl Rng) -> Submodule {
    let f = ring.field();
    let w = ring.width();
    let k = rng.gen_range(0..=d);
    let cols = (0..k)
        .map(|_| {
            (0..d * w)
                .map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..f.order()) } else { 0 })
                .collect()
        })
        .collect();
    Submodule::from_columns(ring, d, cols)
}

pub fn ring(q: u32, lo: i32, hi: i32) -> SeriesRing {
    SeriesRing::new(Arc::new(FieldCtx::quadratic(q).unwrap()), lo, hi).unwrap()
}

pub fn random_hermitian(f: &FieldCtx, d: usize, rng: &mut impl Rng) -> FormGram {
    let mut e = vec![0; d * d];
    for i in 0..d {
        for j in i..d {
            if i == j {
                e[i * d + i] = rng.gen_range(0..f.p());
            } else {
                let x = rng.gen_range(0..f.order());
                e[i * d + j] = x;
                e[j * d + i] = f.frob(x);
            }
        }
    }
    FormGram { kind: FormKind::Hermitian, size: d, entries: e }
}

/// `Tr(ζ φ(v, w))` for `F_p`-vectors mapped into `K^d` by `u ↦ u_i + u_{d+i} θ`.
pub fn psi_oracle(f: &FieldCtx, h: &FormGram, zeta: Fe, u: &[u32], u2: &[u32]) -> Fe {
    let d = h.size;
    let theta = f.p();
    let lift = |x: &[u32]| -> Vec<Fe> { (0..d).map(|i| f.add(x[i], f.mul(x[d + i], theta))).collect() };
    let (v, w) = (lift(u), lift(u2));
    let mut s = 0;
    for i in 0..d {
        for j in 0..d {
            s = f.add(s, f.mul(f.mul(v[i], h.get(i, j)), f.frob(w[j])));
        }
    }
    f.trace(f.mul(zeta, s))
}

pub fn det_oracle(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, &x)| x).collect()).collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det_oracle(&minor)
        })
        .sum()
}

pub fn valuation(mut x: i128, p: i128) -> u32 {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub fn big(m: &[Vec<i128>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// `Σ_r g_{ri} conj(g_{r'j})` for the anti-identity form, by direct convolution.
pub fn gram_oracle(g: &TruncMatrix) -> Vec<Vec<Vec<Fe>>> {
    let r = g.ring();
    let f = r.field();
    let d = g.rows();
    let w = r.width();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let mut out = vec![0; w];
                    for row in 0..d {
                        let a = g.entry_coeffs(row, i);
                        let b = g.entry_coeffs(d - 1 - row, j);
                        for x in 0..w {
                            for y in 0..w - x {
                                out[x + y] = f.add(out[x + y], f.mul(a[x], f.frob(b[y])));
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect()
}

pub fn preserves_standard_chain(g: &TruncMatrix) -> bool {
    (0..g.rows()).all(|r| (0..r).all(|c| g.entry_coeffs(r, c)[0] == 0))
}

pub fn exact_iwahori(s: &IwahoriSampler, d: usize, rng: &mut impl Rng) -> TruncMatrix {
    let r = &s.ring;
    let f = r.field();
    let zeta = default_zeta(f).unwrap();
    let mut g = s.torus(rng).unwrap();
    for _ in 0..4 {
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        let mut c = random_vector(f, r.width(), rng);
        if i > j {
            c[0] = 0;
        }
        if j == d - 1 - i {
            c = c.iter().map(|_| f.mul(zeta, rng.gen_range(0..f.p()))).collect();
            if i > j {
                c[0] = 0;
            }
        }
        g = g.mul(&s.root(i, j, &r.from_coeffs(c).unwrap()).unwrap()).unwrap();
    }
    g
}

/// A random matrix invertible over `F[t]/t^h`: unit diagonal times elementary operations.
pub fn random_invertible(r: &SeriesRing, n: usize, rng: &mut impl Rng) -> TruncMatrix {
    let f = r.field();
    let mut u = TruncMatrix::identity(r, n).unwrap();
    for i in 0..n {
        let c = rng.gen_range(1..f.order());
        u.set(i, i, &r.monomial(c, 0).unwrap());
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let mut e = TruncMatrix::identity(r, n).unwrap();
        e.set(i, j, &random_series(r, rng));
        u = u.mul(&e).unwrap();
    }
    u
}

pub fn random_element(d: usize, rng: &mut impl Rng) -> WeylElement {
    let perms = equivariant_perms(d);
    let pi = perms[rng.gen_range(0..perms.len())].clone();
    let gamma = rng.gen_range(-2..=2);
    let mut a = vec![0; d];
    for i in 0..d / 2 {
        a[i] = rng.gen_range(-2..=2);
        a[d - 1 - i] = gamma - a[i];
    }
    WeylElement::new(pi, a, gamma).unwrap()
}
