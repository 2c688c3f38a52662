//! Hermitian pairings `t^k v^T G conj(w)` and dual lattices.

use crate::error::{Error, Result};
use crate::gfring::{linalg, Fe, SeriesRing, Submodule, TruncMatrix, TruncSeries};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianForm {
    ring: SeriesRing,
    d: usize,
    gram: TruncMatrix,
    twist: i32,
}

impl HermitianForm {
    /// Anti-identity form on vectors of `ring`.
    pub fn standard(ring: &SeriesRing, d: usize) -> Result<Self> {
        let gram_ring = ring.rewindow(0, ring.width() as i32)?;
        Self::new(ring, TruncMatrix::anti_identity(&gram_ring, d)?, 0)
    }

    /// Gram matrix over `F[t]/t^h` with `h` at least the vector window width.
    pub fn new(ring: &SeriesRing, gram: TruncMatrix, twist: i32) -> Result<Self> {
        let d = gram.rows();
        let gr = gram.ring();
        if gr.lo() != 0 || gr.width() < ring.width() || gram.cols() != d || gr.field() != ring.field() {
            return Err(Error::InvalidInput("gram must be square over F[t]/t^h covering the window".into()));
        }
        if gram.conj()?.transpose() != gram {
            return Err(Error::InvalidInput("gram matrix is not hermitian".into()));
        }
        Ok(HermitianForm { ring: ring.clone(), d, gram, twist })
    }

    pub fn ring(&self) -> &SeriesRing {
        &self.ring
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gram(&self) -> &TruncMatrix {
        &self.gram
    }

    pub fn twist(&self) -> i32 {
        self.twist
    }

    /// Window `[2lo + k, hi + lo + k)` holding every pairing value exactly.
    pub fn value_ring(&self) -> SeriesRing {
        let (lo, hi) = (self.ring.lo(), self.ring.hi());
        self.ring.rewindow(2 * lo + self.twist, hi + lo + self.twist).expect("nonempty window")
    }

    /// `Σ_j h_j x_j` coefficients with `h_j = Σ_i conj(G_ij) conj(g_i)`, exponents from `2lo`.
    fn linear_coeffs(&self, g: &[Fe]) -> Vec<Vec<Fe>> {
        let f = self.ring.field();
        let w = self.ring.width();
        let d = self.d;
        (0..d)
            .map(|j| {
                let mut h = vec![0; w];
                for i in 0..d {
                    let gij = self.gram.entry_coeffs(i, j);
                    let gi = &g[i * w..(i + 1) * w];
                    for (s, &a) in gij.iter().enumerate().take(w) {
                        if a == 0 {
                            continue;
                        }
                        let ca = f.frob(a);
                        for k in 0..w - s {
                            if gi[k] != 0 {
                                h[k + s] = f.add(h[k + s], f.mul(ca, f.frob(gi[k])));
                            }
                        }
                    }
                }
                h
            })
            .collect()
    }

    /// Pairing of flat vectors (`d * width` coefficients each) in [`Self::value_ring`].
    pub fn pair_flat(&self, v: &[Fe], w: &[Fe]) -> Vec<Fe> {
        let f = self.ring.field();
        let wd = self.ring.width();
        let hs = self.linear_coeffs(v);
        let mut out = vec![0; wd];
        for (j, h) in hs.iter().enumerate() {
            let wj = &w[j * wd..(j + 1) * wd];
            for (a, &x) in h.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for b in 0..wd - a {
                    if wj[b] != 0 {
                        out[a + b] = f.add(out[a + b], f.mul(x, wj[b]));
                    }
                }
            }
        }
        out.iter().map(|&c| f.frob(c)).collect()
    }

    pub fn pair(&self, v: &[TruncSeries], w: &[TruncSeries]) -> Result<TruncSeries> {
        if v.len() != self.d || w.len() != self.d {
            return Err(Error::Dimension("vector length differs from the form rank".into()));
        }
        let flat = |x: &[TruncSeries]| -> Vec<Fe> { x.iter().flat_map(|s| s.coeffs().to_vec()).collect() };
        self.value_ring().from_coeffs(self.pair_flat(&flat(v), &flat(w)))
    }

    /// Pairing value re-expressed in `target`; fails when it reaches below `target.lo`.
    pub fn pair_into(&self, v: &[TruncSeries], w: &[TruncSeries], target: &SeriesRing) -> Result<TruncSeries> {
        let vr = self.value_ring();
        let x = self.pair(v, w)?;
        if let Some(e) = vr.valuation(&x) {
            if e < target.lo() {
                return Err(Error::Window(format!("pairing value reaches t^{e}, below {}", target.lo())));
            }
        }
        vr.convert(&x, target)
    }

    /// `{x : pair(g, x) ∈ t^thr O for every generator g of L}`.
    pub fn dual_lattice(&self, l: &Submodule, thr: i32) -> Result<Submodule> {
        let ring = &self.ring;
        if l.ring() != ring || l.rank() != self.d {
            return Err(Error::RingMismatch);
        }
        let f = ring.field();
        let gram0 = self.gram.reduce_mod_t();
        if linalg::invert(f, &gram0, self.d).is_none() {
            return Err(Error::Domain("gram matrix is not invertible over O".into()));
        }
        let (lo, hi, w, d) = (ring.lo(), ring.hi(), ring.width(), self.d);
        let floor_exp = l
            .columns()
            .iter()
            .flat_map(|c| c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| (i % w) as i32 + lo).collect::<Vec<_>>())
            .min()
            .unwrap_or(hi);
        let ceil_exp = (lo..=hi)
            .find(|&e| l.contains(&Submodule::diagonal(ring, &vec![e; d]).expect("in window")).unwrap_or(false))
            .unwrap_or(hi);
        let start = thr - ceil_exp - self.twist;
        if start < lo || thr - floor_exp - self.twist > hi {
            return Err(Error::Window(format!("dual at threshold {thr} does not fit [{lo}, {hi})")));
        }
        // unknowns: coefficient of t^e in row r for e in [start, hi)
        let width_u = (hi - start) as usize;
        let nvars = d * width_u;
        let mut rows: Vec<Vec<Fe>> = Vec::new();
        for g in l.columns() {
            let hs = self.linear_coeffs(&g);
            for delta in (2 * lo + self.twist)..thr {
                let mut row = vec![0; nvars];
                let mut any = false;
                for (j, h) in hs.iter().enumerate() {
                    for ku in 0..width_u {
                        let e = start + ku as i32;
                        let idx = delta - self.twist - e - lo;
                        if idx < 0 || idx as usize >= w {
                            continue;
                        }
                        let c = h[idx as usize];
                        if c != 0 {
                            row[j * width_u + ku] = c;
                            any = true;
                        }
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
        let ns = if rows.is_empty() {
            (0..nvars).map(|i| (0..nvars).map(|j| Fe::from(i == j)).collect()).collect()
        } else {
            linalg::nullspace(f, &rows, nvars)
        };
        let gens: Vec<Vec<Fe>> = ns
            .into_iter()
            .map(|x| {
                let mut v = vec![0; d * w];
                for r in 0..d {
                    for ku in 0..width_u {
                        v[r * w + (start - lo) as usize + ku] = x[r * width_u + ku];
                    }
                }
                v
            })
            .collect();
        Ok(Submodule::from_columns(ring, d, gens))
    }
}
