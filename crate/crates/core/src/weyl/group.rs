//! Alcove geometry, lengths, reduced words and Bruhat order.
//!
//! The apartment is the space of lattice exponent vectors `x` with
//! `x_i + x_{i'}` constant. Affine hyperplanes are `x_i - x_j = k`; on the
//! apartment `x_i - x_j` and `x_{j'} - x_{i'}` coincide, so one pair of each
//! such couple is kept. The base alcove has barycentre `-(d-1-j)/d`.

use super::element::WeylElement;
use crate::error::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// A reflecting wall `x_i - x_j = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Wall {
    pub i: usize,
    pub j: usize,
    pub k: i32,
}

#[derive(Debug, Clone)]
pub struct GroupCtx {
    d: usize,
    pairs: Vec<(usize, usize)>,
    base: Vec<i64>,
    walls: Vec<Wall>,
    simples: Vec<WeylElement>,
    tau: WeylElement,
}

impl GroupCtx {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 || d % 2 == 1 {
            return Err(Error::InvalidInput(format!("rank {d} must be even and at least 2")));
        }
        let p = |i: usize| d - 1 - i;
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                if (i, j) <= (p(j), p(i)) {
                    pairs.push((i, j));
                }
            }
        }
        let base: Vec<i64> = (0..d).map(|j| -((d - 1 - j) as i64)).collect();
        let mut ctx = GroupCtx {
            d,
            pairs,
            base,
            walls: Vec::new(),
            simples: Vec::new(),
            tau: WeylElement::identity(d),
        };
        let mut found = Vec::new();
        for k in [-1, 0] {
            for &(i, j) in &ctx.pairs {
                let s = ctx.reflection(i, j, k);
                if ctx.length(&s) == 1 {
                    found.push((Wall { i, j, k }, s));
                }
            }
        }
        ctx.walls = found.iter().map(|x| x.0).collect();
        ctx.simples = found.into_iter().map(|x| x.1).collect();
        ctx.tau = ctx.find_tau()?;
        Ok(ctx)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Reflection in `x_i - x_j = k` (and its paired hyperplane).
    pub fn reflection(&self, i: usize, j: usize, k: i32) -> WeylElement {
        let d = self.d;
        let mut pi: Vec<usize> = (0..d).collect();
        let mut a = vec![0; d];
        pi.swap(i, j);
        a[j] = k;
        a[i] = -k;
        let (ip, jp) = (d - 1 - i, d - 1 - j);
        if (i, j) != (jp, ip) {
            pi.swap(ip, jp);
            a[ip] = k;
            a[jp] = -k;
        }
        WeylElement::new_unchecked(pi, a, 0)
    }

    /// Number of hyperplanes separating the base alcove from its image.
    pub fn length(&self, w: &WeylElement) -> usize {
        let dd = self.d as i64;
        let x = &self.base;
        let y = w.act_scaled(x, dd);
        self.pairs
            .iter()
            .map(|&(i, j)| {
                let f0 = (x[i] - x[j]).div_euclid(dd);
                let f1 = (y[i] - y[j]).div_euclid(dd);
                (f0 - f1).unsigned_abs() as usize
            })
            .sum()
    }

    pub fn simples(&self) -> &[WeylElement] {
        &self.simples
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn num_simple(&self) -> usize {
        self.simples.len()
    }

    pub fn simple(&self, s: usize) -> &WeylElement {
        &self.simples[s]
    }

    /// Length-zero generator of `Ω` with `γ = 1`.
    pub fn tau(&self) -> &WeylElement {
        &self.tau
    }

    /// The `Ω` element `τ^γ`.
    pub fn omega(&self, gamma: i32) -> WeylElement {
        self.tau.pow(gamma)
    }

    fn find_tau(&self) -> Result<WeylElement> {
        let d = self.d;
        let half = d / 2;
        for pi in equivariant_perms(d) {
            for bits in 0..(1u32 << half) {
                let mut a = vec![0; d];
                for i in 0..half {
                    a[i] = ((bits >> i) & 1) as i32;
                    a[d - 1 - i] = 1 - a[i];
                }
                let w = WeylElement::new_unchecked(pi.clone(), a, 1);
                if self.length(&w) == 0 {
                    return Ok(w);
                }
            }
        }
        Err(Error::Internal("no length-zero element of type 1".into()))
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        let l = self.length(w);
        (0..self.num_simple()).filter(|&s| self.length(&self.simples[s].mul(w)) < l).collect()
    }

    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        let l = self.length(w);
        (0..self.num_simple()).filter(|&s| self.length(&w.mul(&self.simples[s])) < l).collect()
    }

    /// `w = s_{i1} ⋯ s_{ik} · τ^γ`, least left descent first.
    pub fn reduced_word(&self, w: &WeylElement) -> (Vec<usize>, WeylElement) {
        let mut word = Vec::new();
        let mut cur = w.clone();
        loop {
            let l = self.length(&cur);
            if l == 0 {
                break;
            }
            let s = (0..self.num_simple())
                .find(|&s| self.length(&self.simples[s].mul(&cur)) < l)
                .expect("positive length has a descent");
            word.push(s);
            cur = self.simples[s].mul(&cur);
        }
        (word, cur)
    }

    /// Multiplies out a word followed by `τ^γ`.
    pub fn from_word(&self, word: &[usize], gamma: i32) -> WeylElement {
        let mut w = self.omega(gamma);
        for &s in word.iter().rev() {
            w = self.simples[s].mul(&w);
        }
        w
    }

    pub fn word_string(&self, w: &WeylElement) -> String {
        let (word, _) = self.reduced_word(w);
        if word.is_empty() {
            "e".into()
        } else {
            word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn bruhat_leq(&self, x: &WeylElement, y: &WeylElement) -> bool {
        if x.d() != self.d || y.d() != self.d || x.gamma() != y.gamma() {
            return false;
        }
        let (lx, ly) = (self.length(x), self.length(y));
        if lx > ly {
            return false;
        }
        if ly == 0 {
            return x == y;
        }
        let s = self.left_descents(y)[0];
        let sy = self.simples[s].mul(y);
        let sx = self.simples[s].mul(x);
        if self.length(&sx) < lx {
            self.bruhat_leq(&sx, &sy)
        } else {
            self.bruhat_leq(x, &sy)
        }
    }

    /// All products of subwords of a reduced word of `w`.
    pub fn downset(&self, w: &WeylElement) -> BTreeSet<WeylElement> {
        let (word, omega) = self.reduced_word(w);
        let mut acc: BTreeSet<WeylElement> = BTreeSet::from([omega]);
        for &s in word.iter().rev() {
            let extra: Vec<WeylElement> = acc.iter().map(|u| self.simples[s].mul(u)).collect();
            acc.extend(extra);
        }
        acc
    }

    /// Order of `s t`, `None` when infinite.
    pub fn coxeter_entry(&self, s: usize, t: usize) -> Option<usize> {
        let st = self.simples[s].mul(&self.simples[t]);
        let id = WeylElement::identity(self.d);
        let mut cur = st.clone();
        for k in 1..=12 {
            if cur == id {
                return Some(k);
            }
            cur = cur.mul(&st);
        }
        None
    }

    /// Classes of simple reflections under conjugation in the whole group.
    pub fn simple_classes(&self) -> Vec<usize> {
        let n = self.num_simple();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for s in 0..n {
            for t in s + 1..n {
                if matches!(self.coxeter_entry(s, t), Some(m) if m % 2 == 1) {
                    union(&mut parent, s, t);
                }
            }
            let conj = self.tau.mul(&self.simples[s]).mul(&self.tau.inverse());
            if let Some(t) = self.simples.iter().position(|x| *x == conj) {
                union(&mut parent, s, t);
            }
        }
        (0..n).map(|s| find(&mut parent, s)).collect()
    }

    /// Every element of type `γ` with length at most `max_len`.
    pub fn elements_up_to(&self, gamma: i32, max_len: usize) -> BTreeSet<WeylElement> {
        let start = self.omega(gamma);
        let mut seen: BTreeSet<WeylElement> = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([(start, 0usize)]);
        while let Some((w, l)) = queue.pop_front() {
            if l == max_len {
                continue;
            }
            for s in &self.simples {
                let sw = s.mul(&w);
                if self.length(&sw) == l + 1 && seen.insert(sw.clone()) {
                    queue.push_back((sw, l + 1));
                }
            }
        }
        seen
    }

    /// Lengths memoised for repeated queries.
    pub fn length_table<'a>(&self, ws: impl IntoIterator<Item = &'a WeylElement>) -> HashMap<WeylElement, usize> {
        ws.into_iter().map(|w| (w.clone(), self.length(w))).collect()
    }
}

/// Permutations of `0..d` commuting with `i ↦ d-1-i`.
pub fn equivariant_perms(d: usize) -> Vec<Vec<usize>> {
    let half = d / 2;
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..half).collect();
    permute(&mut idx, 0, &mut |perm| {
        for flips in 0..(1u32 << half) {
            let mut pi = vec![0; d];
            for i in 0..half {
                let target = if (flips >> i) & 1 == 1 { d - 1 - perm[i] } else { perm[i] };
                pi[i] = target;
                pi[d - 1 - i] = d - 1 - target;
            }
            out.push(pi);
        }
    });
    out
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_generators() {
        let g = GroupCtx::new(2).unwrap();
        assert_eq!(g.num_simple(), 2);
        assert_eq!(g.tau(), &WeylElement::new(vec![1, 0], vec![1, 0], 1).unwrap());
        assert_eq!(g.coxeter_entry(0, 1), None);
    }

    #[test]
    fn rank_four_is_type_c2() {
        let g = GroupCtx::new(4).unwrap();
        assert_eq!(g.num_simple(), 3);
        assert_eq!(g.coxeter_entry(0, 1), Some(4));
        assert_eq!(g.coxeter_entry(1, 2), Some(4));
        assert_eq!(g.coxeter_entry(0, 2), Some(2));
        assert_eq!(equivariant_perms(4).len(), 8);
    }
}
