//! Finite Weyl orbits, admissible sets and the Cartan window.

use super::element::{Cocharacter, WeylElement};
use super::group::{equivariant_perms, GroupCtx};
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Orbit under permutations commuting with the pairing (flips included).
pub fn finite_orbit(mu: &Cocharacter) -> BTreeSet<Cocharacter> {
    let mu = mu.dominant();
    let d = mu.d();
    equivariant_perms(d)
        .into_iter()
        .map(|pi| {
            let mut a = vec![0; d];
            for i in 0..d {
                a[pi[i]] = mu.a[i];
            }
            Cocharacter { a, gamma: mu.gamma }
        })
        .collect()
}

/// `{w : w ≤ t_λ for some λ in the orbit of μ}`.
pub fn admissible(g: &GroupCtx, mu: &Cocharacter) -> BTreeSet<WeylElement> {
    let orbit: Vec<Cocharacter> = finite_orbit(mu).into_iter().collect();
    orbit
        .par_iter()
        .map(|l| g.downset(&WeylElement::translation(l).expect("orbit keeps the similitude type")))
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// Dominant `λ` with `γ = n - m`, `a_1 ≤ n` and `a_d ≥ -m`.
pub fn dominant_in_window(d: usize, m: i32, n: i32) -> Vec<Cocharacter> {
    let gamma = n - m;
    let half = d / 2;
    let lo = (gamma + 1).div_euclid(2);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(half);
    fn rec(cur: &mut Vec<i32>, half: usize, top: i32, lo: i32, gamma: i32, out: &mut Vec<Cocharacter>) {
        if cur.len() == half {
            let d = 2 * half;
            let mut a = vec![0; d];
            for i in 0..half {
                a[i] = cur[i];
                a[d - 1 - i] = gamma - cur[i];
            }
            out.push(Cocharacter { a, gamma });
            return;
        }
        let mut x = top;
        while x >= lo {
            cur.push(x);
            rec(cur, half, x, lo, gamma, out);
            cur.pop();
            x -= 1;
        }
    }
    if n >= lo && -m <= gamma - n {
        rec(&mut cur, half, n, lo, gamma, &mut out);
    }
    out.retain(|c| c.a[d - 1] >= -m && c.a[0] <= n);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        assert_eq!(finite_orbit(&Cocharacter::minuscule(2)).len(), 2);
        assert_eq!(finite_orbit(&Cocharacter::minuscule(4)).len(), 4);
        assert_eq!(finite_orbit(&Cocharacter::zero(4)).len(), 1);
    }

    #[test]
    fn window_scan() {
        assert_eq!(dominant_in_window(2, 0, 0), vec![Cocharacter::zero(2)]);
        assert_eq!(dominant_in_window(2, 0, 1), vec![Cocharacter::minuscule(2)]);
    }
}
