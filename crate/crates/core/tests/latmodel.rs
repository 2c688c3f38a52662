mod common;

use common::rank;
use localmodel::gfring::{Fe, FieldCtx, Submodule, TruncMatrix};
use localmodel::hecke::{HeckeAlgebra, ParameterSystem};
use localmodel::latmodel::*;
use localmodel::weyl::{admissible, Cocharacter, GroupCtx, WeylElement};
use localmodel::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

const BUDGET: u128 = 1 << 24;

fn census(d: usize, q: u32, m: i32, n: i32, generators: usize) -> (ModelCtx, GroupCtx, Census) {
    let ctx = ModelWindow::new(d, q, m, n).unwrap().context().unwrap();
    let g = GroupCtx::new(d).unwrap();
    let c = cell_census(&ctx, &g, &CensusOptions { budget: BUDGET, generators, seed: 7 }).unwrap();
    (ctx, g, c)
}

#[test]
fn window_validation() {
    assert!(ModelWindow::new(3, 3, 0, 1).is_err());
    assert!(ModelWindow::new(2, 9, 0, 1).is_err());
    assert!(ModelWindow::new(2, 2, 0, 1).is_err());
    assert!(ModelWindow::new(2, 3, -1, 1).is_err());
    let w = ModelWindow::new(4, 3, 1, 2).unwrap();
    assert_eq!(w.gamma(), 1);
    assert_eq!(w.member_dim(0), 6);
    assert_eq!(w.standard_exponents(1), vec![-1, 0, 0, 0]);
    assert_eq!(w.standard_exponents(5), vec![-2, -1, -1, -1]);
}

#[test]
fn standard_chain_is_the_trivial_point() {
    for (d, q) in [(2usize, 3u32), (4, 3), (2, 5), (4, 5)] {
        for m in 0..2 {
            let ctx = ModelWindow::new(d, q, m, m).unwrap().context().unwrap();
            let s = standard_chain(&ctx);
            assert!(is_local_model_point(&ctx, &s).pass());
            assert_eq!(s.members[0], Submodule::diagonal(&ctx.ring, &vec![0; d]).unwrap());
            let pos = relative_position_to_base(&ctx, &s).unwrap();
            assert_eq!(pos, WeylElement::identity(d));
        }
    }
}

#[test]
fn degenerate_window_has_one_point() {
    for (d, q) in [(2usize, 3u32), (4, 3), (2, 5), (4, 5)] {
        let (ctx, _, c) = census(d, q, 0, 0, 2);
        assert_eq!(c.total(), 1);
        assert_eq!(c.points[0], standard_chain(&ctx));
        assert_eq!(c.cells.len(), 1);
        assert_eq!(c.cells[0].label, WeylElement::identity(d));
        assert!(c.closure.ok());
    }
}

#[test]
fn budget_is_enforced() {
    let ctx = ModelWindow::new(4, 3, 0, 1).unwrap().context().unwrap();
    assert!(matches!(enumerate_points(&ctx, 10), Err(Error::Budget(_))));
    assert!(work_estimate(&ctx) > 10);
    assert_eq!(gaussian_binomial(4, 2, 9), 7462);
    assert_eq!(gaussian_binomial(4, 5, 9), 0);
}

#[test]
fn nesting_failure_is_isolated() {
    let (ctx, _, c) = census(4, 3, 0, 1, 0);
    let mut found = false;
    'outer: for a in &c.points {
        for b in &c.points {
            let chain = LatticeChain { window: ctx.window, members: vec![a.members[0].clone(), b.members[1].clone(), a.members[2].clone()] };
            let diag = is_local_model_point(&ctx, &chain);
            if !diag.nesting {
                assert!(diag.bounds && diag.rank && diag.self_dual_bottom && diag.self_dual_top);
                assert!(!diag.pass());
                found = true;
                break 'outer;
            }
        }
    }
    assert!(found);
    let p = &c.points[5];
    let swapped = LatticeChain { window: ctx.window, members: vec![p.members[1].clone(), p.members[0].clone(), p.members[2].clone()] };
    assert!(!is_local_model_point(&ctx, &swapped).nesting);
}

/// Every `k`-dimensional subspace of `F^n` as a reduced row echelon basis.
fn all_subspaces(order: u32, n: usize, k: usize) -> Vec<Vec<Vec<Fe>>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        let pivots: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let free: Vec<(usize, usize)> =
            pivots.iter().enumerate().flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c))).collect();
        for mut code in 0..order.pow(free.len() as u32) {
            let mut rows = vec![vec![0; n]; k];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for &(r, c) in &free {
                rows[r][c] = code % order;
                code /= order;
            }
            out.push(rows);
        }
    }
    out
}

/// Naive functor-of-points oracle for `d = 2`, window `(0, 1)`, ring `[-1, 1)`.
#[test]
fn enumeration_matches_naive_subspace_oracle() {
    let ctx = ModelWindow::new(2, 3, 0, 1).unwrap().context().unwrap();
    let f: &FieldCtx = &ctx.field;
    let (lo, hi, w, d) = (-1i32, 1i32, 2usize, 2usize);
    let idx = |r: usize, e: i32| r * w + (e - lo) as usize;
    let all: Vec<Vec<Fe>> = (0..9u32.pow(4))
        .map(|mut k| {
            (0..4)
                .map(|_| {
                    let x = k % 9;
                    k /= 9;
                    x
                })
                .collect()
        })
        .collect();
    let times_t = |v: &[Fe]| -> Vec<Fe> {
        let mut out = vec![0; v.len()];
        for r in 0..d {
            for e in lo..hi - 1 {
                out[idx(r, e + 1)] = v[idx(r, e)];
            }
        }
        out
    };
    // coefficients of Σ_i v_i conj(w_{i'}) from t^{2lo}
    let pairing = |v: &[Fe], x: &[Fe]| -> Vec<Fe> {
        let mut out = vec![0; 2 * w];
        for i in 0..d {
            for a in lo..hi {
                for b in lo..hi {
                    let t = f.mul(v[idx(i, a)], f.frob(x[idx(d - 1 - i, b)]));
                    let k = (a + b - 2 * lo) as usize;
                    out[k] = f.add(out[k], t);
                }
            }
        }
        out
    };
    let in_span = |basis: &[Vec<Fe>], v: &[Fe]| {
        let mut with = basis.to_vec();
        with.push(v.to_vec());
        rank(f, &with) == basis.len()
    };
    let mut members: Vec<Vec<Vec<Vec<Fe>>>> = Vec::new();
    for i in 0..=1usize {
        let std: Vec<i32> = ctx.window.standard_exponents(i as i64);
        let k = ctx.window.member_dim(i);
        let thr = if i == 0 { ctx.window.gamma() } else { ctx.window.gamma() - 1 };
        let keep: Vec<Vec<Vec<Fe>>> = all_subspaces(9, 4, k)
            .into_iter()
            .filter(|b| b.iter().all(|v| in_span(b, &times_t(v))))
            .filter(|b| b.iter().all(|v| (0..d).all(|r| (lo..std[r]).all(|e| v[idx(r, e)] == 0))))
            .filter(|b| (0..d).all(|r| (std[r] + 1..hi).all(|e| {
                let mut u = vec![0; 4];
                u[idx(r, e)] = 1;
                in_span(b, &u)
            })))
            .filter(|b| {
                let dual: Vec<&Vec<Fe>> = all
                    .iter()
                    .filter(|x| b.iter().all(|g| pairing(g, x)[..(thr - 2 * lo) as usize].iter().all(|&c| c == 0)))
                    // t^hi O^d lies in every lattice of the window
                    .filter(|x| (0..d).all(|r| (lo..thr - hi).all(|e| x[idx(r, e)] == 0)))
                    .collect();
                dual.len() == 9usize.pow(k as u32) && dual.iter().all(|x| in_span(b, x))
            })
            .collect();
        members.push(keep);
    }
    let mut naive: BTreeSet<Vec<Vec<Vec<Fe>>>> = BTreeSet::new();
    for a in &members[0] {
        for b in &members[1] {
            if a.iter().all(|v| in_span(b, v)) {
                naive.insert(vec![
                    Submodule::from_columns(&ctx.ring, d, a.clone()).columns(),
                    Submodule::from_columns(&ctx.ring, d, b.clone()).columns(),
                ]);
            }
        }
    }
    let pts = enumerate_points(&ctx, BUDGET).unwrap();
    let fast: BTreeSet<Vec<Vec<Vec<Fe>>>> = pts.iter().map(|p| p.members.iter().map(|l| l.columns()).collect()).collect();
    assert_eq!(naive.len(), 7);
    assert_eq!(fast, naive);
}

fn expected_sizes(g: &GroupCtx, census: &Census, e: &[u32], q: usize) {
    for cell in &census.cells {
        let (word, _) = g.reduced_word(&cell.label);
        let expected: usize = word.iter().map(|&s| q.pow(e[s])).product();
        assert_eq!(cell.size, expected, "cell {}", cell.word);
    }
}

#[test]
fn census_small_rank() {
    for (q, total) in [(3u32, 7usize), (5, 11)] {
        let (ctx, g, c) = census(2, q, 0, 1, 3);
        assert_eq!(c.total(), total);
        let labels: BTreeSet<WeylElement> = c.cells.iter().map(|x| x.label.clone()).collect();
        assert_eq!(labels, admissible(&g, &Cocharacter::minuscule(2)));
        assert_eq!(c.cells.iter().map(|x| x.size).sum::<usize>(), c.total());
        assert!(c.closure.ok(), "{:?}", c.closure.violations);
        expected_sizes(&g, &c, &[1, 1], q as usize);
        for p in &c.points {
            assert!(is_local_model_point(&ctx, p).pass());
        }
        assert!(c.labels.iter().all(|w| w.gamma() == ctx.window.gamma()));
    }
}

#[test]
fn census_rank_four() {
    let (ctx, g, c) = census(4, 3, 0, 1, 4);
    assert_eq!(c.total(), 457);
    let labels: BTreeSet<WeylElement> = c.cells.iter().map(|x| x.label.clone()).collect();
    assert_eq!(labels, admissible(&g, &Cocharacter::minuscule(4)));
    assert!(c.closure.ok());
    expected_sizes(&g, &c, &[1, 2, 1], 3);
    assert!(c.cells.iter().all(|x| x.orbit_components == 1));
    assert!(c.points.iter().all(|p| is_local_model_point(&ctx, p).pass()));
}

#[test]
fn relative_position_of_translates() {
    for d in [2usize, 4] {
        let ctx = ModelWindow::new(d, 3, 0, 1).unwrap().context().unwrap();
        let g = GroupCtx::new(d).unwrap();
        let mut elems: Vec<WeylElement> = admissible(&g, &Cocharacter::minuscule(d)).into_iter().collect();
        elems.extend(g.elements_up_to(0, 3));
        elems.extend(g.elements_up_to(2, 2));
        for w in elems {
            let moved = translate_standard(&ctx, &w).unwrap();
            let (lo, hi) = (moved[0].ring().lo(), moved[0].ring().hi());
            let base: Vec<Submodule> = standard_full_chain(&ctx).iter().map(|l| l.to_window(lo, hi).unwrap()).collect();
            assert_eq!(relative_position(&base, &moved).unwrap(), w);
        }
    }
}

fn lower_triangle_divisible(g: &TruncMatrix) -> bool {
    (0..g.rows()).all(|r| (0..r).all(|c| g.entry_coeffs(r, c)[0] == 0))
}

#[test]
fn iwahori_samples_pass_the_predicate() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for (d, q, h) in [(2usize, 3u32, 2usize), (4, 3, 2), (2, 5, 4)] {
        let s = IwahoriSampler::new(Arc::new(FieldCtx::quadratic(q).unwrap()), d, h).unwrap();
        let gens = iwahori_generators(Arc::new(FieldCtx::quadratic(q).unwrap()), d, h, 100, &mut rng).unwrap();
        for g in &gens {
            assert!(s.is_iwahori(g).unwrap());
            assert!(lower_triangle_divisible(g));
        }
    }
    let s = IwahoriSampler::new(Arc::new(FieldCtx::quadratic(3).unwrap()), 4, 3).unwrap();
    let r = s.ring.clone();
    let f = r.field().clone();
    // scalar u with conj(u) u = 1
    let u = f.elements().find(|&x| x != 1 && x != 0 && f.norm(x) == 1).unwrap();
    let scalar = TruncMatrix::identity(&r, 4).unwrap().scale(&r.monomial(u, 0).unwrap()).unwrap();
    assert!(s.is_iwahori(&scalar).unwrap());
    let z = r.from_coeffs(vec![f.generator(), 1, 0]).unwrap();
    let root = s.root(0, 1, &z).unwrap();
    assert!(s.is_iwahori(&root).unwrap());
    let bad = s.root(1, 0, &z).unwrap();
    assert!(!s.is_iwahori(&bad).unwrap());
}

fn hecke_table(d: usize, e: &[u32], x: &WeylElement, y: &WeylElement, q: i128) -> BTreeMap<WeylElement, i128> {
    let g = GroupCtx::new(d).unwrap();
    let p = ParameterSystem::new(&g, e).unwrap();
    let alg = HeckeAlgebra::new(g, p).unwrap();
    alg.multiply(&alg.t(x), &alg.t(y)).unwrap().specialize(q).unwrap()
}

#[test]
fn convolution_counts_match_hecke_products() {
    for q in [3u32, 5] {
        let (ctx, g, c) = census(2, q, 0, 1, 0);
        let adm: Vec<WeylElement> = admissible(&g, &Cocharacter::minuscule(2)).into_iter().collect();
        let max_len = adm.iter().map(|w| g.length(w)).max().unwrap();
        let targets = g.elements_up_to(2, 2 * max_len + 1);
        for x in &adm {
            let rows: Vec<(WeylElement, BTreeMap<WeylElement, u64>)> =
                targets.iter().map(|w| (w.clone(), convolution_row(&ctx, &c, x, w).unwrap())).collect();
            for y in &adm {
                let expected = hecke_table(2, &[1, 1], x, y, q as i128);
                for (w, row) in &rows {
                    let count = row.get(y).copied().unwrap_or(0) as i128;
                    assert_eq!(count, expected.get(w).copied().unwrap_or(0), "x={x} y={y} w={w}");
                }
                assert!(expected.keys().all(|w| targets.contains(w)));
            }
        }
    }
}

#[test]
fn convolution_examples() {
    let (ctx, g, c) = census(2, 3, 0, 1, 0);
    let tau = g.tau().clone();
    // the length-zero cell acts as the identity
    for w in g.elements_up_to(2, 2) {
        let row = convolution_row(&ctx, &c, &tau, &w).unwrap();
        let y = tau.inverse().mul(&w);
        assert_eq!(row, BTreeMap::from([(y, 1)]));
    }
    // T_{s0 τ} T_{s1 τ} = T_{s0}^2 T_{τ^2} = (q - 1) T_{s0 τ^2} + q T_{τ^2}
    let x = g.simple(0).mul(&tau);
    let y = g.simple(1).mul(&tau);
    let tt = tau.mul(&tau);
    assert_eq!(convolution_count(&ctx, &c, &x, &y, &tt).unwrap(), 3);
    assert_eq!(convolution_count(&ctx, &c, &x, &y, &g.simple(0).mul(&tt)).unwrap(), 2);
    assert_eq!(convolution_count(&ctx, &c, &x, &x, &tt).unwrap(), 0);
}

#[test]
fn convolution_is_independent_of_the_representative() {
    let (ctx, g, c) = census(2, 3, 0, 1, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let adm: Vec<WeylElement> = admissible(&g, &Cocharacter::minuscule(2)).into_iter().collect();
    for w in g.elements_up_to(2, 3) {
        let rep = translate_standard(&ctx, &w).unwrap();
        let width = rep[0].ring().width();
        let gens = iwahori_generators(ctx.field.clone(), 2, width, 3, &mut rng).unwrap();
        for x in &adm {
            let base = count_against(&ctx, &c, x, &rep).unwrap();
            for h in &gens {
                let moved: Vec<Submodule> = rep.iter().map(|l| l.apply_matrix(h).unwrap()).collect();
                assert_eq!(count_against(&ctx, &c, x, &moved).unwrap(), base);
            }
        }
    }
}

#[test]
fn representability_is_checked() {
    let (ctx, g, c) = census(2, 3, 0, 1, 0);
    let far = g.from_word(&[0, 1, 0, 1], 1);
    assert!(matches!(check_representable(&ctx, &far), Err(Error::Window(_))));
    assert!(convolution_row(&ctx, &c, &far, g.tau()).is_err());
}

/// `dim(F_i ∩ t^k λ_j)` for `i, j ∈ 0..=d` and `k ∈ {-1, 0, 1}`.
fn rank_profile(ctx: &ModelCtx, p: &LatticeChain) -> Vec<usize> {
    let (lo, hi) = (ctx.ring.lo() - 1, ctx.ring.hi() + 1);
    let full: Vec<Submodule> = p.full_chain(ctx).unwrap().iter().map(|l| l.to_window(lo, hi).unwrap()).collect();
    let std: Vec<Submodule> = standard_full_chain(ctx).iter().map(|l| l.to_window(lo, hi).unwrap()).collect();
    let mut out = Vec::new();
    for a in &full {
        for b in &std {
            for k in -1..=1 {
                out.push(a.meet(&b.shift(k).unwrap()).unwrap().dim());
            }
        }
    }
    out
}

#[test]
fn bruhat_order_matches_rank_semicontinuity() {
    for (d, q) in [(2usize, 3u32), (2, 5), (4, 3)] {
        let (ctx, g, c) = census(d, q, 0, 1, 0);
        let profiles: Vec<(WeylElement, Vec<usize>)> = c
            .cells
            .iter()
            .map(|cell| {
                let first = rank_profile(&ctx, &c.points[cell.members[0]]);
                for &i in cell.members.iter().take(8) {
                    assert_eq!(rank_profile(&ctx, &c.points[i]), first);
                }
                (cell.label.clone(), first)
            })
            .collect();
        for (x, px) in &profiles {
            for (y, py) in &profiles {
                let dominated = px.iter().zip(py).all(|(a, b)| a >= b);
                assert_eq!(g.bruhat_leq(x, y), dominated, "{x} vs {y}");
            }
        }
    }
}

#[test]
fn chain_json_roundtrip() {
    let (_, _, c) = census(2, 3, 0, 1, 0);
    let j = c.points[3].to_json();
    let text = serde_json::to_string(&j).unwrap();
    let back: ChainJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.members, j.members);
    assert_eq!(back.window, c.window);
}

