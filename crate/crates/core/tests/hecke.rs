mod common;

use localmodel::hecke::*;
use localmodel::latmodel::{cell_census, CensusOptions, ModelWindow};
use localmodel::weyl::{admissible, finite_orbit, Cocharacter, GroupCtx, WeylElement};
use localmodel::Error;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn algebra(d: usize) -> HeckeAlgebra {
    let g = GroupCtx::new(d).unwrap();
    let e = if d == 2 { vec![1, 1] } else { vec![1, 2, 1] };
    let p = ParameterSystem::new(&g, &e).unwrap();
    HeckeAlgebra::new(g, p).unwrap()
}

fn lp(terms: &[(i32, i128)]) -> Laurent {
    let mut l = Laurent::zero();
    for &(e, c) in terms {
        l.add_term(e, c);
    }
    l
}

#[test]
fn parameter_systems_are_validated() {
    let g = GroupCtx::new(4).unwrap();
    assert!(ParameterSystem::new(&g, &[1, 2, 1]).is_ok());
    assert!(ParameterSystem::new(&g, &[1, 2, 2]).is_err());
    assert!(ParameterSystem::new(&g, &[0, 1, 0]).is_err());
    assert!(ParameterSystem::new(&g, &[1, 1]).is_err());
    assert_eq!(ParameterSystem::equal(&g).per_simple(), vec![1, 1, 1]);
}

#[test]
fn quadratic_and_braid_relations() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let g = alg.group().clone();
        for s in 0..g.num_simple() {
            let e = alg.params().exponent(s) as i32;
            let ts = alg.t_simple(s);
            let sq = alg.multiply(&ts, &ts).unwrap();
            let qs = Laurent::q_power(e);
            let expected = ts.scale(&qs.sub(&Laurent::one())).add(&alg.unit().scale(&qs)).unwrap();
            assert_eq!(sq, expected);
            let inv = alg.inverse_t(g.simple(s));
            assert_eq!(alg.multiply(&ts, &inv).unwrap(), alg.unit());
        }
        assert!(alg.braid_relations_hold());
        let tau = g.tau().clone();
        let tt = alg.multiply(&alg.t(&tau), &alg.t(&tau.inverse())).unwrap();
        assert_eq!(tt, alg.unit());
    }
    let equal = HeckeAlgebra::equal_parameters(4).unwrap();
    assert!(equal.braid_relations_hold());
}

#[test]
fn length_additive_products() {
    let alg = algebra(4);
    let g = alg.group().clone();
    for w in g.elements_up_to(1, 4) {
        let (word, omega) = g.reduced_word(&w);
        let mut h = alg.t(&omega);
        for &s in word.iter().rev() {
            h = alg.left_simple(s, &h);
        }
        assert_eq!(h, alg.t(&w), "{}", g.word_string(&w));
    }
}

#[test]
fn multiplication_is_associative() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let g = alg.group().clone();
        let pool: Vec<WeylElement> = (-1..=1).flat_map(|c| g.elements_up_to(c, 3)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let trials = if d == 2 { 500 } else { 150 };
        let random = |rng: &mut ChaCha8Rng| {
            let mut h = HeckeElement::zero(d);
            for _ in 0..rng.gen_range(1..3) {
                let w = pool.choose(rng).unwrap();
                h.add_term(w, &Laurent::monomial(rng.gen_range(-2..3), rng.gen_range(-2..3)));
            }
            h
        };
        for _ in 0..trials {
            let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
            let left = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
            let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn rank_mismatch_is_refused() {
    let a = algebra(2);
    let b = algebra(4);
    assert!(a.multiply(&a.unit(), &b.unit()).is_err());
    assert!(a.unit().add(&b.unit()).is_err());
}

#[test]
fn bernstein_elements_are_additive() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let random = |rng: &mut ChaCha8Rng| {
            let half: Vec<i32> = (0..d / 2).map(|_| rng.gen_range(-1..=1)).collect();
            let a: Vec<i32> = (0..d).map(|i| if i < d / 2 { half[i] } else { -half[d - 1 - i] }).collect();
            Cocharacter::new(a, 0).unwrap()
        };
        let trials = if d == 2 { 100 } else { 25 };
        for _ in 0..trials {
            let (x, y) = (random(&mut rng), random(&mut rng));
            let lhs = alg.multiply(&alg.theta(&x).unwrap(), &alg.theta(&y).unwrap()).unwrap();
            assert_eq!(lhs, alg.theta(&x.add(&y)).unwrap(), "{:?} + {:?}", x.a, y.a);
        }
        assert_eq!(alg.theta(&Cocharacter::zero(d)).unwrap(), alg.unit());
    }
}

#[test]
fn bernstein_decomposition_does_not_matter() {
    let alg = algebra(2);
    let anti = Cocharacter::new(vec![-1, 1], 0).unwrap();
    let rho = regular_dominant(2);
    assert_eq!(rho.a, vec![1, -1]);
    let mut seen = Vec::new();
    for k in 1..4 {
        let l2 = Cocharacter { a: rho.a.iter().map(|x| k * x).collect(), gamma: 0 };
        seen.push(alg.theta_decomposed(&anti.add(&l2), &l2).unwrap());
    }
    assert!(seen.windows(2).all(|p| p[0] == p[1]));
    assert_eq!(seen[0], alg.theta(&anti).unwrap());
    assert!(alg.theta_decomposed(&anti, &Cocharacter::zero(2)).is_err());
    assert_eq!(regular_dominant(4).a, vec![2, 1, -1, -2]);
}

#[test]
fn dominant_theta_is_a_normalized_translation() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let mu = Cocharacter::minuscule(d);
        let t = WeylElement::translation(&mu).unwrap();
        let e = alg.half_weight(&mu).unwrap() as i32;
        assert_eq!(alg.theta(&mu).unwrap(), HeckeElement::term(&t, Laurent::monomial(1, -e)));
    }
}

#[test]
fn weighted_lengths() {
    assert_eq!(algebra(2).half_weight(&Cocharacter::minuscule(2)).unwrap(), 1);
    assert_eq!(algebra(4).half_weight(&Cocharacter::minuscule(4)).unwrap(), 4);
    let g = GroupCtx::new(4).unwrap();
    assert_eq!(g.length(&WeylElement::translation(&Cocharacter::minuscule(4)).unwrap()), 3);
    assert!(algebra(4).q_index(&Cocharacter::new(vec![0, 0, 1, 1], 1).unwrap()).is_err());
}

#[test]
fn central_sum_in_rank_two() {
    let alg = algebra(2);
    let g = alg.group().clone();
    let z = alg.bernstein_z(&Cocharacter::minuscule(2)).unwrap();
    // q^{-1/2} (T_{t1} + T_{t2}) + (q^{-1/2} - q^{1/2}) T_τ
    let tau = g.tau().clone();
    let mut expected = HeckeElement::zero(2);
    expected.add_term(&g.simple(0).mul(&tau), &Laurent::monomial(1, -1));
    expected.add_term(&g.simple(1).mul(&tau), &Laurent::monomial(1, -1));
    expected.add_term(&tau, &lp(&[(-1, 1), (1, -1)]));
    assert_eq!(z, expected);
    assert!(alg.is_central(&z));
    assert!(!alg.is_central(&alg.t_simple(0)));
    assert!(!alg.is_central(&alg.t(&tau)));
    assert_eq!(alg.bernstein_z(&Cocharacter::zero(2)).unwrap(), alg.unit());
}

#[test]
fn central_sums_are_central_with_admissible_support() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let g = alg.group().clone();
        let mu = Cocharacter::minuscule(d);
        let z = alg.bernstein_z(&mu).unwrap();
        assert!(alg.is_central(&z));
        assert!(alg.commutators(&z).unwrap().iter().all(HeckeElement::is_zero));
        let adm = admissible(&g, &mu);
        assert!(z.support().all(|w| adm.contains(w)));
        assert_eq!(z.len(), adm.len());
        let e = alg.half_weight(&mu).unwrap() as i32;
        for l in finite_orbit(&mu) {
            assert_eq!(z.coeff(&WeylElement::translation(&l).unwrap()), Laurent::monomial(1, -e));
        }
        let st = alg.sstrace_element(&mu).unwrap();
        assert!(alg.is_central(&st));
        let sign = if e % 2 == 0 { 1 } else { -1 };
        for l in finite_orbit(&mu) {
            assert_eq!(st.coeff(&WeylElement::translation(&l).unwrap()), Laurent::monomial(sign, 0));
        }
    }
}

#[test]
fn unequal_parameters_matter_in_rank_four() {
    let equal = HeckeAlgebra::equal_parameters(4).unwrap();
    let mu = Cocharacter::minuscule(4);
    let z = equal.bernstein_z(&mu).unwrap();
    assert!(equal.is_central(&z));
    let fitted = algebra(4);
    assert_ne!(z, fitted.bernstein_z(&mu).unwrap());
}

#[test]
fn characterization_recovers_the_central_sum() {
    for d in [2usize, 4] {
        let alg = algebra(d);
        let mu = Cocharacter::minuscule(d);
        let c = central_from_characterization(&alg, &mu).unwrap();
        assert_eq!(c.rank + 1, c.unknowns);
        assert_eq!(c.element, alg.bernstein_z(&mu).unwrap());
    }
    let alg = algebra(2);
    let zero = central_from_characterization(&alg, &Cocharacter::zero(2)).unwrap();
    assert_eq!(zero.element, alg.unit());
    assert!(central_from_characterization(&alg, &Cocharacter::new(vec![0, 1], 1).unwrap()).is_err());
}

#[test]
fn fitted_parameters_match_the_cells() {
    let fit = fit_parameters(2, &[3, 5], 1 << 24).unwrap();
    assert_eq!(fit.params.per_simple(), vec![1, 1]);
    let fit = fit_parameters(4, &[3], 1 << 24).unwrap();
    assert_eq!(fit.params.per_simple(), vec![1, 2, 1]);
    assert_eq!(fit.counts.iter().map(|c| c.count).collect::<Vec<_>>(), vec![3, 9, 3]);
    assert!(matches!(fit_parameters(4, &[3], 10), Err(Error::Budget(_))));
    assert!(fit_parameters(2, &[], 1 << 20).is_err());
}

#[test]
fn q_index_counts_the_dominant_cell() {
    for (d, q) in [(2usize, 3u32), (2, 5), (4, 3)] {
        let alg = algebra(d);
        let mu = Cocharacter::minuscule(d);
        let ctx = ModelWindow::new(d, q, 0, 1).unwrap().context().unwrap();
        let census = cell_census(&ctx, alg.group(), &CensusOptions { budget: 1 << 24, generators: 0, seed: 0 }).unwrap();
        let cell = census.cell(&WeylElement::translation(&mu).unwrap()).unwrap();
        assert_eq!(alg.q_index(&mu).unwrap().specialize(q as i128).unwrap(), cell.size as i128);
    }
}

#[test]
fn json_roundtrip() {
    let alg = algebra(4);
    let z = alg.bernstein_z(&Cocharacter::minuscule(4)).unwrap();
    let text = serde_json::to_string(&z).unwrap();
    let terms: Vec<HeckeTermJson> = serde_json::from_str(&text).unwrap();
    assert_eq!(HeckeElement::from_terms(4, terms).unwrap(), z);
    let l = lp(&[(-2, 3), (1, -1)]);
    let back: Laurent = serde_json::from_str(&serde_json::to_string(&l).unwrap()).unwrap();
    assert_eq!(back, l);
}

#[test]
fn laurent_display() {
    assert_eq!(lp(&[(-1, 1), (1, -1)]).to_string(), "-1v + 1v^-1");
    assert_eq!(Laurent::zero().to_string(), "0");
    assert_eq!(Laurent::one().to_string(), "1");
}

fn laurent_strategy() -> impl Strategy<Value = Laurent> {
    proptest::collection::vec((-4i32..5, -5i128..6), 0..5).prop_map(|t| lp(&t))
}

proptest! {
    #[test]
    fn specialization_is_a_ring_map(a in laurent_strategy(), b in laurent_strategy()) {
        // polynomials in q = v^2
        let poly = |l: &Laurent| { let mut o = Laurent::zero(); for (e, c) in l.terms() { o.add_term(2 * (e + 4), c); } o };
        let (a, b) = (poly(&a), poly(&b));
        for q in [3i128, 5] {
            let (x, y) = (a.specialize(q).unwrap(), b.specialize(q).unwrap());
            prop_assert_eq!(a.mul(&b).specialize(q), Some(x * y));
            prop_assert_eq!(a.add(&b).specialize(q), Some(x + y));
        }
        prop_assert_eq!(Laurent::monomial(1, -1).specialize(3), None);
        prop_assert_eq!(Laurent::monomial(9, -4).specialize(3), Some(1));
    }

    #[test]
    fn laurent_ring_laws(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
    }
}
