//! Library results checked against the brute-force references in `common`.

mod common;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use recring::chains::{check_triangular, check_zero_dimensional, VariableOrder};
use recring::groebner::{is_groebner, s_polynomial};
use recring::poly::text::parse;
use recring::{make_ring, CoefficientRing, Monomial, Polynomial, RingFamily};

fn z(s: &str) -> Polynomial {
    parse(s, CoefficientRing::Integers).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_pairs(e.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k))).unwrap()
}

#[test]
fn dlex_agrees_with_dense_definition_and_is_a_monomial_order() {
    let dense = monomials_up_to(3, 3);
    let monos: Vec<Monomial> = dense.iter().map(|e| mono(e)).collect();
    assert_eq!(monos.len(), 20);

    for (a, ea) in monos.iter().zip(&dense) {
        for (b, eb) in monos.iter().zip(&dense) {
            assert_eq!(a.cmp(b), dlex_dense(ea, eb), "{a} vs {b}");
            // antisymmetry
            assert_eq!(a.cmp(b), b.cmp(a).reverse());
            if a.cmp(b) == Ordering::Equal {
                assert_eq!(a, b);
            }
        }
    }
    for a in &monos {
        assert!(Monomial::one() <= *a);
        for b in &monos {
            for c in &monos {
                if a < b && b < c {
                    assert!(a < c, "transitivity {a} {b} {c}");
                }
                if a < b {
                    assert!(a.mul(c) < b.mul(c), "multiplicativity {a} {b} {c}");
                }
            }
        }
    }
    assert_eq!(mono(&[1, 0, 1]).cmp(&mono(&[0, 2, 0])), Ordering::Greater);
}

#[test]
fn product_matches_naive_double_loop() {
    let p = z("2*x1 + x2");
    let got = p.mul(&p).unwrap();
    let naive = naive_mul(&to_dense(&p, 2), &to_dense(&p, 2), None);
    assert_eq!(got, from_dense(&naive, &CoefficientRing::Integers));
    assert_eq!(got, z("4*x1*x1 + 4*x1*x2 + x2*x2"));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in [None, Some(2), Some(6), Some(7)] {
        let ring = match m {
            None => CoefficientRing::Integers,
            Some(m) => CoefficientRing::modulo(m).unwrap(),
        };
        for _ in 0..50 {
            let a = random_poly(&mut rng, &ring, 3, 6, 3, 5, 20);
            let b = random_poly(&mut rng, &ring, 3, 6, 3, 5, 20);
            let naive = naive_mul(&to_dense(&a, 3), &to_dense(&b, 3), ring.modulus());
            assert_eq!(a.mul(&b).unwrap(), from_dense(&naive, &ring));
        }
    }
}

#[test]
fn x1_cubed_in_k3_by_one_rewrite_per_step() {
    let k3 = make_ring(&RingFamily::K, 3).unwrap();
    let x1_cubed = z("x1*x1*x1");
    let reducers = family_reducers(3, 2);
    let oracle =
        brute_force_reduce::<ChaCha8Rng>(&to_dense(&x1_cubed, 3), &reducers, 2, None, Strategy::Greatest, 1000)
            .unwrap();
    let oracle = from_dense(&oracle, &CoefficientRing::Integers);
    assert_eq!(oracle, z("4*x1 + 2*x2 + x1*x2"));
    assert_eq!(k3.reduce(&x1_cubed).unwrap(), oracle);
}

#[test]
fn reduce_is_confluent_under_random_rewrite_orders() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = [
        (RingFamily::K, 2i64, None),
        (RingFamily::KPrime, -2, None),
        (RingFamily::KMod(BigInt::from(2)), 0, Some(BigInt::from(2))),
        (RingFamily::KMod(BigInt::from(9)), 2, Some(BigInt::from(9))),
    ];
    for (family, s, modulus) in cases {
        let ring = make_ring(&family, 4).unwrap();
        let reducers = family_reducers(4, s);
        for _ in 0..25 {
            let p = random_poly(&mut rng, ring.coeff_ring(), 4, 5, 4, 6, 9);
            let dense = to_dense(&p, 4);
            let expected = ring.reduce(&p).unwrap();
            for _ in 0..3 {
                let mut walk = ChaCha8Rng::seed_from_u64(rng.gen());
                let got = brute_force_reduce(
                    &dense,
                    &reducers,
                    2,
                    modulus.as_ref(),
                    Strategy::Random(&mut walk),
                    100_000,
                )
                .expect("terminates");
                assert_eq!(from_dense(&got, ring.coeff_ring()), expected, "{family:?} {p}");
            }
        }
    }
}

#[test]
fn s_polynomial_matches_hand_schema() {
    // x2^2 * g1 - x1^2 * g2, with the products done by the naive oracle
    let g1 = z("x1*x1 - 2*x1 - x2");
    let g2 = z("x2*x2 - 2*x2 - x3");
    let left = naive_mul(&to_dense(&z("x2*x2"), 3), &to_dense(&g1, 3), None);
    let right = naive_mul(&to_dense(&z("x1*x1"), 3), &to_dense(&g2, 3), None);
    let mut diff = left;
    for (e, c) in right {
        *diff.entry(e).or_default() -= c;
    }
    diff.retain(|_, c| *c != BigInt::from(0));
    assert_eq!(s_polynomial(&g1, &g2).unwrap(), from_dense(&diff, &CoefficientRing::Integers));
}

#[test]
fn support_analysis_of_mixed_linear_set() {
    // supports {1,2}, {1,2,3}, {1}; ascending mains x2, x3, x1 are distinct,
    // reversed mains x1, x1, x1 collide
    let gens = [z("x1 + x2"), z("x1 + x2 + x3"), z("x1")];
    let supports: Vec<Vec<u32>> = gens.iter().map(Polynomial::support).collect();
    assert_eq!(supports, vec![vec![1, 2], vec![1, 2, 3], vec![1]]);
    let asc: Vec<u32> = supports.iter().map(|s| *s.iter().max().unwrap()).collect();
    let rev: Vec<u32> = supports.iter().map(|s| *s.iter().min().unwrap()).collect();
    assert_eq!(asc, vec![2, 3, 1]);
    assert_eq!(rev, vec![1, 1, 1]);

    let t = check_triangular(&gens, 3).unwrap();
    assert_eq!(t.order, VariableOrder::Ascending);
    assert_eq!(t.chain, vec![2, 0, 1]);
    assert_eq!(t.main_vars, vec![1, 2, 3]);
}

fn grows(generators: &[Polynomial], nvars: usize) -> bool {
    let dense: Vec<DensePoly> = generators.iter().map(|g| to_dense(g, nvars)).collect();
    hilbert_gf2(&dense, nvars, 7) > hilbert_gf2(&dense, nvars, 6)
}

#[test]
fn zero_dimensionality_matches_hilbert_function_over_gf2() {
    let gf2 = CoefficientRing::modulo(2).unwrap();

    for b in 1..=3u32 {
        let gens = make_ring(&RingFamily::KMod(BigInt::from(2)), b).unwrap().ideal_generators();
        assert!(check_zero_dimensional(&gens, b).unwrap());
        assert!(!grows(&gens, b as usize));

        let mut open = gens.clone();
        open.pop();
        if open.is_empty() {
            continue;
        }
        assert!(!check_zero_dimensional(&open, b).unwrap());
        assert!(grows(&open, b as usize), "b={b}");
    }

    // monomial ideals are always Groebner bases
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen = [0usize; 2];
    for _ in 0..200 {
        let k = rng.gen_range(1..=4);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let e: Vec<u32> = (0..3).map(|_| rng.gen_range(0..=3)).collect();
                let m = if e.iter().all(|&x| x == 0) { mono(&[0, 0, 1]) } else { mono(&e) };
                Polynomial::from_terms(gf2.clone(), [(BigInt::from(1), m)])
            })
            .collect();
        assert!(is_groebner(&gens).unwrap().is_groebner);
        let zd = check_zero_dimensional(&gens, 3).unwrap();
        assert_eq!(zd, !grows(&gens, 3), "{gens:?}");
        seen[zd as usize] += 1;
    }
    // the random draw must exercise both outcomes
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn gf2_reduction_of_k_reducers() {
    let k2 = make_ring(&RingFamily::KMod(BigInt::from(2)), 2).unwrap();
    let expected = parse("x2", CoefficientRing::modulo(2).unwrap()).unwrap();
    assert_eq!(k2.reducer(1), &expected);
    assert!(k2.reducer(2).is_zero());
    // the dense reducers with the even coefficient folded away agree
    let dense = family_reducers(2, 2);
    for (i, d) in dense.iter().enumerate() {
        let mut folded = d.clone();
        folded.retain(|_, c| c.is_odd());
        assert_eq!(
            from_dense(&folded, k2.coeff_ring()),
            *k2.reducer(i as u32 + 1)
        );
    }
}

#[test]
fn required_vars_by_repeated_halving() {
    for n in 1..=5000u64 {
        let mut halvings = 0u32;
        let mut m = n;
        while m > 1 {
            m /= 2;
            halvings += 1;
        }
        assert_eq!(recring::required_vars(n).unwrap(), halvings + 2, "n={n}");
    }
    assert_eq!(recring::required_vars(1000).unwrap(), 11);
}
