//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the library's arithmetic: polynomials are dense
//! exponent vectors in a `BTreeMap`, and every routine is the most literal
//! version of its definition.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

use recring::{CoefficientRing, Monomial, Polynomial};

pub type Dense = Vec<u32>;
pub type DensePoly = HashMap<Dense, BigInt>;

pub fn to_dense(p: &Polynomial, nvars: usize) -> DensePoly {
    let mut out = DensePoly::new();
    for (c, m) in p.terms() {
        let mut e = vec![0u32; nvars];
        for &(i, k) in m.pairs() {
            e[i as usize - 1] = k;
        }
        out.insert(e, c.clone());
    }
    out
}

pub fn from_dense(d: &DensePoly, ring: &CoefficientRing) -> Polynomial {
    Polynomial::from_terms(
        ring.clone(),
        d.iter().map(|(e, c)| {
            let pairs = e.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k));
            (c.clone(), Monomial::from_pairs(pairs).unwrap())
        }),
    )
}

fn clean(d: &mut DensePoly, modulus: Option<&BigInt>) {
    if let Some(m) = modulus {
        for c in d.values_mut() {
            *c = c.mod_floor(m);
        }
    }
    d.retain(|_, c| !c.is_zero());
}

/// Definition of dlex on dense vectors: total degree, then the first index
/// (x1 first) with differing exponents, larger exponent wins.
pub fn dlex_dense(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for k in 0..a.len().max(b.len()) {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

/// Naive double loop over terms.
pub fn naive_mul(p: &DensePoly, q: &DensePoly, modulus: Option<&BigInt>) -> DensePoly {
    let mut out = DensePoly::new();
    for (e1, c1) in p {
        for (e2, c2) in q {
            let e: Dense = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            *out.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
        }
    }
    clean(&mut out, modulus);
    out
}

/// How the brute-force engine picks its next rewrite.
pub enum Strategy<'a, R: Rng> {
    /// Greatest offending term (dense dlex), lowest offending variable.
    Greatest,
    Random(&'a mut R),
}

/// One rewrite `x_i^d -> P_i` per step until no exponent reaches `d`.
/// `reducers[i]` is `P_{i+1}` in dense form.
pub fn brute_force_reduce<R: Rng>(
    p: &DensePoly,
    reducers: &[DensePoly],
    d: u32,
    modulus: Option<&BigInt>,
    mut strategy: Strategy<'_, R>,
    max_steps: usize,
) -> Option<DensePoly> {
    let mut cur = p.clone();
    clean(&mut cur, modulus);
    for _ in 0..max_steps {
        let mut offending: Vec<&Dense> = cur.keys().filter(|e| e.iter().any(|&k| k >= d)).collect();
        if offending.is_empty() {
            return Some(cur);
        }
        offending.sort_by(|a, b| dlex_dense(a, b));
        let (e, var) = match &mut strategy {
            Strategy::Greatest => {
                let e = offending.last().unwrap();
                let var = e.iter().position(|&k| k >= d).unwrap();
                ((*e).clone(), var)
            }
            Strategy::Random(rng) => {
                let e = offending[rng.gen_range(0..offending.len())].clone();
                let vars: Vec<usize> = (0..e.len()).filter(|&i| e[i] >= d).collect();
                let var = vars[rng.gen_range(0..vars.len())];
                (e, var)
            }
        };
        let c = cur.remove(&e).unwrap();
        let mut cof = e.clone();
        cof[var] -= d;
        for (pe, pc) in &reducers[var] {
            let ne: Dense = cof.iter().zip(pe).map(|(a, b)| a + b).collect();
            *cur.entry(ne).or_insert_with(BigInt::zero) += &c * pc;
        }
        clean(&mut cur, modulus);
    }
    None
}

/// Dense reducers of `x_i^2 = s*x_i + x_{i+1}`, `x_n^2 = 0`.
pub fn family_reducers(nvars: usize, s: i64) -> Vec<DensePoly> {
    (0..nvars)
        .map(|i| {
            let mut p = DensePoly::new();
            if i + 1 < nvars {
                let mut a = vec![0; nvars];
                a[i] = 1;
                p.insert(a, BigInt::from(s));
                let mut b = vec![0; nvars];
                b[i + 1] = 1;
                p.insert(b, BigInt::one());
            }
            p
        })
        .collect()
}

pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &CoefficientRing,
    nvars: u32,
    max_terms: usize,
    max_exp: u32,
    max_deg: u32,
    coeff_bound: i64,
) -> Polynomial {
    let nterms = rng.gen_range(0..=max_terms);
    let terms = (0..nterms).map(|_| {
        let mut pairs = Vec::new();
        let mut budget = max_deg;
        for i in 1..=nvars {
            if budget == 0 {
                break;
            }
            let e = rng.gen_range(0..=max_exp.min(budget));
            budget -= e;
            pairs.push((i, e));
        }
        let c = rng.gen_range(-coeff_bound..=coeff_bound);
        (BigInt::from(c), Monomial::from_pairs(pairs).unwrap())
    });
    Polynomial::from_terms(ring.clone(), terms)
}

/// All exponent vectors in `nvars` variables with total degree <= `deg`,
/// listed in a fixed order.
pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Dense> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Dense>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, deg, &mut out);
    out
}

/// Affine Hilbert function over GF(2): `dim R_{<=deg} / span{m*g : deg(m*g) <= deg}`
/// by Gaussian elimination on bit rows. For a Groebner basis under a degree
/// order that span is exactly `I_{<=deg}`.
pub fn hilbert_gf2(generators: &[DensePoly], nvars: usize, deg: u32) -> usize {
    let monos = monomials_up_to(nvars, deg);
    assert!(monos.len() <= 128, "bit rows hold at most 128 monomials");
    let index: HashMap<&Dense, usize> = monos.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let mut rows: Vec<u128> = Vec::new();
    for g in generators {
        let gdeg = g.keys().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0);
        if gdeg > deg {
            continue;
        }
        for m in monomials_up_to(nvars, deg - gdeg) {
            let mut row = 0u128;
            for (e, c) in g {
                if c.is_odd() {
                    let prod: Dense = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    row ^= 1u128 << index[&prod];
                }
            }
            rows.push(row);
        }
    }
    // rank over GF(2)
    let mut basis: BTreeMap<u32, u128> = BTreeMap::new();
    for mut r in rows {
        while r != 0 {
            let top = 127 - r.leading_zeros();
            match basis.get(&top) {
                Some(&b) => r ^= b,
                None => {
                    basis.insert(top, r);
                    break;
                }
            }
        }
    }
    monos.len() - basis.len()
}

/// Pascal row by the additive rule.
pub fn pascal_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one()];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}
