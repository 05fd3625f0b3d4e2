//! S-polynomials, multivariate division and Buchberger's criterion under dlex.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{text, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionResult {
    /// One quotient per divisor, in divisor order.
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailingPair {
    /// 1-based generator positions, `i < j`.
    pub i: usize,
    pub j: usize,
    pub remainder: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerReport {
    pub is_groebner: bool,
    pub failing_pair: Option<FailingPair>,
    pub pairs_checked: usize,
}

#[derive(Serialize)]
struct FailingPairJson {
    i: usize,
    j: usize,
    remainder: serde_json::Value,
    remainder_text: String,
}

#[derive(Serialize)]
struct GroebnerReportJson {
    is_groebner: bool,
    failing_pair: Option<FailingPairJson>,
    pairs_checked: usize,
}

impl GroebnerReport {
    pub fn to_json(&self) -> serde_json::Value {
        let doc = GroebnerReportJson {
            is_groebner: self.is_groebner,
            failing_pair: self.failing_pair.as_ref().map(|f| FailingPairJson {
                i: f.i,
                j: f.j,
                remainder: text::to_json(&f.remainder),
                remainder_text: f.remainder.to_string(),
            }),
            pairs_checked: self.pairs_checked,
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }
}

fn unit_leading(p: &Polynomial) -> Result<(BigInt, Monomial)> {
    let (c, m) = p.leading_term()?;
    let inv = p.ring().inverse(c).ok_or_else(|| Error::NonUnitLeading(c.to_string()))?;
    Ok((inv, m.clone()))
}

/// `S(f, g) = L/lt(f) * f - L/lt(g) * g` with `L = lcm(lm(f), lm(g))`.
///
/// Leading coefficients must be units of the coefficient ring.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.ring() != g.ring() {
        return Err(Error::RingMismatch(f.ring().to_string(), g.ring().to_string()));
    }
    let (inv_f, lm_f) = unit_leading(f)?;
    let (inv_g, lm_g) = unit_leading(g)?;
    let lcm = lm_f.lcm(&lm_g);
    let left = f.mul_term(&inv_f, &lcm.div(&lm_f).expect("lcm is a multiple"));
    let right = g.mul_term(&inv_g, &lcm.div(&lm_g).expect("lcm is a multiple"));
    left.sub(&right)
}

/// Multivariate division under dlex. The current leading term is cancelled
/// with the first divisor (in list order) whose leading monomial divides it;
/// otherwise it moves to the remainder.
pub fn divide(p: &Polynomial, divisors: &[Polynomial]) -> Result<DivisionResult> {
    let ring = p.ring().clone();
    for d in divisors {
        if d.ring() != &ring {
            return Err(Error::RingMismatch(d.ring().to_string(), ring.to_string()));
        }
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let mut work: BTreeMap<Monomial, BigInt> =
        p.terms().iter().map(|(c, m)| (m.clone(), c.clone())).collect();
    let mut quotients: Vec<HashMap<Monomial, BigInt>> = vec![HashMap::new(); divisors.len()];
    let mut remainder: Vec<(BigInt, Monomial)> = Vec::new();

    while let Some((m, c)) = work.pop_last() {
        let c = ring.normalize(c);
        if c.is_zero() {
            continue;
        }
        let hit = divisors.iter().enumerate().find_map(|(k, d)| {
            let (_, lm) = d.leading_term().expect("nonzero divisor");
            m.div(lm).map(|cofactor| (k, cofactor))
        });
        let Some((k, cofactor)) = hit else {
            remainder.push((c, m));
            continue;
        };
        let d = &divisors[k];
        let (lc, _) = d.leading_term().expect("nonzero divisor");
        let q = ring.exact_div(&c, lc).ok_or_else(|| Error::DivisionBlocked {
            coefficient: c.to_string(),
            divisor: lc.to_string(),
        })?;
        *quotients[k].entry(cofactor.clone()).or_insert_with(BigInt::zero) += &q;
        // the leading term cancels exactly; subtract the tail
        for (dc, dm) in &d.terms()[1..] {
            *work.entry(dm.mul(&cofactor)).or_insert_with(BigInt::zero) -= &q * dc;
        }
    }

    Ok(DivisionResult {
        quotients: quotients
            .into_iter()
            .map(|acc| Polynomial::from_map(ring.clone(), acc))
            .collect(),
        remainder: Polynomial::from_sorted_unchecked(ring, remainder),
    })
}

/// Buchberger's criterion: every S-polynomial of a pair reduces to zero
/// modulo the full generator list.
pub fn is_groebner(generators: &[Polynomial]) -> Result<GroebnerReport> {
    for g in generators {
        unit_leading(g)?;
    }
    let pairs: Vec<(usize, usize)> = (0..generators.len())
        .flat_map(|i| (i + 1..generators.len()).map(move |j| (i, j)))
        .collect();
    let remainders: Vec<Result<Polynomial>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let s = s_polynomial(&generators[i], &generators[j])?;
            Ok(divide(&s, generators)?.remainder)
        })
        .collect();
    let mut failing_pair = None;
    for (&(i, j), r) in pairs.iter().zip(remainders) {
        let r = r?;
        if !r.is_zero() {
            failing_pair = Some(FailingPair { i: i + 1, j: j + 1, remainder: r });
            break;
        }
    }
    Ok(GroebnerReport {
        is_groebner: failing_pair.is_none(),
        failing_pair,
        pairs_checked: pairs.len(),
    })
}

/// Whether every monomial of degree at least `d` occurs in at most one reducer.
pub fn has_unique_mixed_terms(reducers: &[Polynomial], d: u32) -> bool {
    let mut owner: HashMap<&Monomial, usize> = HashMap::new();
    for (k, p) in reducers.iter().enumerate() {
        for (_, m) in p.terms() {
            if m.degree() < d as u64 {
                continue;
            }
            if let Some(&prev) = owner.get(m) {
                if prev != k {
                    return false;
                }
            }
            owner.insert(m, k);
        }
    }
    true
}
