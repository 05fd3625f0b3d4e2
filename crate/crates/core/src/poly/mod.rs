//! Sparse multivariate polynomials over `Z` or `Z/mZ`.
//!
//! A [`Polynomial`] is always canonical: terms sorted strictly descending in
//! dlex order, no zero coefficients, coefficients reduced into the ring.

mod coeff;
mod monomial;
pub mod text;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use coeff::CoefficientRing;
pub use monomial::{degsum, dlex_compare, Monomial};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: CoefficientRing,
    terms: Vec<(BigInt, Monomial)>,
}

impl Polynomial {
    pub fn zero(ring: CoefficientRing) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn one(ring: CoefficientRing) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: CoefficientRing, c: impl Into<BigInt>) -> Self {
        Self::from_terms(ring, [(c.into(), Monomial::one())])
    }

    pub fn var(ring: CoefficientRing, index: u32) -> Result<Self> {
        Ok(Self::from_terms(ring, [(BigInt::one(), Monomial::var(index)?)]))
    }

    /// Builds the canonical polynomial from arbitrary terms: like monomials
    /// are combined, coefficients reduced, zeros dropped.
    pub fn from_terms(
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (BigInt, Monomial)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (c, m) in terms {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(ring, acc)
    }

    pub(crate) fn from_map(ring: CoefficientRing, acc: HashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<(BigInt, Monomial)> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = ring.normalize(c);
                (!c.is_zero()).then_some((c, m))
            })
            .collect();
        terms.sort_unstable_by(|a, b| b.1.cmp(&a.1));
        Polynomial { ring, terms }
    }

    /// Terms already known to be distinct, nonzero, normalized and sorted.
    pub(crate) fn from_sorted_unchecked(ring: CoefficientRing, terms: Vec<(BigInt, Monomial)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    /// Terms in dlex-descending order.
    pub fn terms(&self) -> &[(BigInt, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(BigInt, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(_, m)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms
            .binary_search_by(|(_, t)| m.cmp(t))
            .map(|k| self.terms[k].0.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    pub fn max_var(&self) -> Option<u32> {
        self.terms.iter().filter_map(|(_, m)| m.max_var()).max()
    }

    /// Sorted, deduplicated variable indices occurring in the polynomial.
    pub fn support(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self.terms.iter().flat_map(|(_, m)| m.vars()).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// The dlex-greatest term.
    pub fn leading_term(&self) -> Result<(&BigInt, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.to_string(), other.ring.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    // Linear merge of two sorted term lists.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        use std::cmp::Ordering;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        let rhs = |c: &BigInt| if negate { self.ring.normalize(-c) } else { c.clone() };
        while x < a.len() || y < b.len() {
            let ord = match (a.get(x), b.get(y)) {
                (Some(p), Some(q)) => q.1.cmp(&p.1),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[x].clone());
                    x += 1;
                }
                Ordering::Greater => {
                    out.push((rhs(&b[y].0), b[y].1.clone()));
                    y += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[x].0 - &b[y].0 } else { &a[x].0 + &b[y].0 };
                    let c = self.ring.normalize(c);
                    if !c.is_zero() {
                        out.push((c, a[x].1.clone()));
                    }
                    x += 1;
                    y += 1;
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (self.ring.normalize(-c), m.clone()))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Product in the free polynomial ring; no ideal reduction.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(Self::from_map(self.ring.clone(), self.mul_accumulate(other)))
    }

    pub(crate) fn mul_accumulate(&self, other: &Polynomial) -> HashMap<Monomial, BigInt> {
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (c1, m1) in &self.terms {
            for (c2, m2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(d, n)| {
                let c = self.ring.normalize(c * d);
                (!c.is_zero()).then(|| (c, n.mul(m)))
            })
            .collect();
        // multiplying every monomial by the same m preserves dlex order
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        self.mul_term(c, &Monomial::one())
    }

    /// Sum of all coefficients, computed in `Z` (residues are lifted to
    /// their canonical representatives in `[0, m)` first).
    pub fn evaluate_all_ones(&self) -> BigInt {
        self.terms.iter().map(|(c, _)| c).sum()
    }

    pub fn map_coefficients(&self, target: &CoefficientRing) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter_map(|(c, m)| {
                let c = target.normalize(c.clone());
                (!c.is_zero()).then(|| (c, m.clone()))
            })
            .collect();
        Polynomial { ring: target.clone(), terms }
    }

    /// Re-normalizes the term list; a no-op for every value this crate builds.
    pub fn renormalized(&self) -> Polynomial {
        Self::from_terms(self.ring.clone(), self.terms.iter().cloned())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}
