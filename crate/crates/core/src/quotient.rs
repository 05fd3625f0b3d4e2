//! Recursive polynomial quotient rings `R[x1..xn] / <x_i^d - P_i>`.
//!
//! Every element is represented by its normal form: the unique polynomial
//! with all exponents below `d` obtained by rewriting `x_i^d -> P_i`
//! (for `i = n` the rewrite deletes the term).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::text::{self, TermJson};
use crate::poly::{CoefficientRing, Monomial, Polynomial};

/// Rewrite budget for reducer tables that are not dlex-decreasing.
pub const UNORDERED_REWRITE_BUDGET: usize = 1_000_000;

/// The built-in ring families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingFamily {
    /// `x_i^2 = 2x_i + x_{i+1}` over `Z`.
    K,
    /// `x_i^2 = 2x_i + x_{i+1}` over `Z/mZ`.
    KMod(BigInt),
    /// `x_i^2 = -2x_i + x_{i+1}` over `Z`.
    KPrime,
}

impl RingFamily {
    pub fn name(&self) -> &'static str {
        match self {
            RingFamily::K => "K",
            RingFamily::KMod(_) => "Kmod",
            RingFamily::KPrime => "Kprime",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    num_vars: u32,
    degree: u32,
    reducers: Vec<Polynomial>,
    coeff_ring: CoefficientRing,
    // every reducer term is dlex-smaller than x_i^d
    order_compatible: bool,
    rewrite_budget: usize,
}

/// Expands a family into its ring with `num_vars` variables.
pub fn make_ring(family: &RingFamily, num_vars: u32) -> Result<RingSpec> {
    if num_vars == 0 {
        return Err(Error::InvalidRingSpec("num_vars must be at least 1".into()));
    }
    let (coeff_ring, two) = match family {
        RingFamily::K => (CoefficientRing::Integers, 2),
        RingFamily::KMod(m) => (CoefficientRing::modulo(m.clone())?, 2),
        RingFamily::KPrime => (CoefficientRing::Integers, -2),
    };
    let reducers = (1..=num_vars)
        .map(|i| {
            if i == num_vars {
                return Polynomial::zero(coeff_ring.clone());
            }
            Polynomial::from_terms(
                coeff_ring.clone(),
                [
                    (BigInt::from(two), Monomial::var(i).expect("i >= 1")),
                    (BigInt::one(), Monomial::var(i + 1).expect("i >= 1")),
                ],
            )
        })
        .collect();
    RingSpec::new(num_vars, 2, reducers, coeff_ring)
}

/// `floor(log2 n) + 2`, the number of variables used to expand `(1 + x1)^n`.
pub fn required_vars(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NonPositiveLength);
    }
    Ok(n.ilog2() + 2)
}

impl RingSpec {
    pub fn new(
        num_vars: u32,
        degree: u32,
        reducers: Vec<Polynomial>,
        coeff_ring: CoefficientRing,
    ) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidRingSpec("num_vars must be at least 1".into()));
        }
        if degree < 2 {
            return Err(Error::InvalidRingSpec(format!("degree must be at least 2, got {degree}")));
        }
        if reducers.len() != num_vars as usize {
            return Err(Error::InvalidRingSpec(format!(
                "expected {num_vars} reducers, got {}",
                reducers.len()
            )));
        }
        let mut order_compatible = true;
        for (k, p) in reducers.iter().enumerate() {
            let i = k as u32 + 1;
            if p.ring() != &coeff_ring {
                return Err(Error::RingMismatch(p.ring().to_string(), coeff_ring.to_string()));
            }
            if let Some(v) = p.max_var() {
                if v > num_vars {
                    return Err(Error::VariableOutOfRange { index: v, num_vars });
                }
            }
            for (_, m) in p.terms() {
                if m.pairs().iter().any(|&(_, e)| e >= degree) {
                    return Err(Error::InvalidRingSpec(format!(
                        "reducer P_{i} is not in normal form (exponent >= {degree})"
                    )));
                }
            }
            let head = Monomial::power(i, degree)?;
            order_compatible &= p.terms().iter().all(|(_, m)| *m < head);
        }
        if !reducers[num_vars as usize - 1].is_zero() {
            return Err(Error::InvalidRingSpec(format!("P_{num_vars} must be zero")));
        }
        Ok(RingSpec {
            num_vars,
            degree,
            reducers,
            coeff_ring,
            order_compatible,
            rewrite_budget: UNORDERED_REWRITE_BUDGET,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff_ring(&self) -> &CoefficientRing {
        &self.coeff_ring
    }

    /// `P_1, ..., P_n`.
    pub fn reducers(&self) -> &[Polynomial] {
        &self.reducers
    }

    pub fn reducer(&self, index: u32) -> &Polynomial {
        &self.reducers[index as usize - 1]
    }

    pub fn is_order_compatible(&self) -> bool {
        self.order_compatible
    }

    /// Caps the number of rewrites for reducer tables that are not
    /// order-compatible. Ignored otherwise.
    pub fn with_rewrite_budget(mut self, steps: usize) -> Self {
        self.rewrite_budget = steps;
        self
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.coeff_ring.clone())
    }

    /// `x_i^d - P_i` for `i = 1..n`.
    pub fn ideal_generators(&self) -> Vec<Polynomial> {
        (1..=self.num_vars)
            .map(|i| {
                let head = Polynomial::from_terms(
                    self.coeff_ring.clone(),
                    [(BigInt::one(), Monomial::power(i, self.degree).expect("i >= 1"))],
                );
                head.sub(self.reducer(i)).expect("same coefficient ring")
            })
            .collect()
    }

    fn check_operand(&self, p: &Polynomial) -> Result<()> {
        if p.ring() != &self.coeff_ring {
            return Err(Error::RingMismatch(p.ring().to_string(), self.coeff_ring.to_string()));
        }
        if let Some(v) = p.max_var() {
            if v > self.num_vars {
                return Err(Error::VariableOutOfRange { index: v, num_vars: self.num_vars });
            }
        }
        Ok(())
    }

    /// Normal form of `p` modulo the ideal.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.check_operand(p)?;
        self.reduce_terms(p.terms().iter().cloned())
    }

    // Rewrites the dlex-greatest offending term first, at its lowest-indexed
    // offending variable. For order-compatible tables every rewrite replaces
    // a monomial by strictly smaller ones, so popping the greatest key visits
    // each monomial at most once.
    fn reduce_terms(&self, terms: impl IntoIterator<Item = (BigInt, Monomial)>) -> Result<Polynomial> {
        let mut work: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (c, m) in terms {
            *work.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let budget = (!self.order_compatible).then_some(self.rewrite_budget);
        let mut steps = 0usize;
        let mut done: Vec<(BigInt, Monomial)> = Vec::new();
        let mut late: HashMap<Monomial, BigInt> = HashMap::new();

        while let Some((m, c)) = work.pop_last() {
            let c = self.coeff_ring.normalize(c);
            if c.is_zero() {
                continue;
            }
            let site = m.pairs().iter().find(|&&(_, e)| e >= self.degree).map(|&(i, _)| i);
            let Some(i) = site else {
                if self.order_compatible {
                    done.push((c, m));
                } else {
                    *late.entry(m).or_insert_with(BigInt::zero) += c;
                }
                continue;
            };
            if let Some(limit) = budget {
                steps += 1;
                if steps > limit {
                    return Err(Error::NonTerminating(limit));
                }
            }
            let cofactor = m
                .div(&Monomial::power(i, self.degree)?)
                .expect("offending variable has exponent >= d");
            for (pc, pm) in self.reducer(i).terms() {
                let nm = cofactor.mul(pm);
                debug_assert!(!self.order_compatible || nm < m, "rewrite must decrease dlex");
                *work.entry(nm).or_insert_with(BigInt::zero) += &c * pc;
            }
        }

        if self.order_compatible {
            Ok(Polynomial::from_sorted_unchecked(self.coeff_ring.clone(), done))
        } else {
            Ok(Polynomial::from_map(self.coeff_ring.clone(), late))
        }
    }

    /// `reduce(p * q)`.
    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.check_operand(p)?;
        self.check_operand(q)?;
        self.reduce_terms(p.mul_accumulate(q).into_iter().map(|(m, c)| (c, m)))
    }

    /// `base^exp` by binary exponentiation, reducing after every product.
    pub fn pow(&self, base: &Polynomial, exp: u64) -> Result<Polynomial> {
        let mut acc = self.one();
        if exp == 0 {
            return Ok(acc);
        }
        let mut sq = self.reduce(base)?;
        let mut e = exp;
        loop {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            sq = self.mul(&sq, &sq)?;
        }
        Ok(acc)
    }

    /// Whether `p` has every exponent below `d`.
    pub fn is_normal(&self, p: &Polynomial) -> bool {
        p.terms()
            .iter()
            .all(|(_, m)| m.pairs().iter().all(|&(_, e)| e < self.degree))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let coeff = match &self.coeff_ring {
            CoefficientRing::Integers => CoeffJson { kind: "Z".into(), m: None },
            CoefficientRing::IntegersMod(m) => CoeffJson { kind: "Zmod".into(), m: Some(m.to_string().into()) },
        };
        let doc = RingSpecJson {
            d: self.degree,
            n: self.num_vars,
            coeff,
            p: self.reducers.iter().map(text::to_json_terms).collect(),
        };
        serde_json::to_value(doc).expect("plain data serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let doc: RingSpecJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let coeff_ring = match (doc.coeff.kind.as_str(), doc.coeff.m) {
            ("Z", None) => CoefficientRing::Integers,
            ("Zmod", Some(m)) => {
                let m: BigInt = m
                    .to_string()
                    .trim_matches('"')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad modulus {m}")))?;
                CoefficientRing::modulo(m)?
            }
            ("Z", Some(_)) => return Err(Error::Parse("modulus given for kind Z".into())),
            ("Zmod", None) => return Err(Error::Parse("kind Zmod requires \"m\"".into())),
            (k, _) => return Err(Error::Parse(format!("unknown coefficient kind {k:?}"))),
        };
        let reducers = doc
            .p
            .iter()
            .map(|terms| text::from_json_terms(terms, coeff_ring.clone()))
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(doc.n, doc.d, reducers, coeff_ring)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CoeffJson {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<ModulusJson>,
}

// The modulus may be written as a JSON number or a decimal string.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ModulusJson {
    Num(u64),
    Str(String),
}

impl From<String> for ModulusJson {
    fn from(s: String) -> Self {
        match s.parse::<u64>() {
            Ok(n) => ModulusJson::Num(n),
            Err(_) => ModulusJson::Str(s),
        }
    }
}

impl std::fmt::Display for ModulusJson {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModulusJson::Num(n) => write!(f, "{n}"),
            ModulusJson::Str(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RingSpecJson {
    d: u32,
    n: u32,
    coeff: CoeffJson,
    #[serde(rename = "P")]
    p: Vec<Vec<TermJson>>,
}
