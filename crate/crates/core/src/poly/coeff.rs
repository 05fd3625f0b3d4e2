use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact coefficient ring: the integers or a residue ring `Z/mZ`.
///
/// Coefficients themselves are plain [`BigInt`]s; a polynomial carries the
/// ring that gives them meaning. Over `Z/mZ` every stored coefficient is the
/// canonical residue in `[0, m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    IntegersMod(BigInt),
}

impl CoefficientRing {
    pub fn integers() -> Self {
        CoefficientRing::Integers
    }

    pub fn modulo(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        Ok(CoefficientRing::IntegersMod(m))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::IntegersMod(m) => Some(m),
        }
    }

    /// Canonical representative of `c` in this ring.
    pub fn normalize(&self, c: BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => c,
            CoefficientRing::IntegersMod(m) => c.mod_floor(m),
        }
    }

    pub fn is_unit(&self, c: &BigInt) -> bool {
        self.inverse(c).is_some()
    }

    pub fn inverse(&self, c: &BigInt) -> Option<BigInt> {
        match self {
            CoefficientRing::Integers => {
                if c.abs().is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            CoefficientRing::IntegersMod(m) => {
                let c = c.mod_floor(m);
                let ext = c.extended_gcd(m);
                if ext.gcd.is_one() {
                    Some(ext.x.mod_floor(m))
                } else {
                    None
                }
            }
        }
    }

    /// True when `c` is not a zero divisor (and not zero).
    pub fn is_regular(&self, c: &BigInt) -> bool {
        match self {
            CoefficientRing::Integers => !c.is_zero(),
            CoefficientRing::IntegersMod(m) => c.mod_floor(m).gcd(m).is_one(),
        }
    }

    /// Exact quotient `a / b` in the ring, if one exists with the usual
    /// division semantics (unit divisor, or exact integer division over `Z`).
    pub fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        match self {
            CoefficientRing::Integers => {
                if b.is_zero() {
                    return None;
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(q)
            }
            CoefficientRing::IntegersMod(m) => self.inverse(b).map(|inv| (a * inv).mod_floor(m)),
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{m}Z"),
        }
    }
}
