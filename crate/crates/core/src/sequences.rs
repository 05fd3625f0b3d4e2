//! Integer sequences read off the quotient rings, their binomial transforms,
//! and closed-form oracles for each of them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{CoefficientRing, Monomial, Polynomial};
use crate::quotient::{make_ring, required_vars, RingFamily};

/// Environment variable capping the worker threads used by batch generation.
pub const THREADS_ENV: &str = "RECRING_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    CentralBinomial,
    Gould,
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cbc" | "central" | "central_binomial" => Ok(SequenceId::CentralBinomial),
            "gould" => Ok(SequenceId::Gould),
            other => Err(Error::Parse(format!("unknown sequence {other:?}"))),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceId::CentralBinomial => "cbc",
            SequenceId::Gould => "gould",
        })
    }
}

/// `(c + x1)^n` in the given family sized by `required_vars(n)`, evaluated
/// at all ones. `n = 0` gives 1.
fn expand_and_sum(family: &RingFamily, c: i64, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::one());
    }
    let ring = make_ring(family, required_vars(n)?)?;
    let base = linear_base(ring.coeff_ring(), c);
    Ok(ring.pow(&base, n)?.evaluate_all_ones())
}

/// `c + x1` over `ring`.
pub fn linear_base(ring: &CoefficientRing, c: i64) -> Polynomial {
    Polynomial::from_terms(
        ring.clone(),
        [(BigInt::from(c), Monomial::one()), (BigInt::one(), Monomial::var(1).expect("x1"))],
    )
}

/// `(1 + x1)^n` in `K_b`, summed.
pub fn central_binomial_ring(n: u64) -> BigInt {
    expand_and_sum(&RingFamily::K, 1, n).expect("K_b is well formed")
}

/// `(2n)! / (n!)^2`.
pub fn central_binomial_oracle(n: u64) -> BigInt {
    let fact = |k: u64| (1..=k).fold(BigInt::one(), |acc, i| acc * i);
    let f = fact(n);
    fact(2 * n) / (&f * &f)
}

/// `(1 + x1)^n` in `K_b/(2)`, residues lifted to `{0, 1}` and summed.
pub fn gould_mod2_ring(n: u64) -> BigInt {
    expand_and_sum(&RingFamily::KMod(BigInt::from(2)), 1, n).expect("K_b/(2) is well formed")
}

/// `(1 + x1)^n` in `K'_b`, summed.
pub fn gould_signed_ring(n: u64) -> BigInt {
    expand_and_sum(&RingFamily::KPrime, 1, n).expect("K'_b is well formed")
}

/// `2^wt(n)`.
pub fn gould_oracle(n: u64) -> BigInt {
    BigInt::one() << n.count_ones()
}

/// The `t`-th binomial transform evaluated through the ring: `(t + 1 + x1)^n`
/// in `K_b` for central binomials, in `K'_b` for Gould's sequence.
pub fn transform_ring(seq: SequenceId, t: i64, n: u64) -> BigInt {
    let family = match seq {
        SequenceId::CentralBinomial => RingFamily::K,
        SequenceId::Gould => RingFamily::KPrime,
    };
    expand_and_sum(&family, t + 1, n).expect("built-in family is well formed")
}

/// Closed-form term of a base sequence, for the direct transform route.
pub fn oracle_term(seq: SequenceId, n: u64) -> BigInt {
    match seq {
        SequenceId::CentralBinomial => central_binomial_oracle(n),
        SequenceId::Gould => gould_oracle(n),
    }
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(BigInt::one());
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

// One forward (sign = +1) or inverse (sign = -1) step applied to a prefix.
fn transform_step(a: &[BigInt], inverse: bool) -> Vec<BigInt> {
    (0..a.len())
        .map(|n| {
            let row = binomial_row(n);
            row.iter()
                .zip(a)
                .enumerate()
                .map(|(k, (c, x))| {
                    let term = c * x;
                    if inverse && (n - k) % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum()
        })
        .collect()
}

/// `B_t(a)_0 .. B_t(a)_n` following the five-case recursive definition:
/// identity for `t = 0`, a forward sum for `t = 1` and recursion on `t - 1`
/// above it, an alternating sum for `t = -1` and recursion on `t + 1` below.
pub fn binomial_transform_prefix(a: &[BigInt], t: i64, n: usize) -> Result<Vec<BigInt>> {
    if a.len() <= n {
        return Err(Error::InsufficientTerms { needed: n, available: a.len() });
    }
    let prefix = &a[..=n];
    Ok(match t {
        0 => prefix.to_vec(),
        1 => transform_step(prefix, false),
        -1 => transform_step(prefix, true),
        t if t > 1 => transform_step(&binomial_transform_prefix(prefix, t - 1, n)?, false),
        t => transform_step(&binomial_transform_prefix(prefix, t + 1, n)?, true),
    })
}

/// `B_t(a)_n`.
pub fn binomial_transform_direct(a: &[BigInt], t: i64, n: usize) -> Result<BigInt> {
    Ok(binomial_transform_prefix(a, t, n)?.pop().expect("n + 1 terms"))
}

fn thread_cap() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Evaluates `f` on `from..=to` in parallel (capped by `RECRING_THREADS`),
/// returning results in index order.
pub fn generate_range<F>(from: u64, to: u64, f: F) -> Vec<BigInt>
where
    F: Fn(u64) -> BigInt + Sync + Send,
{
    let run = || (from..=to).into_par_iter().map(&f).collect::<Vec<_>>();
    match thread_cap() {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        },
        None => run(),
    }
}

/// Whether `a` is exactly the largest power of two dividing `b`.
pub fn is_exact_power_of_two_divisor(a: &BigInt, b: &BigInt) -> bool {
    if b.is_zero() {
        return false;
    }
    match b.trailing_zeros() {
        Some(z) => *a == BigInt::one() << z,
        None => false,
    }
}
