use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A power product `x_{i1}^{e1} * x_{i2}^{e2} * ...` over 1-based variables.
///
/// Stored sparsely as `(index, exponent)` pairs sorted by index, with no zero
/// exponents. The empty monomial is `1`. `Ord` is the degree-lexicographic
/// order with `x1 > x2 > ... > xn`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(index: u32) -> Result<Self> {
        Self::power(index, 1)
    }

    pub fn power(index: u32, exponent: u32) -> Result<Self> {
        Self::from_pairs([(index, exponent)])
    }

    /// Builds a monomial from `(index, exponent)` pairs in any order.
    /// Repeated indices multiply; zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut exps: Vec<(u32, u32)> = Vec::new();
        for (i, e) in pairs {
            if i == 0 {
                return Err(Error::ZeroVariableIndex);
            }
            exps.push((i, e));
        }
        exps.sort_unstable_by_key(|&(i, _)| i);
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(exps.len());
        for (i, e) in exps {
            match merged.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => merged.push((i, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Ok(Monomial { exps: merged })
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|k| self.exps[k].1)
            .unwrap_or(0)
    }

    /// `(index, exponent)` pairs with nonzero exponent, ascending by index.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn vars(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&(i, _)| i)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn max_var(&self) -> Option<u32> {
        self.exps.last().map(|&(i, _)| i)
    }

    /// `Some(i)` when this is a pure power `x_i^e` with `e >= 1`.
    pub fn pure_power_var(&self) -> Option<u32> {
        match self.exps.as_slice() {
            [(i, _)] => Some(*i),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() && y < b.len() {
            match a[x].0.cmp(&b[y].0) {
                Ordering::Less => {
                    out.push(a[x]);
                    x += 1;
                }
                Ordering::Greater => {
                    out.push(b[y]);
                    y += 1;
                }
                Ordering::Equal => {
                    out.push((a[x].0, a[x].1 + b[y].1));
                    x += 1;
                    y += 1;
                }
            }
        }
        out.extend_from_slice(&a[x..]);
        out.extend_from_slice(&b[y..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(i, e)| {
                let r = e - other.exponent(i);
                (r != 0).then_some((i, r))
            })
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut pairs: Vec<(u32, u32)> = self.exps.clone();
        for &(i, e) in &other.exps {
            match pairs.binary_search_by_key(&i, |&(j, _)| j) {
                Ok(k) => pairs[k].1 = pairs[k].1.max(e),
                Err(k) => pairs.insert(k, (i, e)),
            }
        }
        Monomial { exps: pairs }
    }

    /// Order used for human-readable output: ascending, with the exponent of
    /// the highest-indexed variable most significant (1, x1, x2, x1*x2, x3, ...).
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut x, mut y) = (a.len(), b.len());
        while x > 0 && y > 0 {
            let (ia, ea) = a[x - 1];
            let (ib, eb) = b[y - 1];
            match ia.cmp(&ib) {
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => return Ordering::Less,
                Ordering::Equal => match ea.cmp(&eb) {
                    Ordering::Equal => {
                        x -= 1;
                        y -= 1;
                    }
                    ord => return ord,
                },
            }
        }
        x.cmp(&y)
    }
}

/// Degree-lexicographic comparison with `x1 > x2 > ... > xn`.
pub fn dlex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        let (p, q) = (&a.exps, &b.exps);
        for (&(ip, ep), &(iq, eq)) in p.iter().zip(q.iter()) {
            if ip != iq {
                // the monomial with the lower index present has the larger
                // exponent on that index
                return iq.cmp(&ip);
            }
            if ep != eq {
                return ep.cmp(&eq);
            }
        }
        p.len().cmp(&q.len())
    })
}

pub fn degsum(m: &Monomial) -> u64 {
    m.degree()
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        dlex_compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(i, e) in &self.exps {
            for _ in 0..e {
                if !first {
                    write!(f, "*")?;
                }
                write!(f, "x{i}")?;
                first = false;
            }
        }
        Ok(())
    }
}
