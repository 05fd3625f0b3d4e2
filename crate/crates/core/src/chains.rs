//! Regular-chain checks: triangularity, regular leading coefficients and
//! zero-dimensionality of the generated ideal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::is_groebner;
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariableOrder {
    /// `x1, x2, ..., xn`
    Ascending,
    /// `xn, ..., x2, x1`
    Reversed,
}

impl VariableOrder {
    fn sequence(self, num_vars: u32) -> Vec<u32> {
        match self {
            VariableOrder::Ascending => (1..=num_vars).collect(),
            VariableOrder::Reversed => (1..=num_vars).rev().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangularity {
    pub order: VariableOrder,
    /// Generator positions (0-based) sorted by main variable.
    pub chain: Vec<usize>,
    /// Main variable of each generator in `chain`.
    pub main_vars: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    True,
    False,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub triangular: bool,
    pub variable_order: Option<VariableOrder>,
    pub chain: Option<Vec<usize>>,
    pub leading_regular: Regularity,
    pub zero_dimensional: bool,
    pub is_regular_chain: bool,
}

impl ChainReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("plain data serializes");
        // report chain positions 1-based, like the generator names g1..gn
        if let Some(chain) = &self.chain {
            v["chain"] = serde_json::json!(chain.iter().map(|k| k + 1).collect::<Vec<_>>());
        }
        v
    }
}

fn triangular_under(generators: &[Polynomial], num_vars: u32, order: VariableOrder) -> Option<Triangularity> {
    let seq = order.sequence(num_vars);
    let rank = |v: u32| seq.iter().position(|&w| w == v);
    let mut mains: Vec<(usize, usize)> = Vec::with_capacity(generators.len());
    for (k, g) in generators.iter().enumerate() {
        let mut best: Option<usize> = None;
        for v in g.support() {
            let r = rank(v)?;
            best = Some(best.map_or(r, |b| b.max(r)));
        }
        mains.push((best?, k));
    }
    mains.sort_unstable();
    if mains.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    Some(Triangularity {
        order,
        chain: mains.iter().map(|&(_, k)| k).collect(),
        main_vars: mains.iter().map(|&(r, _)| seq[r]).collect(),
    })
}

/// Tries the ascending order `x1 < ... < xn` first, then the reversed one.
/// Under an order, the generators are triangular when their main variables
/// (greatest variable present) are pairwise distinct.
pub fn check_triangular(generators: &[Polynomial], num_vars: u32) -> Option<Triangularity> {
    if generators.is_empty() {
        return None;
    }
    [VariableOrder::Ascending, VariableOrder::Reversed]
        .into_iter()
        .find_map(|order| triangular_under(generators, num_vars, order))
}

/// Coefficient of the highest power of `var` in `g`, as a polynomial in the
/// remaining variables.
fn leading_coefficient_in(g: &Polynomial, var: u32) -> Polynomial {
    let top = g.terms().iter().map(|(_, m)| m.exponent(var)).max().unwrap_or(0);
    let strip = Monomial::power(var, top).expect("var >= 1");
    Polynomial::from_terms(
        g.ring().clone(),
        g.terms()
            .iter()
            .filter(|(_, m)| m.exponent(var) == top)
            .map(|(c, m)| (c.clone(), m.div(&strip).expect("top power divides"))),
    )
}

/// Constant leading coefficients are decided exactly (regular iff not a zero
/// divisor); anything else is undetermined.
pub fn check_leading_regular(generators: &[Polynomial], tri: &Triangularity) -> Regularity {
    let mut all_true = true;
    for (&k, &var) in tri.chain.iter().zip(&tri.main_vars) {
        let lc = leading_coefficient_in(&generators[k], var);
        if !lc.is_constant() {
            return Regularity::Undetermined;
        }
        let c = lc.terms().first().map(|(c, _)| c.clone()).unwrap_or_default();
        all_true &= generators[k].ring().is_regular(&c);
    }
    if all_true {
        Regularity::True
    } else {
        Regularity::False
    }
}

/// A Groebner basis generates a zero-dimensional ideal iff every variable has
/// a pure power among the leading monomials. Errors unless the generators
/// pass Buchberger's criterion.
pub fn check_zero_dimensional(generators: &[Polynomial], num_vars: u32) -> Result<bool> {
    let report = is_groebner(generators)?;
    if let Some(f) = report.failing_pair {
        return Err(Error::NotGroebner(f.i, f.j));
    }
    Ok(pure_power_criterion(generators, num_vars))
}

pub(crate) fn pure_power_criterion(generators: &[Polynomial], num_vars: u32) -> bool {
    let mut covered = vec![false; num_vars as usize + 1];
    for g in generators {
        if let Ok((_, lm)) = g.leading_term() {
            if let Some(v) = lm.pure_power_var() {
                if v <= num_vars {
                    covered[v as usize] = true;
                }
            }
        }
    }
    covered[1..].iter().all(|&c| c)
}

pub fn is_regular_chain(generators: &[Polynomial], num_vars: u32) -> Result<ChainReport> {
    let tri = check_triangular(generators, num_vars);
    let leading_regular = match &tri {
        Some(t) => check_leading_regular(generators, t),
        None => Regularity::Undetermined,
    };
    let zero_dimensional = check_zero_dimensional(generators, num_vars)?;
    Ok(ChainReport {
        triangular: tri.is_some(),
        variable_order: tri.as_ref().map(|t| t.order),
        chain: tri.map(|t| t.chain),
        leading_regular,
        zero_dimensional,
        is_regular_chain: leading_regular == Regularity::True && zero_dimensional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse;
    use crate::poly::CoefficientRing;
    use crate::quotient::{make_ring, RingFamily};

    fn p(s: &str) -> Polynomial {
        parse(s, CoefficientRing::Integers).unwrap()
    }

    #[test]
    fn k3_is_triangular_only_in_reversed_order() {
        let gens = make_ring(&RingFamily::K, 3).unwrap().ideal_generators();
        assert!(triangular_under(&gens, 3, VariableOrder::Ascending).is_none());
        let t = check_triangular(&gens, 3).unwrap();
        assert_eq!(t.order, VariableOrder::Reversed);
        assert_eq!(t.chain, vec![2, 1, 0]);
        assert_eq!(t.main_vars, vec![3, 2, 1]);
    }

    #[test]
    fn triangular_examples() {
        let t = check_triangular(&[p("x1*x1"), p("x2*x2")], 2).unwrap();
        assert_eq!(t.order, VariableOrder::Ascending);
        assert_eq!(t.chain, vec![0, 1]);

        // ascending: main variables x2, x3, x1 are distinct
        let gens = [p("x1 + x2"), p("x1 + x2 + x3"), p("x1")];
        let t = check_triangular(&gens, 3).unwrap();
        assert_eq!(t.order, VariableOrder::Ascending);
        assert_eq!(t.chain, vec![2, 0, 1]);

        // both orders put two generators on the same main variable
        assert!(check_triangular(&[p("x1 + x2"), p("x1*x2"), p("x3")], 3).is_none());
        // a constant has no main variable
        assert!(check_triangular(&[p("3")], 1).is_none());
    }

    #[test]
    fn leading_regular_examples() {
        let gens = make_ring(&RingFamily::K, 5).unwrap().ideal_generators();
        let t = check_triangular(&gens, 5).unwrap();
        assert_eq!(check_leading_regular(&gens, &t), Regularity::True);

        let gens = [p("2*x1*x1 - x2"), p("x2*x2")];
        let t = check_triangular(&gens, 2).unwrap();
        assert_eq!(check_leading_regular(&gens, &t), Regularity::True);

        let gens = [p("x2*x1*x1 - 1"), p("x2*x2")];
        let t = check_triangular(&gens, 2).unwrap();
        assert_eq!(check_leading_regular(&gens, &t), Regularity::Undetermined);

        let z4 = CoefficientRing::modulo(4).unwrap();
        let gens = [parse("2*x1*x1 + x2", z4.clone()).unwrap(), parse("x2*x2", z4).unwrap()];
        let t = check_triangular(&gens, 2).unwrap();
        assert_eq!(check_leading_regular(&gens, &t), Regularity::False);
    }

    #[test]
    fn zero_dimensional_examples() {
        let gens = make_ring(&RingFamily::K, 4).unwrap().ideal_generators();
        assert!(check_zero_dimensional(&gens, 4).unwrap());
        assert!(!check_zero_dimensional(&[p("x1*x1 - x2")], 2).unwrap());
        assert!(check_zero_dimensional(&[p("x1*x1"), p("x2*x2"), p("x3*x3")], 3).unwrap());
        assert_eq!(
            check_zero_dimensional(&[p("x1 - x2*x2"), p("x2*x2")], 2),
            Err(Error::NotGroebner(1, 2))
        );
    }

    #[test]
    fn regular_chain_examples() {
        for family in [RingFamily::K, RingFamily::KPrime] {
            let gens = make_ring(&family, 4).unwrap().ideal_generators();
            let r = is_regular_chain(&gens, 4).unwrap();
            assert!(r.is_regular_chain, "{family:?}");
            assert_eq!(r.variable_order, Some(VariableOrder::Reversed));
        }
        let r = is_regular_chain(&[p("x1*x1 - x2")], 2).unwrap();
        assert!(!r.zero_dimensional);
        assert!(!r.is_regular_chain);
    }

    #[test]
    fn report_json_uses_one_based_chain() {
        let gens = make_ring(&RingFamily::K, 2).unwrap().ideal_generators();
        let v = is_regular_chain(&gens, 2).unwrap().to_json();
        assert_eq!(v["chain"], serde_json::json!([2, 1]));
        assert_eq!(v["variable_order"], "reversed");
        assert_eq!(v["leading_regular"], "true");
        assert_eq!(v["is_regular_chain"], true);
    }
}
