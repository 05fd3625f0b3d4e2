//! Text and JSON forms of polynomials.
//!
//! Text: terms joined by `" + "`, each `C`, `C*x<i>*x<j>*...` or, for a unit
//! coefficient on a non-constant monomial, just the variables. Terms are
//! listed in display order (constant first, then `x1, x2, x1*x2, x3, ...`).
//! Negative coefficients keep their sign: `1 + -3*x1`.
//!
//! JSON: `[{"c": "<decimal>", "e": [[index, exponent], ...]}, ...]` in
//! dlex-descending order.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{CoefficientRing, Monomial, Polynomial};
use crate::error::{Error, Result};

pub fn render(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<&(BigInt, Monomial)> = p.terms().iter().collect();
    terms.sort_by(|a, b| a.1.display_cmp(&b.1));
    terms
        .into_iter()
        .map(|(c, m)| {
            if m.is_one() {
                c.to_string()
            } else if c.is_one() {
                m.to_string()
            } else {
                format!("{c}*{m}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Var(u32),
    Plus,
    Minus,
    Star,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |k: &mut usize| {
        let start = *k;
        while *k < chars.len() && chars[*k].is_ascii_digit() {
            *k += 1;
        }
        chars[start..*k].iter().collect::<String>()
    };
    while k < chars.len() {
        match chars[k] {
            '+' => {
                out.push(Token::Plus);
                k += 1;
            }
            '-' => {
                out.push(Token::Minus);
                k += 1;
            }
            '*' => {
                out.push(Token::Star);
                k += 1;
            }
            'x' | 'X' => {
                k += 1;
                let d = digits(&mut k);
                if d.is_empty() {
                    return Err(Error::Parse("expected a variable index after 'x'".into()));
                }
                let index: u32 = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("variable index too large: x{d}")))?;
                if index == 0 {
                    return Err(Error::ZeroVariableIndex);
                }
                out.push(Token::Var(index));
            }
            c if c.is_ascii_digit() => {
                let d = digits(&mut k);
                out.push(Token::Num(d.parse().expect("ascii digits")));
            }
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

/// Parses the input grammar: integers, `x<i>`, `+`, `-`, `*`; whitespace is
/// ignored. Signs may repeat (`1 + -3*x1`). No parentheses or powers.
pub fn parse(s: &str, ring: CoefficientRing) -> Result<Polynomial> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut k = 0;
    loop {
        let mut negative = false;
        let mut signs = 0;
        while let Some(t @ (Token::Plus | Token::Minus)) = tokens.get(k) {
            negative ^= *t == Token::Minus;
            signs += 1;
            k += 1;
        }
        if signs == 0 && !terms.is_empty() {
            return Err(Error::Parse("expected '+' or '-' between terms".into()));
        }
        let mut coeff = BigInt::one();
        let mut pairs = Vec::new();
        loop {
            match tokens.get(k) {
                Some(Token::Num(n)) => coeff *= n,
                Some(Token::Var(i)) => pairs.push((*i, 1)),
                _ => return Err(Error::Parse("expected a number or variable".into())),
            }
            k += 1;
            if tokens.get(k) == Some(&Token::Star) {
                k += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, Monomial::from_pairs(pairs)?));
        match tokens.get(k) {
            None => break,
            Some(Token::Plus | Token::Minus) => continue,
            Some(_) => return Err(Error::Parse("expected '+' or '-' between terms".into())),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<(u32, u32)>,
}

pub fn to_json_terms(p: &Polynomial) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(c, m)| TermJson { c: c.to_string(), e: m.pairs().to_vec() })
        .collect()
}

pub fn from_json_terms(terms: &[TermJson], ring: CoefficientRing) -> Result<Polynomial> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let c: BigInt = t
            .c
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.c)))?;
        out.push((c, Monomial::from_pairs(t.e.iter().copied())?));
    }
    Ok(Polynomial::from_terms(ring, out))
}

pub fn to_json(p: &Polynomial) -> serde_json::Value {
    serde_json::to_value(to_json_terms(p)).expect("plain data serializes")
}

pub fn from_json(v: &serde_json::Value, ring: CoefficientRing) -> Result<Polynomial> {
    let terms: Vec<TermJson> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_terms(&terms, ring)
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    /// Parses over the integers.
    fn from_str(s: &str) -> Result<Self> {
        parse(s, CoefficientRing::Integers)
    }
}
