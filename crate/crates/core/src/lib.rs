//! Recursive polynomial quotient rings.
//!
//! Multivariate quotient rings `R[x1..xn] / <x_i^d - P_i>` whose relations
//! follow a recurrence in the variable index, with exact normal-form
//! arithmetic, Groebner-basis and regular-chain verification, and the integer
//! sequences (central binomial coefficients, Gould's sequence, and their
//! binomial transforms) obtained by expanding `(c + x1)^n` in them.

pub mod chains;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod quotient;
pub mod sequences;

pub use error::{Error, Result};
pub use poly::{CoefficientRing, Monomial, Polynomial};
pub use quotient::{make_ring, required_vars, RingFamily, RingSpec};
