use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),
    #[error("coefficient ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("variable index 0 is not allowed (variables are x1, x2, ...)")]
    ZeroVariableIndex,
    #[error("variable x{index} is out of range for a ring with {num_vars} variables")]
    VariableOutOfRange { index: u32, num_vars: u32 },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("required_vars is undefined for n = 0")]
    NonPositiveLength,
    #[error("invalid ring specification: {0}")]
    InvalidRingSpec(String),
    #[error("reduction did not terminate within {0} rewrite steps")]
    NonTerminating(usize),
    #[error("division blocked: leading coefficient {divisor} does not divide {coefficient}")]
    DivisionBlocked { coefficient: String, divisor: String },
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("generators do not form a Groebner basis (pair ({0}, {1}) fails)")]
    NotGroebner(usize, usize),
    #[error("need terms a_0..a_{needed}, but only {available} were given")]
    InsufficientTerms { needed: usize, available: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
