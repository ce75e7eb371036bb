//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by the exact-arithmetic and tiling operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A silver polynomial was requested with degree < 2.
    InvalidDegree(usize),
    /// An operation was asked to handle a polynomial degree beyond its
    /// configured bound (e.g. the irreducibility search).
    UnsupportedDegree { degree: usize, cap: usize },
    /// Two field elements with different moduli were combined.
    IncompatibleField,
    /// A `NumberField` was requested for a reducible or non-monic modulus.
    InvalidModulus(String),
    /// A precondition of the operation does not hold.
    Precondition(String),
    /// A decomposition P(X) = Q(X^d) was requested for a primitive polynomial.
    NoDecomposition,
    /// A bounded search ran out of budget.
    BudgetExhausted { budget: usize, what: &'static str },
    /// The conjugating matrix T is singular (zero constant coefficient).
    SingularT,
    /// A certification step could not be completed.
    CannotCertify(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDegree(n) => write!(f, "invalid degree {n}: silver polynomials need N >= 2"),
            Error::UnsupportedDegree { degree, cap } => {
                write!(f, "degree {degree} exceeds the configured bound {cap}")
            }
            Error::IncompatibleField => write!(f, "field elements have different moduli"),
            Error::InvalidModulus(m) => write!(f, "invalid field modulus: {m}"),
            Error::Precondition(m) => write!(f, "precondition violated: {m}"),
            Error::NoDecomposition => write!(f, "polynomial is already primitive; nothing to decompose"),
            Error::BudgetExhausted { budget, what } => {
                write!(f, "search budget of {budget} exhausted while looking for {what}")
            }
            Error::SingularT => write!(f, "constant coefficient is zero, T would be singular"),
            Error::CannotCertify(m) => write!(f, "cannot certify: {m}"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
