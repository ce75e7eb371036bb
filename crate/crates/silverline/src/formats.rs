//! JSON and CSV wire formats.
//!
//! Polynomials serialize as arrays of decimal-string coefficients, lowest
//! degree first; algebraic reals as `{defining, lo, hi}` with exact rational
//! strings "p/q"; matrices as row-major arrays of decimal strings. Exact
//! values round-trip bit-for-bit; printed decimals truncate toward zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use silverline_core::algebraic::parse_rational;
use silverline_core::field::FieldElement;
use silverline_core::matrix::IntMatrix;
use silverline_core::poly::{rational_to_string, IntPolynomial};
use silverline_core::{AlgebraicReal, Error, NumberField, RootContext};
use std::sync::Arc;

pub type PolyJson = Vec<String>;

pub fn poly_to_json(p: &IntPolynomial) -> PolyJson {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn poly_from_json(coeffs: &[String]) -> Result<IntPolynomial, Error> {
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        let v: BigInt = c
            .parse()
            .map_err(|_| Error::Precondition(format!("bad integer coefficient: {c}")))?;
        out.push(v);
    }
    Ok(IntPolynomial::new(out))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraicRealJson {
    pub defining: PolyJson,
    pub lo: String,
    pub hi: String,
}

pub fn algebraic_to_json(x: &AlgebraicReal) -> AlgebraicRealJson {
    AlgebraicRealJson {
        defining: poly_to_json(x.defining()),
        lo: rational_to_string(x.lo()),
        hi: rational_to_string(x.hi()),
    }
}

pub fn algebraic_from_json(j: &AlgebraicRealJson) -> Result<AlgebraicReal, Error> {
    let defining = poly_from_json(&j.defining)?;
    let lo = parse_rational(&j.lo)
        .ok_or_else(|| Error::Precondition(format!("bad rational: {}", j.lo)))?;
    let hi = parse_rational(&j.hi)
        .ok_or_else(|| Error::Precondition(format!("bad rational: {}", j.hi)))?;
    AlgebraicReal::new(defining, lo, hi)
}

/// Row-major flat array of decimal strings; the matrix is square.
pub fn matrix_to_json(m: &IntMatrix) -> Vec<String> {
    m.entries().iter().map(|e| e.to_string()).collect()
}

pub fn matrix_from_json(entries: &[String]) -> Result<IntMatrix, Error> {
    let len = entries.len();
    let n = (1..=len).find(|k| k * k == len).ok_or_else(|| {
        Error::Precondition(format!("matrix entry count {len} is not a perfect square"))
    })?;
    let mut out = Vec::with_capacity(len);
    for e in entries {
        let v: BigInt =
            e.parse().map_err(|_| Error::Precondition(format!("bad integer entry: {e}")))?;
        out.push(v);
    }
    Ok(IntMatrix::new(n, out))
}

pub fn coords_to_json(e: &FieldElement) -> Vec<String> {
    e.coords().iter().map(rational_to_string).collect()
}

pub fn coords_from_json(field: &Arc<NumberField>, coords: &[String]) -> Result<FieldElement, Error> {
    let mut out = Vec::with_capacity(coords.len());
    for c in coords {
        out.push(
            parse_rational(c).ok_or_else(|| Error::Precondition(format!("bad rational: {c}")))?,
        );
    }
    FieldElement::from_coords(field, out)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrototileJson {
    pub index: usize,
    pub length_coords: Vec<String>,
    pub length_decimal: String,
}

/// Schema of `tile --emit json`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TileJson {
    pub prototiles: Vec<PrototileJson>,
    pub prefix: Vec<u8>,
    pub endpoints: Vec<String>,
}

/// Schema of `dichotomy --emit json`. `l_coords` carries the exact basic
/// length as field coordinates (L is irrational in general, so a single
/// "p/q" cannot represent it); `l_decimal` is its truncated decimal.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub poly: PolyJson,
    pub v0: Vec<String>,
    pub l_coords: Vec<String>,
    pub l_decimal: String,
    pub delta: String,
    pub gamma: String,
    pub contraction_steps: usize,
    pub omega: String,
    pub mu_lower: String,
    pub verified_degree: usize,
}

/// Machine-readable error object printed to stderr on computation failures.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorJson {
    pub error: String,
    pub kind: String,
}

pub fn error_to_json(e: &Error) -> ErrorJson {
    let kind = match e {
        Error::InvalidDegree(_) => "invalid-degree",
        Error::UnsupportedDegree { .. } => "unsupported-degree",
        Error::IncompatibleField => "incompatible-field",
        Error::InvalidModulus(_) => "invalid-modulus",
        Error::Precondition(_) => "precondition",
        Error::NoDecomposition => "no-decomposition",
        Error::BudgetExhausted { .. } => "budget-exhausted",
        Error::SingularT => "singular-t",
        Error::CannotCertify(_) => "cannot-certify",
    };
    ErrorJson { error: e.to_string(), kind: kind.to_string() }
}

/// Truncated decimal of a field element at the root; flags exactness with a
/// trailing marker column in CSV exports.
pub fn decimal_of(e: &FieldElement, ctx: &mut RootContext, digits: u32) -> Result<String, Error> {
    Ok(ctx.decimal(e, digits)?.0)
}

/// One CSV line; fields joined by commas, no quoting (fields never contain
/// commas by construction: coordinate vectors use ';').
pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

pub fn coords_csv(e: &FieldElement) -> String {
    e.coords().iter().map(rational_to_string).collect::<Vec<_>>().join(";")
}

/// Parses "p/q" or decimal-free rational strings for CLI flags.
pub fn rational_flag(s: &str) -> Result<BigRational, Error> {
    parse_rational(s).ok_or_else(|| Error::Precondition(format!("bad rational flag: {s}")))
}
