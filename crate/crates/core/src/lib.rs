//! Exact arithmetic for Resnikoff silver numbers and tilings of the half-line.
//!
//! The crate is organized around a handful of exact primitives:
//!
//! * [`poly::IntPolynomial`] — integer polynomials, lowest degree first;
//! * [`algebraic::AlgebraicReal`] — a real algebraic number as (defining
//!   polynomial, isolating rational interval), refinable to any width;
//! * [`field::NumberField`] / [`field::FieldElement`] — exact arithmetic in
//!   Q\[X\]/(P) for irreducible monic P, with exact zero tests and an exact
//!   sign oracle against an isolated real root;
//! * [`silver::SilverPolynomial`] — the degree-N monic polynomials with
//!   subtracted {0,1} coefficients whose largest positive roots are the
//!   silver numbers;
//! * [`sigma`] — bit representations of sigma-integers, the normal-form
//!   algorithm for distinguished bases, exact ordering and enumeration;
//! * [`matrix`] — non-negative integer matrices: irreducibility, primitivity,
//!   certified Perron data, companion forms and conjugations;
//! * [`tiling`] — substitution rules, the inflation-substitution iteration,
//!   convergence detection, endpoints, periodicity scans;
//! * [`dichotomy`] — the tiling certificate for Pisot silver numbers and the
//!   exact rational-L impossibility arguments.
//!
//! Everything on the certified paths is exact: root isolation is rational
//! bisection, orderings are decided in the number field, and enumeration
//! oracles never use floating point. The one numerically-certified operation
//! is the Pisot test, which locates complex conjugates with a posteriori
//! residual disks and reports `Indeterminate` when a modulus is too close
//! to 1 to classify.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebraic;
pub mod dichotomy;
pub mod error;
pub mod factor;
pub mod field;
pub mod matrix;
pub mod pisot;
pub mod poly;
pub mod sigma;
pub mod silver;
pub mod tiling;

pub use algebraic::AlgebraicReal;
pub use error::Error;
pub use field::{FieldElement, NumberField, RootContext};
pub use poly::IntPolynomial;
pub use silver::SilverPolynomial;

/// Convenience alias used throughout: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Convenience alias used throughout: arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
