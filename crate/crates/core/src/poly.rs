//! Integer and rational polynomials, lowest degree first.
//!
//! The canonical coefficient order everywhere in this crate is lowest degree
//! first: `coeffs[k]` multiplies `x^k`. The zero polynomial is the empty
//! coefficient vector.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial with arbitrary-precision integer coefficients.
///
/// Invariant: the coefficient vector carries no trailing zeros, so the
/// leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 like the constant ones.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Substitutes `x^d` for `x`.
    pub fn compose_power(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.degree() * d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k * d] = c.clone();
        }
        Self::new(out)
    }

    /// Exact division; returns `None` when `other` does not divide `self`
    /// over the rationals or the quotient is not an integer polynomial.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (q, r) = QPoly::from(self.clone()).div_rem(&QPoly::from(other.clone()));
        if !r.is_zero() {
            return None;
        }
        q.to_int()
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::from(self.clone())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_mag { "*" } else { "" }, k)?,
            }
        }
        Ok(())
    }
}

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl From<IntPolynomial> for QPoly {
    fn from(p: IntPolynomial) -> Self {
        QPoly::new(p.coeffs.into_iter().map(BigRational::from_integer).collect())
    }
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division: returns `(q, r)` with `self = q*other + r` and
    /// `deg r < deg other`. Panics on division by the zero polynomial.
    pub fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero polynomial");
        let d = other.degree();
        let lead_inv = other.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1;
            let factor = rem[k].clone() * &lead_inv;
            if !factor.is_zero() {
                quot[k - d] = factor.clone();
                for (j, b) in other.coeffs.iter().enumerate() {
                    let idx = k - d + j;
                    let delta = &factor * b;
                    rem[idx] -= delta;
                }
            }
            rem.pop();
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let inv = a.leading().recip();
            a.scale(&inv)
        }
    }

    /// Converts back to an integer polynomial when all coefficients are integers.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            out.push(c.to_integer());
        }
        Some(IntPolynomial::new(out))
    }

    /// Clears denominators and divides by the content, preserving the sign
    /// of the leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        use num_integer::Integer as _;
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial::new(ints.into_iter().map(|c| c / &content).collect())
    }
}

/// Formats a rational as "p/q" (or "p" when integral).
pub fn rational_to_string(x: &BigRational) -> String {
    use alloc::format;
    if x.is_integer() {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(coeffs)
    }

    #[test]
    fn display_matches_paper_style() {
        use alloc::string::ToString;
        // x^3 - x^2 - 1
        let sp = p(&[-1, 0, -1, 1]);
        assert_eq!(sp.to_string(), "x^3 - x^2 - 1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[2, -3, 1]).to_string(), "x^2 - 3*x + 2");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = QPoly::from(p(&[-1, -1, -1, 1])); // x^3-x^2-x-1
        let b = QPoly::from(p(&[1, 1])); // x+1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
    }

    #[test]
    fn exact_division_detects_factor() {
        // x^4 - x^2 - x - 1 = (x+1)(x^3 - x^2 - 1)
        let prod = p(&[-1, -1, -1, 0, 1]);
        let factor = p(&[1, 1]);
        let q = prod.div_exact(&factor).expect("divides");
        assert_eq!(q, p(&[-1, 0, -1, 1]));
        assert!(prod.div_exact(&p(&[1, -1, 1])).is_none());
    }

    #[test]
    fn gcd_of_poly_and_derivative_flags_square_factor() {
        let sq = p(&[1, 2, 1]); // (x+1)^2
        let g = QPoly::from(sq.clone()).gcd(&QPoly::from(sq.derivative()));
        assert_eq!(g.degree(), 1);
        let sf = p(&[-1, 0, -1, 1]);
        let g2 = QPoly::from(sf.clone()).gcd(&QPoly::from(sf.derivative()));
        assert_eq!(g2.degree(), 0);
    }
}
