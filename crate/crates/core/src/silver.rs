//! Silver polynomials and silver numbers.
//!
//! A silver polynomial of degree N is `x^N - sum_j b_j x^(N-j)` with
//! `b_j in {0,1}`, `b_N = 1`, and at least two nonzero `b_j`. Its unique
//! positive root, the silver number, lies in (1,2): dividing by `x^N` shows
//! `1 - sum b_j x^(-j)` is strictly increasing on (0,inf), so bisection on
//! [1,2] isolates the largest positive root.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A Resnikoff silver polynomial, stored as its coefficient bits
/// `b_1..b_N` (so `bits[j-1]` is the coefficient subtracted at `x^(N-j)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SilverPolynomial {
    bits: Vec<u8>,
}

impl SilverPolynomial {
    /// Validates `b_N = 1`, all bits in {0,1}, and at least two ones.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        let n = bits.len();
        if n < 2 {
            return Err(Error::InvalidDegree(n));
        }
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Precondition(String::from("silver coefficients must be 0 or 1")));
        }
        if bits[n - 1] != 1 {
            return Err(Error::Precondition(String::from("silver polynomials require b_N = 1")));
        }
        if bits.iter().map(|&b| b as usize).sum::<usize>() < 2 {
            return Err(Error::Precondition(String::from("silver polynomials need a second nonzero b_j")));
        }
        Ok(Self { bits })
    }

    /// The distinguished polynomial `x^N - x^(N-1) - ... - 1`.
    pub fn distinguished(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDegree(n));
        }
        Ok(Self { bits: alloc::vec![1u8; n] })
    }

    pub fn degree(&self) -> usize {
        self.bits.len()
    }

    /// Coefficient bits `b_1..b_N`.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn is_distinguished(&self) -> bool {
        self.bits.iter().all(|&b| b == 1)
    }

    /// Indices `j` (1-based) with `b_j = 1`.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| (b == 1).then_some(i + 1))
            .collect()
    }

    /// `x^N - sum b_j x^(N-j)`, lowest degree first.
    pub fn to_polynomial(&self) -> IntPolynomial {
        let n = self.degree();
        let mut coeffs = alloc::vec![BigInt::ZERO; n + 1];
        coeffs[n] = BigInt::one();
        for (j, &b) in self.bits.iter().enumerate() {
            if b == 1 {
                coeffs[n - (j + 1)] = BigInt::from(-1);
            }
        }
        IntPolynomial::new(coeffs)
    }

    /// The silver number: the largest positive root, isolated to `width`.
    ///
    /// Starts from the certified sign change on [1,2] (`P(1) < 0 < P(2)`)
    /// and bisects with exact rationals.
    pub fn silver_number(&self, width: &BigRational) -> AlgebraicReal {
        let root = AlgebraicReal::new(
            self.to_polynomial(),
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::from(2)),
        )
        .expect("silver polynomials change sign on [1,2]");
        root.refined(width)
    }
}

impl fmt::Display for SilverPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// All silver polynomials of degree N in lexicographic order of
/// `(b_1, ..., b_N)`; there are `2^(N-1) - 1` of them.
pub fn enumerate_silver_polynomials(n: usize) -> Result<Vec<SilverPolynomial>> {
    if n < 2 {
        return Err(Error::InvalidDegree(n));
    }
    assert!(n <= 32, "enumeration is desk-scale");
    let mut out = Vec::with_capacity((1usize << (n - 1)) - 1);
    for mask in 1u64..(1u64 << (n - 1)) {
        let mut bits = Vec::with_capacity(n);
        for j in 0..n - 1 {
            bits.push(((mask >> (n - 2 - j)) & 1) as u8);
        }
        bits.push(1);
        out.push(SilverPolynomial { bits });
    }
    Ok(out)
}

/// Exact endpoints of the bound `2 - 1/2^(N-1) < rho_N < 2 - 1/2^N` for the
/// distinguished silver number of degree N.
pub fn distinguished_bounds(n: usize) -> (BigRational, BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let lower = &two - BigRational::new(BigInt::one(), BigInt::one() << (n - 1));
    let upper = &two - BigRational::new(BigInt::one(), BigInt::one() << n);
    (lower, upper)
}

/// Which of the two printed Dresden-style inequalities hold for rho_N.
///
/// The source states `2 - 1/N <= rho_N` for N = 2,3 and `2 - 1/(3N) <= rho_N`
/// for "N <= 4"; the second condition is checked as printed and per N, so the
/// report shows where it actually holds (N >= 4) rather than guessing intent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DresdenReport {
    pub n: usize,
    /// `2 - 1/N <= rho_N`
    pub one_over_n_holds: bool,
    /// `2 - 1/(3N) <= rho_N`
    pub one_over_3n_holds: bool,
}

pub fn dresden_report(n: usize) -> Result<DresdenReport> {
    let poly = SilverPolynomial::distinguished(n)?;
    let two = BigRational::from_integer(BigInt::from(2));
    let b1 = &two - BigRational::new(BigInt::one(), BigInt::from(n));
    let b2 = &two - BigRational::new(BigInt::one(), BigInt::from(3 * n));
    let mut root = poly.silver_number(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 20)));
    // rho_N is irrational, so refinement separates it from any rational bound.
    let decided = |root: &AlgebraicReal, b: &BigRational| -> Option<bool> {
        if root.lo() >= b {
            Some(true)
        } else if root.hi() <= b {
            Some(false)
        } else {
            None
        }
    };
    loop {
        match (decided(&root, &b1), decided(&root, &b2)) {
            (Some(a), Some(b)) => {
                return Ok(DresdenReport { n, one_over_n_holds: a, one_over_3n_holds: b })
            }
            _ => {
                let w = root.width() / BigRational::from_integer(BigInt::from(16));
                root = root.refined(&w);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::width_10_pow_neg;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn degree_two_census() {
        let polys = enumerate_silver_polynomials(2).unwrap();
        assert_eq!(polys.len(), 1);
        assert_eq!(polys[0].to_polynomial(), IntPolynomial::from_i64(&[-1, -1, 1]));
    }

    #[test]
    fn degree_three_census_in_lex_order() {
        let polys = enumerate_silver_polynomials(3).unwrap();
        assert_eq!(polys.len(), 3);
        let shown: Vec<String> = polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["x^3 - x - 1", "x^3 - x^2 - 1", "x^3 - x^2 - x - 1"]);
    }

    #[test]
    fn census_counts() {
        for n in 2..=8 {
            assert_eq!(enumerate_silver_polynomials(n).unwrap().len(), (1 << (n - 1)) - 1);
        }
        assert_eq!(enumerate_silver_polynomials(5).unwrap().len(), 15);
        assert!(matches!(enumerate_silver_polynomials(1), Err(Error::InvalidDegree(1))));
    }

    #[test]
    fn every_silver_number_in_unit_band() {
        // Lemma-level check: roots lie in (1,2) with a strict sign change.
        for n in 2..=10 {
            for p in enumerate_silver_polynomials(n).unwrap() {
                let r = p.silver_number(&width_10_pow_neg(6));
                assert!(r.lo() > &BigRational::from_integer(BigInt::one()));
                assert!(r.hi() < &BigRational::from_integer(BigInt::from(2)));
            }
        }
    }

    #[test]
    fn tribonacci_between_dyadic_bounds() {
        let p = SilverPolynomial::distinguished(3).unwrap();
        let r = p.silver_number(&width_10_pow_neg(20));
        let (lo, hi) = distinguished_bounds(3);
        assert!(r.lo() > &lo && r.hi() < &hi);
    }

    #[test]
    fn dresden_second_inequality_fails_small_n() {
        let r2 = dresden_report(2).unwrap();
        assert!(r2.one_over_n_holds);
        assert!(!r2.one_over_3n_holds);
        let r4 = dresden_report(4).unwrap();
        assert!(r4.one_over_n_holds);
        assert!(r4.one_over_3n_holds);
    }

    #[test]
    fn rejects_malformed_bits() {
        assert!(SilverPolynomial::new(vec![1, 0]).is_err()); // b_N = 0
        assert!(SilverPolynomial::new(vec![0, 0, 1]).is_err()); // single one
        assert!(SilverPolynomial::new(vec![1]).is_err()); // degree 1
    }
}
