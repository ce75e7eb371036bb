//! Real algebraic numbers as (defining polynomial, isolating rational interval).
//!
//! Refinement is exact rational bisection; no floating point enters the
//! certified path. Printed decimals truncate toward zero so they never
//! overstate precision.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A real algebraic number, isolated by a rational interval with a strict
/// sign change of the defining polynomial at the endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicReal {
    defining: IntPolynomial,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicReal {
    /// Certifies the sign change `P(lo)·P(hi) < 0` and builds the number.
    pub fn new(defining: IntPolynomial, lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Precondition(String::from("interval endpoints must satisfy lo < hi")));
        }
        let slo = defining.eval_rational(&lo);
        let shi = defining.eval_rational(&hi);
        if slo.is_zero() || shi.is_zero() || (slo.is_positive() == shi.is_positive()) {
            return Err(Error::Precondition(String::from(
                "defining polynomial must change sign strictly over [lo, hi]",
            )));
        }
        Ok(Self { defining, lo, hi })
    }

    pub fn defining(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    /// Returns a copy refined until the interval width is `<= width`.
    pub fn refined(&self, width: &BigRational) -> Self {
        let mut lo = self.lo.clone();
        let mut hi = self.hi.clone();
        let sign_lo = self.defining.eval_rational(&lo).is_positive();
        let two = BigRational::from_integer(BigInt::from(2));
        let three = BigRational::from_integer(BigInt::from(3));
        while &hi - &lo > *width {
            let mut mid = (&lo + &hi) / &two;
            let mut val = self.defining.eval_rational(&mid);
            if val.is_zero() {
                // Rational midpoint hit the root exactly; an off-center split
                // point cannot coincide with the same root again.
                mid = (&lo + &hi + &hi) / &three;
                val = self.defining.eval_rational(&mid);
            }
            if val.is_positive() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Self { defining: self.defining.clone(), lo, hi }
    }

    /// Truncated decimal expansion with `digits` digits after the point.
    ///
    /// Returns the refined number, the decimal string, and whether the
    /// printed value is exact (`true`) or truncated toward zero (`false`).
    pub fn decimal(&self, digits: u32) -> (Self, String, bool) {
        let mut cur = self.clone();
        let pow = BigInt::from(10u32).pow(digits);
        let scale = BigRational::from_integer(pow.clone());
        loop {
            let a = trunc_toward_zero(&(&cur.lo * &scale));
            let b = trunc_toward_zero(&(&cur.hi * &scale));
            if a == b {
                let exact = cur.lo == cur.hi;
                return (cur.clone(), render_scaled(&a, digits), exact);
            }
            let w = cur.width() / BigRational::from_integer(BigInt::from(4));
            cur = cur.refined(&w);
        }
    }
}

fn trunc_toward_zero(x: &BigRational) -> BigInt {
    x.trunc().to_integer()
}

fn render_scaled(scaled: &BigInt, digits: u32) -> String {
    if digits == 0 {
        return format!("{scaled}");
    }
    let neg = scaled.is_negative();
    let mag = scaled.abs();
    let pow = BigInt::from(10u32).pow(digits);
    let int_part = &mag / &pow;
    let frac_part = &mag % &pow;
    let frac_str = format!("{frac_part}");
    let pad = digits as usize - frac_str.len();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(&format!("{int_part}."));
    for _ in 0..pad {
        out.push('0');
    }
    out.push_str(&frac_str);
    out
}

/// Evaluates a polynomial (rational coefficients, lowest degree first) over
/// an interval `[lo, hi]` by interval Horner; returns enclosing bounds.
pub fn interval_eval(coeffs: &[BigRational], lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut acc_lo = BigRational::zero();
    let mut acc_hi = BigRational::zero();
    for c in coeffs.iter().rev() {
        let candidates = [&acc_lo * lo, &acc_lo * hi, &acc_hi * lo, &acc_hi * hi];
        let mut new_lo = candidates[0].clone();
        let mut new_hi = candidates[0].clone();
        for cand in &candidates[1..] {
            if *cand < new_lo {
                new_lo = cand.clone();
            }
            if *cand > new_hi {
                new_hi = cand.clone();
            }
        }
        acc_lo = new_lo + c;
        acc_hi = new_hi + c;
    }
    (acc_lo, acc_hi)
}

/// Convenience: builds the rational `p / 10^k`.
pub fn decimal_rational(p: i64, k: u32) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(10u32).pow(k))
}

/// Convenience: builds the rational `1 / 10^k`.
pub fn width_10_pow_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

/// Parses "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Enumerates the bits of a vector as a compact string, for diagnostics.
pub fn bits_string(bits: &[u8]) -> String {
    let mut s = String::with_capacity(bits.len());
    for b in bits {
        s.push(if *b == 0 { '0' } else { '1' });
    }
    s
}

/// All signed divisors of a nonzero integer, ascending by absolute value.
pub fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let mag = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= mag {
        if (&mag % &d).is_zero() {
            out.push(d.clone());
            let q = &mag / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    let mut signed = Vec::with_capacity(out.len() * 2);
    for d in out {
        signed.push(d.clone());
        signed.push(-d);
    }
    signed
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn golden_root_bisection_matches_closed_form() {
        // Oracle: (1+sqrt 5)/2 = 1.6180339887498949...
        let p = IntPolynomial::from_i64(&[-1, -1, 1]);
        let root = AlgebraicReal::new(
            p,
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::from(2)),
        )
        .unwrap();
        let fine = root.refined(&width_10_pow_neg(12));
        let target = decimal_rational(1_618033988749, 12); // truncation of phi
        assert!(fine.lo() <= &(&target + width_10_pow_neg(12)));
        assert!(fine.hi() >= &target);
        let (_, dec, exact) = root.decimal(12);
        assert_eq!(dec, "1.618033988749");
        assert!(!exact);
    }

    #[test]
    fn plastic_root_decimal() {
        let p = IntPolynomial::from_i64(&[-1, -1, 0, 1]);
        let root = AlgebraicReal::new(
            p,
            BigRational::from_integer(BigInt::one()),
            BigRational::from_integer(BigInt::from(2)),
        )
        .unwrap();
        let (_, dec, _) = root.decimal(4);
        assert_eq!(dec, "1.3247");
    }

    #[test]
    fn interval_eval_encloses() {
        let coeffs = vec![
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::from_integer(BigInt::one()),
        ];
        let lo = decimal_rational(16, 1);
        let hi = decimal_rational(17, 1);
        let (a, b) = interval_eval(&coeffs, &lo, &hi);
        let mid_val = {
            let x = decimal_rational(165, 2);
            &x * &x - &x - BigRational::one()
        };
        assert!(a <= mid_val && mid_val <= b);
    }

    #[test]
    fn signed_divisor_enumeration() {
        let ds = signed_divisors(&BigInt::from(6));
        assert_eq!(ds.len(), 8);
        assert!(ds.contains(&BigInt::from(-3)));
    }

    #[test]
    fn rejects_intervals_without_sign_change() {
        let p = IntPolynomial::from_i64(&[-1, -1, 1]);
        assert!(AlgebraicReal::new(
            p,
            BigRational::from_integer(BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
        )
        .is_err());
    }
}
