//! Irreducibility over Q by bounded factor enumeration.
//!
//! For monic integer polynomials up to a configurable degree cap, candidate
//! monic factors of degree k are enumerated from divisor tuples of the values
//! at k+1 integer points and recovered by interpolation (Kronecker's method),
//! with congruence pruning `d_i - d_j == 0 (mod t_i - t_j)`. A candidate only
//! counts once exact division confirms it, so the search never accepts a
//! spurious factor.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::signed_divisors;
use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, QPoly};

/// Default degree cap for the factor search.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// Hard budget on pruned candidate tuples per factor degree.
const CANDIDATE_BUDGET: usize = 20_000_000;

/// True iff the monic integer polynomial has no nontrivial factorization
/// over Q. Degrees above [`DEFAULT_DEGREE_CAP`] are rejected.
pub fn is_irreducible(p: &IntPolynomial) -> Result<bool> {
    is_irreducible_with_cap(p, DEFAULT_DEGREE_CAP)
}

pub fn is_irreducible_with_cap(p: &IntPolynomial, cap: usize) -> Result<bool> {
    Ok(find_monic_factor(p, cap)?.is_none())
}

/// Returns a proper monic integer factor when one exists, `None` when the
/// polynomial is irreducible over Q.
pub fn find_monic_factor(p: &IntPolynomial, cap: usize) -> Result<Option<IntPolynomial>> {
    if !p.is_monic() {
        return Err(Error::Precondition(String::from("factor search requires a monic polynomial")));
    }
    let n = p.degree();
    if n > cap {
        return Err(Error::UnsupportedDegree { degree: n, cap });
    }
    if n <= 1 {
        return Ok(None);
    }
    if p.coeff(0).is_zero() {
        return Ok(Some(IntPolynomial::from_i64(&[0, 1])));
    }
    // Repeated factors: gcd(P, P') is a monic divisor; Gauss makes it integral.
    let g = QPoly::from(p.clone()).gcd(&QPoly::from(p.derivative()));
    if g.degree() >= 1 {
        return Ok(Some(g.primitive_part()));
    }
    // Linear factors: integer roots divide the constant coefficient.
    for r in signed_divisors(&p.coeff(0)) {
        if p.eval_int(&r).is_zero() {
            return Ok(Some(IntPolynomial::new(vec![-r, BigInt::one()])));
        }
    }
    for k in 2..=n / 2 {
        if let Some(f) = kronecker_search(p, k)? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// Searches for a monic integer factor of degree exactly `k`.
fn kronecker_search(p: &IntPolynomial, k: usize) -> Result<Option<IntPolynomial>> {
    // Points 0, 1, -1, 2, -2, ... (k+1 of them); every value is nonzero
    // because integer roots were already stripped.
    let points: Vec<BigInt> = sample_points(k + 1);
    let values: Vec<BigInt> = points.iter().map(|t| p.eval_int(t)).collect();
    let divisor_lists: Vec<Vec<BigInt>> = values.iter().map(signed_divisors).collect();

    // Visit points with the fewest divisor choices first.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| divisor_lists[i].len());
    let points: Vec<BigInt> = order.iter().map(|&i| points[i].clone()).collect();
    let divisor_lists: Vec<Vec<BigInt>> = order.iter().map(|&i| divisor_lists[i].clone()).collect();

    let mut chosen: Vec<BigInt> = Vec::with_capacity(points.len());
    let mut budget = CANDIDATE_BUDGET;
    let found = dfs(p, k, &points, &divisor_lists, &mut chosen, &mut budget)?;
    Ok(found)
}

fn sample_points(count: usize) -> Vec<BigInt> {
    let mut pts = Vec::with_capacity(count);
    pts.push(BigInt::zero());
    let mut m = 1i64;
    while pts.len() < count {
        pts.push(BigInt::from(m));
        if pts.len() < count {
            pts.push(BigInt::from(-m));
        }
        m += 1;
    }
    pts
}

fn dfs(
    p: &IntPolynomial,
    k: usize,
    points: &[BigInt],
    divisor_lists: &[Vec<BigInt>],
    chosen: &mut Vec<BigInt>,
    budget: &mut usize,
) -> Result<Option<IntPolynomial>> {
    let depth = chosen.len();
    if depth == points.len() {
        if let Some(g) = interpolate_monic(points, chosen, k) {
            if p.div_exact(&g).is_some() {
                return Ok(Some(g));
            }
        }
        return Ok(None);
    }
    'candidates: for d in &divisor_lists[depth] {
        if *budget == 0 {
            return Err(Error::BudgetExhausted { budget: CANDIDATE_BUDGET, what: "factor candidates" });
        }
        *budget -= 1;
        // Integer polynomials satisfy g(a) == g(b) (mod a - b).
        for (i, prev) in chosen.iter().enumerate() {
            let step = &points[depth] - &points[i];
            if !((d - prev) % step).is_zero() {
                continue 'candidates;
            }
        }
        chosen.push(d.clone());
        let hit = dfs(p, k, points, divisor_lists, chosen, budget)?;
        chosen.pop();
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Lagrange interpolation through `(points[i], values[i])`; keeps only monic
/// integer polynomials of degree exactly `k`.
fn interpolate_monic(points: &[BigInt], values: &[BigInt], k: usize) -> Option<IntPolynomial> {
    let m = points.len();
    let mut acc = QPoly::zero();
    for i in 0..m {
        let mut num = QPoly::new(vec![BigRational::one()]);
        let mut den = BigRational::one();
        for j in 0..m {
            if i == j {
                continue;
            }
            num = num.mul(&QPoly::new(vec![
                BigRational::from_integer(-points[j].clone()),
                BigRational::one(),
            ]));
            den *= BigRational::from_integer(&points[i] - &points[j]);
        }
        let w = BigRational::from_integer(values[i].clone()) / den;
        acc = acc.add(&num.scale(&w));
    }
    if acc.degree() != k {
        return None;
    }
    let g = acc.to_int()?;
    if !g.is_monic() {
        return None;
    }
    Some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn degree_three_silver_polynomials_irreducible() {
        for c in [&[-1, -1, -1, 1][..], &[-1, 0, -1, 1], &[-1, -1, 0, 1]] {
            assert!(is_irreducible(&p(c)).unwrap());
        }
    }

    #[test]
    fn reducible_quartic_with_its_factor() {
        // x^4 - x^2 - x - 1 = (x+1)(x^3 - x^2 - 1)
        let quartic = p(&[-1, -1, -1, 0, 1]);
        assert!(!is_irreducible(&quartic).unwrap());
        let f = find_monic_factor(&quartic, DEFAULT_DEGREE_CAP).unwrap().unwrap();
        let cof = quartic.div_exact(&f).unwrap();
        assert_eq!(f.mul(&cof), quartic);
        let pair = [f, cof];
        assert!(pair.contains(&p(&[1, 1])));
        assert!(pair.contains(&p(&[-1, 0, -1, 1])));
    }

    #[test]
    fn degree_one_is_irreducible() {
        assert!(is_irreducible(&p(&[-1, 1])).unwrap());
    }

    #[test]
    fn quadratic_factor_found() {
        // (x^2 - x - 1)(x^2 + x + 1) has no rational roots.
        let a = p(&[-1, -1, 1]);
        let b = p(&[1, 1, 1]);
        let prod = a.mul(&b);
        let f = find_monic_factor(&prod, DEFAULT_DEGREE_CAP).unwrap().unwrap();
        assert!(f == a || f == b);
    }

    #[test]
    fn x4_x2_1_is_irreducible() {
        // Minimal polynomial of sqrt(phi).
        assert!(is_irreducible(&p(&[-1, 0, -1, 0, 1])).unwrap());
    }

    #[test]
    fn square_factor_detected() {
        let sq = p(&[1, 1]).mul(&p(&[1, 1])).mul(&p(&[-1, -1, 1]));
        assert!(!is_irreducible(&sq).unwrap());
    }

    #[test]
    fn degree_cap_enforced() {
        let big = IntPolynomial::monomial(13).add(&p(&[1]));
        assert!(matches!(is_irreducible(&big), Err(Error::UnsupportedDegree { .. })));
    }

    #[test]
    fn distinguished_degree_twelve_runs() {
        let mut coeffs = vec![-1i64; 12];
        coeffs.push(1);
        assert!(is_irreducible(&p(&coeffs)).unwrap());
    }
}
