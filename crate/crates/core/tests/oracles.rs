//! Independent oracles cross-checking the closed-form implementations:
//! a numeric subset-of-roots factorizer (verified by exact division) against
//! the bounded factor search, Perron intervals against root bisection, the
//! variations identity, and the power-minimal-polynomial by substitution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use silverline_core::algebraic::{interval_eval, width_10_pow_neg};
use silverline_core::factor;
use silverline_core::field::{
    field_sign, minimal_polynomial_of_power, FieldElement, NumberField, RootContext,
};
use silverline_core::matrix::{perron, silver_companion, CompanionForm};
use silverline_core::pisot::root_disks;
use silverline_core::poly::{IntPolynomial, QPoly};
use silverline_core::silver::{enumerate_silver_polynomials, SilverPolynomial};

/// Test-only factorization oracle: combine subsets of numerically located
/// roots into candidate monic integer factors and confirm by exact division.
/// Only the "reducible" verdict is certified (by the division); the
/// "irreducible" verdict relies on the coefficient tolerance, which is ample
/// for the well-separated silver roots exercised here.
fn reducible_by_root_subsets(p: &IntPolynomial) -> bool {
    // Repeated factors are already reducible.
    let g = QPoly::from(p.clone()).gcd(&QPoly::from(p.derivative()));
    if g.degree() >= 1 {
        return true;
    }
    let disks = root_disks(p).expect("desk-scale polynomial");
    let n = disks.len();
    for mask in 1u32..(1 << n) - 1 {
        if (mask.count_ones() as usize) > n / 2 {
            continue;
        }
        // Product of (x - z_i) over the subset.
        let mut coeffs = vec![num_complex::Complex64::new(1.0, 0.0)];
        for (i, (z, _)) in disks.iter().enumerate() {
            if mask & (1 << i) != 0 {
                let mut next = vec![num_complex::Complex64::new(0.0, 0.0); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * z;
                }
                coeffs = next;
            }
        }
        let mut ints = Vec::with_capacity(coeffs.len());
        let mut plausible = true;
        for c in &coeffs {
            let rounded = c.re.round();
            if (c.re - rounded).abs() > 1e-6 || c.im.abs() > 1e-6 {
                plausible = false;
                break;
            }
            ints.push(BigInt::from(rounded as i64));
        }
        if !plausible {
            continue;
        }
        let candidate = IntPolynomial::new(ints);
        if candidate.degree() == 0 {
            continue;
        }
        if p.div_exact(&candidate).is_some() {
            return true;
        }
    }
    false
}

#[test]
fn irreducibility_agrees_with_root_subset_oracle_to_degree_8() {
    for n in 2..=8 {
        for sp in enumerate_silver_polynomials(n).unwrap() {
            let p = sp.to_polynomial();
            let by_search = factor::is_irreducible(&p).unwrap();
            let by_roots = !reducible_by_root_subsets(&p);
            assert_eq!(by_search, by_roots, "disagreement on {sp}");
        }
    }
}

#[test]
fn known_reducible_quartic() {
    let p = SilverPolynomial::new(vec![0, 1, 1, 1]).unwrap().to_polynomial();
    assert!(!factor::is_irreducible(&p).unwrap());
    assert!(reducible_by_root_subsets(&p));
}

#[test]
fn variations_identity_exact() {
    // rho^m - rho^(m-1) - ... - 1 = sum_(i=1..N-m) rho^(-i), compared after
    // multiplying both sides by rho^(N-m).
    for n in 2..=8usize {
        let sp = SilverPolynomial::distinguished(n).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let rho = FieldElement::generator(&field);
        for m in 1..n {
            let mut lhs = rho.pow(m as u64);
            for k in 0..m {
                lhs = &lhs - &rho.pow(k as u64);
            }
            // lhs * rho^(N-m) must equal sum_(i=1..N-m) rho^(N-m-i).
            let lhs_scaled = &lhs * &rho.pow((n - m) as u64);
            let mut rhs = FieldElement::zero(&field);
            for i in 1..=n - m {
                rhs = &rhs + &rho.pow((n - m - i) as u64);
            }
            assert_eq!(lhs_scaled, rhs, "N={n} m={m}");
        }
    }
}

#[test]
fn perron_interval_meets_bisection_interval_at_1e20() {
    for n in 2..=6 {
        for sp in enumerate_silver_polynomials(n).unwrap() {
            let width = width_10_pow_neg(20);
            let bisected = sp.silver_number(&width);
            let m = silver_companion(&sp, CompanionForm::Dw);
            let data = perron(&m, &width).unwrap();
            let lo = bisected.lo().max(&data.rho_bounds.0);
            let hi = bisected.hi().min(&data.rho_bounds.1);
            assert!(lo <= hi, "intervals must intersect for {sp}");
        }
    }
}

#[test]
fn field_sign_consistent_with_interval_evaluation() {
    // Deterministic pseudo-random field elements; sign oracle vs direct
    // interval evaluation at width 1e-30.
    let sp = SilverPolynomial::distinguished(3).unwrap();
    let field = NumberField::new(sp.to_polynomial()).unwrap();
    let root = sp.silver_number(&width_10_pow_neg(30));
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % 41) as i64 - 20
    };
    for _ in 0..200 {
        let coords: Vec<BigRational> = (0..3)
            .map(|_| BigRational::new(BigInt::from(next()), BigInt::from(next().unsigned_abs().max(1))))
            .collect();
        let elem = FieldElement::from_coords(&field, coords.clone()).unwrap();
        let s = field_sign(&elem, &root).unwrap();
        let (lo, hi) = interval_eval(&coords, root.lo(), root.hi());
        if lo.is_positive() {
            assert_eq!(s, 1);
        } else if hi.is_negative() {
            assert_eq!(s, -1);
        } else {
            // Interval straddles zero at 1e-30: only exact zero is allowed
            // to report 0, and zero coords evaluate to the zero interval.
            assert_eq!(s == 0, elem.is_zero());
        }
    }
}

#[test]
fn power_minimal_polynomials_verified_by_substitution() {
    // For each silver polynomial of degree 3 and d in 2..=4, the minimal
    // polynomial of rho^d annihilates rho^d exactly and is irreducible.
    for sp in enumerate_silver_polynomials(3).unwrap() {
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        for d in 2..=4u64 {
            let m = minimal_polynomial_of_power(&field, d).unwrap();
            assert!(factor::is_irreducible(&m).unwrap(), "{sp} d={d}");
            let beta = FieldElement::generator(&field).pow(d);
            let mut acc = FieldElement::zero(&field);
            for (k, c) in m.coeffs().iter().enumerate() {
                acc = &acc + &beta.pow(k as u64).scale(&BigRational::from_integer(c.clone()));
            }
            assert!(acc.is_zero(), "{sp} d={d}");
        }
    }
}

#[test]
fn distinguished_roots_increase_and_respect_dyadic_bounds() {
    let width = width_10_pow_neg(20);
    let mut previous_hi: Option<BigRational> = None;
    for n in 2..=10usize {
        let sp = SilverPolynomial::distinguished(n).unwrap();
        let root = sp.silver_number(&width);
        let (lo_bound, hi_bound) = silverline_core::silver::distinguished_bounds(n);
        assert!(root.lo() > &lo_bound, "N={n}");
        assert!(root.hi() < &hi_bound, "N={n}");
        if let Some(prev) = previous_hi {
            assert!(root.lo() > &prev, "rho_{n} > rho_{}", n - 1);
        }
        previous_hi = Some(root.hi().clone());
    }
}

#[test]
fn golden_min_scan_witness_attains_minimum() {
    // The scan's witness must reproduce the reported minimum exactly.
    let sp = SilverPolynomial::distinguished(2).unwrap();
    let field = NumberField::new(sp.to_polynomial()).unwrap();
    let root = sp.silver_number(&width_10_pow_neg(30));
    let scan = silverline_core::sigma::min_difference_scan(&field, &root, 4).unwrap();
    let val = FieldElement::from_int_poly(&field, &scan.witness);
    let mut ctx = RootContext::new(root);
    let s = ctx.sign(&val).unwrap();
    let abs = if s < 0 { val.scale(&BigRational::from_integer(BigInt::from(-1))) } else { val };
    assert_eq!(abs, scan.min_abs);
    assert!(scan.scanned == 3usize.pow(5) - 1);
}

#[test]
fn scan_zero_detection_is_exact() {
    // q = X^2 - X - 1 evaluates to zero at the golden ratio and is skipped.
    let sp = SilverPolynomial::distinguished(2).unwrap();
    let field = NumberField::new(sp.to_polynomial()).unwrap();
    let q = IntPolynomial::from_i64(&[-1, -1, 1]);
    assert!(FieldElement::from_int_poly(&field, &q).is_zero());
}

#[test]
fn tribonacci_scan_bound_6_strictly_positive() {
    let sp = SilverPolynomial::distinguished(3).unwrap();
    let field = NumberField::new(sp.to_polynomial()).unwrap();
    let root = sp.silver_number(&width_10_pow_neg(30));
    let scan = silverline_core::sigma::min_difference_scan(&field, &root, 6).unwrap();
    assert_eq!(field_sign(&scan.min_abs, &root).unwrap(), 1);
    // Consistency with the no-cluster-point corollary: the minimum is at
    // least the smallest prototile 1/rho is not required, but it must not
    // exceed it (1/rho is attained by q = X^2 - X - 1).
    let one_over_rho = FieldElement::generator(&field).inverse().unwrap();
    let diff = &scan.min_abs - &one_over_rho;
    assert!(field_sign(&diff, &root).unwrap() <= 0);
}
