//! The acceptance suite: every criterion runs at its stated tolerance and
//! reports one pass/fail line. Shared by `verify-all` and the `acceptance`
//! test target.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use silverline_core::algebraic::width_10_pow_neg;
use silverline_core::dichotomy::{self, ImpossibilityCase, WitnessKind};
use silverline_core::factor;
use silverline_core::field::{FieldElement, NumberField, RootContext};
use silverline_core::matrix::{
    companion, conjugation_t, decompose_nonprimitive, intertwiner, is_primitive, silver_companion,
    silver_primitivity_by_gcd, CompanionForm, IntMatrix, NonNegIntMatrix,
};
use silverline_core::poly::IntPolynomial;
use silverline_core::sigma::{
    self, compare, enumerate_integers, inverse_power_sum, is_normal_form, to_normal_form, NormalForm,
    SigmaIntRep,
};
use silverline_core::silver::{distinguished_bounds, enumerate_silver_polynomials, SilverPolynomial};
use silverline_core::tiling::{
    check_periodicity, count_evolution, count_matrix_power, detect_convergence, dw_rule,
    frequency_drift, integer_vs_substitution, limit_prefix, ConvergenceMode,
};
use silverline_core::AlgebraicReal;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    /// Stated runtime budget, if the criterion has one.
    pub budget_seconds: Option<f64>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        let budget = match self.budget_seconds {
            Some(b) => format!(", budget {b:.0}s"),
            None => String::new(),
        };
        format!(
            "{verdict} criterion {:2}: {} ({}) [{:.2}s{budget}]",
            self.id, self.name, self.detail, self.seconds
        )
    }
}

fn run(
    id: usize,
    name: &'static str,
    budget_seconds: Option<f64>,
    body: impl FnOnce() -> Result<String, String>,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let seconds = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            let passed = budget_seconds.is_none_or(|b| seconds <= b);
            let detail = if passed {
                detail
            } else {
                format!("{detail}; runtime {seconds:.2}s exceeded budget")
            };
            CriterionResult { id, name, passed, detail, seconds, budget_seconds }
        }
        Err(detail) => CriterionResult { id, name, passed: false, detail, seconds, budget_seconds },
    }
}

fn dist_setup(n: usize) -> (SilverPolynomial, Arc<NumberField>, AlgebraicReal) {
    let sp = SilverPolynomial::distinguished(n).expect("N >= 2");
    let field = NumberField::new(sp.to_polynomial()).expect("distinguished polynomials are irreducible");
    let root = sp.silver_number(&width_10_pow_neg(30));
    (sp, field, root)
}

/// 1. Silver-polynomial census.
pub fn criterion_1() -> CriterionResult {
    run(1, "silver-polynomial census", Some(1.0), || {
        for n in 2..=8usize {
            let polys = enumerate_silver_polynomials(n).map_err(|e| e.to_string())?;
            let expect = (1usize << (n - 1)) - 1;
            if polys.len() != expect {
                return Err(format!("N={n}: counted {} instead of {expect}", polys.len()));
            }
        }
        let threes = enumerate_silver_polynomials(3).unwrap();
        let shown: Vec<String> = threes.iter().map(|p| p.to_polynomial().to_string()).collect();
        let expect3 = ["x^3 - x - 1", "x^3 - x^2 - 1", "x^3 - x^2 - x - 1"];
        if shown != expect3 {
            return Err(format!("degree-3 census mismatch: {shown:?}"));
        }
        // x^4 - x^2 - x - 1 = (x+1)(x^3 - x^2 - 1)
        let quartic = SilverPolynomial::new(vec![0, 1, 1, 1]).unwrap().to_polynomial();
        if factor::is_irreducible(&quartic).map_err(|e| e.to_string())? {
            return Err("x^4 - x^2 - x - 1 not detected reducible".into());
        }
        let f = factor::find_monic_factor(&quartic, factor::DEFAULT_DEGREE_CAP)
            .map_err(|e| e.to_string())?
            .ok_or("no factor found")?;
        let cof = quartic.div_exact(&f).ok_or("factor does not divide")?;
        let pair = [f.to_string(), cof.to_string()];
        if !(pair.contains(&"x + 1".to_string()) && pair.contains(&"x^3 - x^2 - 1".to_string())) {
            return Err(format!("unexpected factorization: {pair:?}"));
        }
        Ok("counts 2^(N-1)-1 for N=2..8; degree-3 census exact; quartic factored".into())
    })
}

/// 2. Root bounds at width 1e-20.
pub fn criterion_2() -> CriterionResult {
    run(2, "distinguished root bounds", Some(5.0), || {
        let width = width_10_pow_neg(20);
        let mut prev_hi: Option<BigRational> = None;
        for n in 2..=10usize {
            let sp = SilverPolynomial::distinguished(n).unwrap();
            let root = sp.silver_number(&width);
            if root.width() > width {
                return Err(format!("N={n}: interval wider than 1e-20"));
            }
            let (lo_b, hi_b) = distinguished_bounds(n);
            if !(root.lo() > &lo_b && root.hi() < &hi_b) {
                return Err(format!("N={n}: interval escapes the dyadic bounds"));
            }
            if let Some(prev) = prev_hi {
                if root.lo() <= &prev {
                    return Err(format!("rho_{n} not certified above rho_{}", n - 1));
                }
            }
            prev_hi = Some(root.hi().clone());
        }
        Ok("intervals at 1e-20 sit strictly inside (2 - 2^(1-N), 2 - 2^-N), increasing in N".into())
    })
}

/// 3. Normal-form suite for N = 2..5.
pub fn criterion_3() -> CriterionResult {
    run(3, "normal-form suite", Some(120.0), || {
        let mut normal_forms_checked = 0usize;
        let mut pairs_checked = 0usize;
        for n in 2..=5usize {
            let (_, field, root) = dist_setup(n);
            let mut ctx = RootContext::new(root.clone());
            // Every representation of degree <= 12 normalizes value-exactly
            // with degree n or n+1.
            let mut seen_values: std::collections::BTreeMap<Vec<BigRational>, Vec<u8>> =
                std::collections::BTreeMap::new();
            for len in 1..=13usize {
                for mask in 0..(1u64 << (len - 1)) {
                    let mut bits = vec![1u8];
                    for j in 0..len - 1 {
                        bits.push(((mask >> j) & 1) as u8);
                    }
                    let rep = SigmaIntRep::new(bits.clone()).unwrap();
                    let nf = to_normal_form(&rep, n).map_err(|e| e.to_string())?;
                    let (v_rep, v_nf) = (rep.value(&field), nf.value(&field));
                    if v_rep != v_nf {
                        return Err(format!("N={n}: value changed for {bits:?}"));
                    }
                    let (d0, d1) = (rep.degree().unwrap(), nf.degree().unwrap());
                    if !(d1 == d0 || d1 == d0 + 1) {
                        return Err(format!("N={n}: degree jumped for {bits:?}"));
                    }
                    // Uniqueness over distinct normal forms of degree <= 12.
                    if is_normal_form(&rep, n) {
                        if let Some(prev) = seen_values.insert(v_rep.coords().to_vec(), bits.clone()) {
                            if prev != bits {
                                return Err(format!("N={n}: {prev:?} and {bits:?} share a value"));
                            }
                        }
                        normal_forms_checked += 1;
                    }
                }
            }
            // compare agrees with the sign oracle on all pairs of degree <= 10.
            let mut forms: Vec<(NormalForm, BigRational, BigRational)> = Vec::new();
            let narrow = width_10_pow_neg(25);
            for len in 1..=11usize {
                for mask in 0..(1u64 << (len - 1)) {
                    let mut bits = vec![1u8];
                    for j in 0..len - 1 {
                        bits.push(((mask >> j) & 1) as u8);
                    }
                    let rep = SigmaIntRep::new(bits).unwrap();
                    if !is_normal_form(&rep, n) {
                        continue;
                    }
                    let nf = NormalForm::new(rep, n).unwrap();
                    let value = nf.value(&field);
                    let (lo, hi) = ctx.bounds(&value, &narrow).map_err(|e| e.to_string())?;
                    forms.push((nf, lo, hi));
                }
            }
            for i in 0..forms.len() {
                for j in i + 1..forms.len() {
                    let by_bits = compare(&forms[i].0, &forms[j].0).map_err(|e| e.to_string())?;
                    // Sign of value difference from disjoint enclosures
                    // (distinct values are separated far beyond 1e-25).
                    let by_value = if forms[i].2 < forms[j].1 {
                        std::cmp::Ordering::Less
                    } else if forms[j].2 < forms[i].1 {
                        std::cmp::Ordering::Greater
                    } else {
                        let diff = &forms[i].0.value(&field) - &forms[j].0.value(&field);
                        ctx.sign(&diff).map_err(|e| e.to_string())?.cmp(&0)
                    };
                    if by_bits != by_value {
                        return Err(format!(
                            "N={n}: compare({}, {}) = {:?} disagrees with field_sign",
                            forms[i].0.rep().to_bit_string(),
                            forms[j].0.rep().to_bit_string(),
                            by_bits
                        ));
                    }
                    pairs_checked += 1;
                }
            }
            // Theorem-level cross-check: every normal form of degree m < n'
            // is below rho^n' -- spot-check against the largest of degree.
            for m in 0..=9usize {
                let largest = sigma::largest_of_degree(m, n).unwrap();
                let gen = FieldElement::generator(&field);
                let diff = &gen.pow(m as u64 + 1) - &largest.value(&field);
                if ctx.sign(&diff).map_err(|e| e.to_string())? <= 0 {
                    return Err(format!("N={n}: rho^{} not above largest of degree {m}", m + 1));
                }
            }
        }
        Ok(format!(
            "{normal_forms_checked} normal forms unique-valued; {pairs_checked} ordered pairs agree with the sign oracle"
        ))
    })
}

/// 4. Tiling equivalences for N = 2, 3, 4 over 200 tiles.
pub fn criterion_4() -> CriterionResult {
    run(4, "tiling equivalences", Some(60.0), || {
        for n in 2..=4usize {
            let (_, field, root) = dist_setup(n);
            let report = integer_vs_substitution(n, 200, &field, &root).map_err(|e| e.to_string())?;
            if !report.hat_equals_integers {
                return Err(format!(
                    "N={n}: hat endpoints differ from rho-integers at {:?}",
                    report.first_hat_mismatch
                ));
            }
            if !report.integers_subordinate_to_dw {
                return Err(format!(
                    "N={n}: rho-integer {:?} missing among DW endpoints",
                    report.first_unsubordinated
                ));
            }
        }
        // N = 2: both tilings are identical tile-for-tile.
        let sp2 = SilverPolynomial::distinguished(2).unwrap();
        let dw = dw_rule(&sp2, None).unwrap();
        let hat = silverline_core::tiling::dwt_rule(&sp2).unwrap();
        let a = limit_prefix(&dw, 1, 200).map_err(|e| e.to_string())?;
        let b = limit_prefix(&hat, 1, 200).map_err(|e| e.to_string())?;
        if a != b {
            return Err("N=2: DW and hat tilings differ".into());
        }
        Ok("hat endpoints = rho-integers (N=2..4, 200 tiles, exact); subordination to DW verified".into())
    })
}

/// 5. Successor-gap census for N = 3.
pub fn criterion_5() -> CriterionResult {
    run(5, "successor-gap census", None, || {
        let (_, field, _) = dist_setup(3);
        let enumeration = enumerate_integers(3, 501, &field).map_err(|e| e.to_string())?;
        let one = FieldElement::one(&field);
        let len_mid = inverse_power_sum(&field, 2).map_err(|e| e.to_string())?; // 1/rho + 1/rho^2
        let len_small = inverse_power_sum(&field, 1).map_err(|e| e.to_string())?; // 1/rho
        let mut counts = [0usize; 3];
        for delta in &enumeration.deltas[1..] {
            if *delta == one {
                counts[0] += 1;
            } else if *delta == len_mid {
                counts[1] += 1;
            } else if *delta == len_small {
                counts[2] += 1;
            } else {
                return Err(format!("unexpected gap value {delta}"));
            }
        }
        if counts.iter().any(|&c| c == 0) {
            return Err(format!("some prototile gap never occurs: {counts:?}"));
        }
        Ok(format!(
            "500 gaps are exactly {{1 ({}), 1/rho+1/rho^2 ({}), 1/rho ({})}}",
            counts[0], counts[1], counts[2]
        ))
    })
}

/// 6. Primitivity classification on all silver polynomials of degree <= 8.
pub fn criterion_6() -> CriterionResult {
    run(6, "primitivity classification", Some(30.0), || {
        let mut total = 0usize;
        let mut nonprimitive = 0usize;
        for n in 2..=8usize {
            for sp in enumerate_silver_polynomials(n).unwrap() {
                total += 1;
                let (by_gcd, d) = silver_primitivity_by_gcd(&sp);
                let by_power = is_primitive(&silver_companion(&sp, CompanionForm::Dw));
                if by_gcd != by_power {
                    return Err(format!("{sp}: gcd criterion disagrees with the power test"));
                }
                if !by_gcd {
                    nonprimitive += 1;
                    let (q, d2) = decompose_nonprimitive(&sp).map_err(|e| e.to_string())?;
                    if d2 != d {
                        return Err(format!("{sp}: decomposition gcd mismatch"));
                    }
                    if q.to_polynomial().compose_power(d2) != sp.to_polynomial() {
                        return Err(format!("{sp}: P(X) != Q(X^d)"));
                    }
                    if !silver_primitivity_by_gcd(&q).0 {
                        return Err(format!("{sp}: quotient polynomial not primitive"));
                    }
                }
            }
        }
        Ok(format!("{total} polynomials agree; {nonprimitive} non-primitive cases round-trip P(X)=Q(X^d)"))
    })
}

/// 7. Convergence modes of the named rules.
pub fn criterion_7() -> CriterionResult {
    run(7, "convergence modes", None, || {
        let cases: [(&[u8], Option<&[u8]>, ConvergenceMode); 5] = [
            (&[1, 1], None, ConvergenceMode::Direct),
            (&[1, 0, 1], None, ConvergenceMode::Direct),
            (&[1, 0, 1], Some(&[3, 1]), ConvergenceMode::Subsequence(3)),
            (&[0, 1, 1], None, ConvergenceMode::Subsequence(2)),
            (&[0, 1, 1], Some(&[3, 2]), ConvergenceMode::Subsequence(3)),
        ];
        for (bits, order, expect) in cases {
            let sp = SilverPolynomial::new(bits.to_vec()).unwrap();
            let rule = dw_rule(&sp, order).map_err(|e| e.to_string())?;
            let got = detect_convergence(&rule, 1, 17).mode;
            if got != expect {
                return Err(format!("{sp} with order {order:?}: got {got:?}, expected {expect:?}"));
            }
        }
        Ok("golden direct; supergolden (1,3) direct, (3,1) k=3; plastic (2,3) k=2, (3,2) k=3".into())
    })
}

/// 8. Frequency convergence for the golden rule.
pub fn criterion_8() -> CriterionResult {
    run(8, "frequency convergence", Some(10.0), || {
        let sp = SilverPolynomial::distinguished(2).unwrap();
        let rule = dw_rule(&sp, None).unwrap();
        let counts = count_evolution(&rule, 1, 20).map_err(|e| e.to_string())?;
        for (k, c) in counts.iter().enumerate() {
            if c != &count_matrix_power(&rule, &counts[0], k) {
                return Err(format!("count vector at k={k} differs from (U^tr)^k d0"));
            }
        }
        let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
        let drift = frequency_drift(&rule, 1, 40, &tol).map_err(|e| e.to_string())?;
        match drift.below_tol_at {
            Some(k) if k <= 40 => {}
            other => return Err(format!("distance not below 1e-6 by iteration 40: {other:?}")),
        }
        Ok(format!(
            "counts match (U^tr)^k exactly for k<=20; frequency within 1e-6 of the Perron direction by k={}",
            drift.below_tol_at.unwrap()
        ))
    })
}

/// 9. Non-periodicity evidence on 2000-tile prefixes.
pub fn criterion_9() -> CriterionResult {
    run(9, "non-periodicity evidence", Some(10.0), || {
        let cases: [(&str, &[u8]); 4] = [
            ("golden", &[1, 1]),
            ("tribonacci", &[1, 1, 1]),
            ("supergolden", &[1, 0, 1]),
            ("plastic", &[0, 1, 1]),
        ];
        for (name, bits) in cases {
            let sp = SilverPolynomial::new(bits.to_vec()).unwrap();
            let rule = dw_rule(&sp, None).unwrap();
            let prefix = limit_prefix(&rule, 1, 2000).map_err(|e| e.to_string())?;
            let report = check_periodicity(&prefix, 500).map_err(|e| e.to_string())?;
            if let Some(m) = report.pure {
                return Err(format!("{name}: unexpected pure period {m}"));
            }
            if let Some((j, m)) = report.eventual {
                return Err(format!("{name}: unexpected eventual period {m} from offset {j}"));
            }
        }
        Ok("no exact or eventual period <= 500 in the first 2000 tiles of all four rules".into())
    })
}

/// 10. Conjugation identities.
pub fn criterion_10() -> CriterionResult {
    run(10, "conjugation identities", Some(30.0), || {
        // Deterministic xorshift; 50 random monic polynomials, degrees 2..8,
        // nonzero constant coefficient.
        let mut state = 0x51f15e9u64 ^ 0x9e3779b97f4a7c15;
        let mut next = move |bound: i64| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % (2 * bound as u64 + 1)) as i64 - bound
        };
        for trial in 0..50 {
            let degree = 2 + (trial % 7);
            let mut coeffs: Vec<i64> = (0..degree).map(|_| next(4)).collect();
            if coeffs[0] == 0 {
                coeffs[0] = 1 + (trial as i64 % 3);
            }
            coeffs.push(1);
            let p = IntPolynomial::from_i64(&coeffs);
            let t = conjugation_t(&p).map_err(|e| e.to_string())?;
            let cp = companion(&p, CompanionForm::P).map_err(|e| e.to_string())?;
            let cpt = companion(&p, CompanionForm::PTranspose).map_err(|e| e.to_string())?;
            if t.mul(&cp) != cpt.mul(&t) {
                return Err(format!("T C_P != C_P^tr T for {p}"));
            }
        }
        // 10 silver DW / DW-transpose intertwiner pairs.
        let mut pairs = 0usize;
        'outer: for n in 2..=5usize {
            for sp in enumerate_silver_polynomials(n).unwrap() {
                if !silver_primitivity_by_gcd(&sp).0 {
                    continue;
                }
                let a = silver_companion(&sp, CompanionForm::Dw);
                let b = silver_companion(&sp, CompanionForm::DwTranspose);
                let m = intertwiner(&a, &b).map_err(|e| e.to_string())?;
                if b.as_int().mul(&m) != m.mul(a.as_int()) {
                    return Err(format!("B M != M A for {sp}"));
                }
                if !m.is_non_negative() || m.det().is_zero() {
                    return Err(format!("intertwiner for {sp} not a valid non-negative conjugator"));
                }
                pairs += 1;
                if pairs == 10 {
                    break 'outer;
                }
            }
        }
        if pairs != 10 {
            return Err(format!("only {pairs} intertwiner pairs available"));
        }
        Ok("T C_P = C_P^tr T for 50 random polynomials; B M = M A for 10 silver pairs, exactly".into())
    })
}

/// 11. Dichotomy pipeline for golden and tribonacci at degree bound 10.
pub fn criterion_11(progress: Option<&mut dyn FnMut(usize, usize)>) -> CriterionResult {
    let mut progress = progress;
    run(11, "dichotomy pipeline", Some(600.0), || {
        let mut detail = String::new();
        for bits in [&[1u8, 1][..], &[1, 1, 1]] {
            let sp = SilverPolynomial::new(bits.to_vec()).unwrap();
            let (_, field, root) = dist_setup(sp.degree());
            let mu = dichotomy::estimate_mu(&field, &root, 10).map_err(|e| e.to_string())?;
            let cert = dichotomy::build_certificate(&sp, &field, &root, &mu.lower_bound, 10)
                .map_err(|e| format!("{sp}: build failed: {e}"))?;
            let outcome = crate::commands::parallel_verify(
                &cert,
                &field,
                &root,
                10,
                crate::commands::thread_cap(),
                progress.as_deref_mut(),
            )
            .map_err(|e| e.to_string())?;
            if !outcome.ok {
                return Err(format!("{sp}: verification failed: {:?}", outcome.witness));
            }
            if outcome.checked + outcome.zeros != dichotomy::candidate_count(10) - 1 {
                return Err(format!("{sp}: candidate coverage incomplete"));
            }
            // Corrupted certificate must be rejected with a concrete witness.
            let mut bad = cert.clone();
            bad.v0[1] = -bad.v0[1].clone();
            let rejected = dichotomy::verify_certificate(&bad, &field, &root, 10, None)
                .map_err(|e| e.to_string())?;
            let Some(w) = rejected.witness else {
                return Err(format!("{sp}: corrupted certificate was not rejected"));
            };
            if rejected.ok || w.q.is_zero() {
                return Err(format!("{sp}: rejection lacks a concrete witness"));
            }
            match w.kind {
                WitnessKind::SignMismatch { .. } | WitnessKind::IdentityMismatch => {}
            }
            detail.push_str(&format!(
                "{}: verified {} candidates ({} zero-valued); ",
                sp, outcome.checked, outcome.zeros
            ));
        }
        detail.push_str("corrupted v0 rejected with witness q");
        Ok(detail)
    })
}

/// 12. Impossibility reports for supergolden and plastic.
pub fn criterion_12() -> CriterionResult {
    run(12, "rational-L impossibility", None, || {
        let sg = dichotomy::rational_l_impossibility(ImpossibilityCase::Supergolden)
            .map_err(|e| e.to_string())?;
        // (La+1) psi^2 + (Lb-1) psi + Lc = 0 forces (La, Lb, Lc) = (-1, 1, 0).
        let expect_sg = [
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::one(),
            BigRational::zero(),
        ];
        if sg.forced != expect_sg || !sg.contradiction {
            return Err(format!("supergolden: forced {:?}", sg.forced));
        }
        if sg.identity_checked != "psi^4 - psi^3 = psi" {
            return Err("supergolden identity not the paper's".into());
        }
        let pl = dichotomy::rational_l_impossibility(ImpossibilityCase::Plastic)
            .map_err(|e| e.to_string())?;
        // (La+1) theta^2 + (Lb-1) theta + (Lc-1) = 0 forces (-1, 1, 1).
        let expect_pl = [
            BigRational::from_integer(BigInt::from(-1)),
            BigRational::one(),
            BigRational::one(),
        ];
        if pl.forced != expect_pl || !pl.contradiction {
            return Err(format!("plastic: forced {:?}", pl.forced));
        }
        // Golden control stays consistent.
        let g = dichotomy::rational_l_impossibility(ImpossibilityCase::GoldenAnalog)
            .map_err(|e| e.to_string())?;
        if g.contradiction {
            return Err("golden analogue produced a spurious contradiction".into());
        }
        Ok("supergolden and plastic contradictions certified with the paper's quadratic relations; golden control consistent".into())
    })
}

/// Runs the whole suite in order.
pub fn run_all(mut progress: Option<&mut dyn FnMut(usize, usize)>) -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(progress.as_deref_mut()),
        criterion_12(),
    ]
}

