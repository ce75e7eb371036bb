//! Sigma-integer representations and the normal-form machinery for
//! distinguished silver numbers.
//!
//! A sigma-integer is `sum c_i sigma^(n-i)` with bits `c_i in {0,1}`. Bits
//! are stored highest power first; the zero integer is the empty vector
//! (degree "minus infinity"). For a distinguished base of degree N, a
//! representation is in normal form when every window of N consecutive
//! coefficients contains a zero; such representations are unique and ordered
//! lexicographically by (degree, bits).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField, RootContext};
use crate::poly::IntPolynomial;

/// Bit representation of a sigma-integer, highest power first.
///
/// Canonical storage trims leading zeros, so the first stored bit is 1
/// unless the vector is empty (the zero integer).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SigmaIntRep {
    bits: Vec<u8>,
}

impl SigmaIntRep {
    /// Builds a representation, trimming leading zeros to canonical form.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::Precondition(String::from("sigma-integer bits must be 0 or 1")));
        }
        let start = bits.iter().position(|&b| b == 1);
        Ok(match start {
            None => Self { bits: Vec::new() },
            Some(s) => Self { bits: bits[s..].to_vec() },
        })
    }

    /// The zero integer (empty representation, degree minus infinity).
    pub fn zero() -> Self {
        Self { bits: Vec::new() }
    }

    pub fn one() -> Self {
        Self { bits: vec![1] }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    /// Degree of the canonical representation; `None` encodes minus infinity.
    pub fn degree(&self) -> Option<usize> {
        if self.bits.is_empty() {
            None
        } else {
            Some(self.bits.len() - 1)
        }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Parses a bit string such as "1011".
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => return Err(Error::Precondition(String::from("bit strings contain only 0 and 1"))),
            }
        }
        Self::new(bits)
    }

    /// Renders the bits as a string ("" for zero).
    pub fn to_bit_string(&self) -> String {
        crate::algebraic::bits_string(&self.bits)
    }

    /// Multiplication by sigma: appends a zero bit. The zero integer is fixed.
    pub fn inflate(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut bits = self.bits.clone();
        bits.push(0);
        Self { bits }
    }

    /// Exact value `sum c_i sigma^(n-i)` in Q(sigma).
    pub fn value(&self, field: &Arc<NumberField>) -> FieldElement {
        let sigma = FieldElement::generator(field);
        let mut acc = FieldElement::zero(field);
        for &b in &self.bits {
            acc = &(&acc * &sigma)
                + &if b == 1 { FieldElement::one(field) } else { FieldElement::zero(field) };
        }
        acc
    }

    /// Rational enclosure of the value at any real base in (1, 2], for bases
    /// whose minimal polynomial is unavailable or reducible.
    pub fn value_interval(&self, base: &AlgebraicReal) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        for &b in &self.bits {
            let bit = BigRational::from_integer(BigInt::from(b));
            lo = lo * base.lo() + &bit;
            hi = hi * base.hi() + &bit;
        }
        (lo, hi)
    }
}

/// True iff every window of N consecutive coefficients (with implied
/// trailing zeros) contains a zero, i.e. there is no run of N ones.
pub fn is_normal_form(rep: &SigmaIntRep, n_window: usize) -> bool {
    assert!(n_window >= 2);
    let mut run = 0usize;
    for &b in rep.bits() {
        if b == 1 {
            run += 1;
            if run >= n_window {
                return false;
            }
        } else {
            run = 0;
        }
    }
    true
}

/// A sigma-integer representation certified to be in normal form for the
/// distinguished base of degree `n_window`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    rep: SigmaIntRep,
    n_window: usize,
}

impl NormalForm {
    pub fn new(rep: SigmaIntRep, n_window: usize) -> Result<Self> {
        if n_window < 2 {
            return Err(Error::InvalidDegree(n_window));
        }
        if !is_normal_form(&rep, n_window) {
            return Err(Error::Precondition(String::from("representation is not in normal form")));
        }
        Ok(Self { rep, n_window })
    }

    pub fn zero(n_window: usize) -> Self {
        Self { rep: SigmaIntRep::zero(), n_window }
    }

    pub fn rep(&self) -> &SigmaIntRep {
        &self.rep
    }

    pub fn window(&self) -> usize {
        self.n_window
    }

    pub fn bits(&self) -> &[u8] {
        self.rep.bits()
    }

    pub fn degree(&self) -> Option<usize> {
        self.rep.degree()
    }

    pub fn value(&self, field: &Arc<NumberField>) -> FieldElement {
        self.rep.value(field)
    }
}

/// Rewrites any representation into its unique normal form, preserving the
/// exact value. The resulting degree is n or n+1.
///
/// This is the constructive recursion behind the existence proof: locate the
/// first run of N ones, carry it into the next higher power (using
/// `rho^(l+1) = rho^l + ... + rho^(l-N+1)`), and recurse on the head and the
/// far tail, which a gap of at least N-1 zeros keeps from interacting.
pub fn to_normal_form(rep: &SigmaIntRep, n_window: usize) -> Result<NormalForm> {
    if n_window < 2 {
        return Err(Error::InvalidDegree(n_window));
    }
    let bits = normalize_bits(rep.bits(), n_window);
    let rep = SigmaIntRep::new(bits)?;
    debug_assert!(is_normal_form(&rep, n_window));
    NormalForm::new(rep, n_window)
}

fn normalize_bits(bits: &[u8], n: usize) -> Vec<u8> {
    // Trim leading zeros.
    let Some(start) = bits.iter().position(|&b| b == 1) else {
        return Vec::new();
    };
    let bits = &bits[start..];
    let len = bits.len();
    // First run of n consecutive ones.
    let mut run = 0usize;
    let mut window_at = None;
    for (i, &b) in bits.iter().enumerate() {
        if b == 1 {
            run += 1;
            if run == n {
                window_at = Some(i + 1 - n);
                break;
            }
        } else {
            run = 0;
        }
    }
    let Some(k) = window_at else {
        return bits.to_vec();
    };
    if k == 0 {
        // Leading block of n ones carries to a fresh top power; the tail is
        // at least n positions down, so the parts never interact.
        let tail = normalize_bits(&bits[n..], n);
        let mut out = vec![0u8; len + 1];
        out[0] = 1;
        let offset = out.len() - tail.len();
        out[offset..].copy_from_slice(&tail);
        out
    } else {
        // bits[k-1] == 0 by minimality of k. Head factor: bits above the
        // zero, with the carried one appended; tail: bits below the block.
        let mut head = bits[..k - 1].to_vec();
        head.push(1);
        let head_nf = normalize_bits(&head, n);
        let tail_nf = normalize_bits(&bits[k + n..], n);
        // head_nf scaled by rho^(len - k), then the tail at the bottom.
        let mut out = vec![0u8; head_nf.len() + (len - k)];
        out[..head_nf.len()].copy_from_slice(&head_nf);
        let offset = out.len() - tail_nf.len();
        out[offset..].copy_from_slice(&tail_nf);
        out
    }
}

/// Coefficient-wise ordering of normal forms: higher degree wins, then the
/// first differing coefficient (a one beats a zero).
///
/// Both inputs must be normal forms for the same window; this agrees with
/// the exact value ordering.
pub fn compare(a: &NormalForm, b: &NormalForm) -> Result<core::cmp::Ordering> {
    if a.window() != b.window() {
        return Err(Error::Precondition(String::from("normal forms have different windows")));
    }
    let (da, db) = (a.bits().len(), b.bits().len());
    if da != db {
        return Ok(da.cmp(&db));
    }
    Ok(a.bits().cmp(b.bits()))
}

/// The largest normal form admitting a representation of degree `n`:
/// `k* = floor((n+1)/N)` blocks of N-1 ones separated by single zeros,
/// followed by `r = (n+1) mod N` ones.
pub fn largest_of_degree(n: usize, n_window: usize) -> Result<NormalForm> {
    if n_window < 2 {
        return Err(Error::InvalidDegree(n_window));
    }
    let len = n + 1;
    let k_star = len / n_window;
    let r = len % n_window;
    let mut bits = Vec::with_capacity(len);
    for _ in 0..k_star {
        for _ in 0..n_window - 1 {
            bits.push(1);
        }
        bits.push(0);
    }
    for _ in 0..r {
        bits.push(1);
    }
    NormalForm::new(SigmaIntRep::new(bits)?, n_window)
}

/// Successor of a normal form: the least normal form strictly greater, plus
/// the exact gap.
///
/// Constructive case analysis: the maximal bottom suffix equal to the
/// largest normal form of its degree is carried into the next power; the gap
/// is 1 when no such suffix ends in the bottom bit, and
/// `1/rho + ... + 1/rho^(N-r)` otherwise, with `r = t mod N` for a suffix of
/// length t.
pub fn successor(x: &NormalForm, field: &Arc<NumberField>) -> Result<(NormalForm, FieldElement)> {
    let n = x.window();
    if field.degree() != n {
        return Err(Error::Precondition(String::from("field degree must match the window")));
    }
    if x.rep().is_zero() {
        return Ok((NormalForm::new(SigmaIntRep::one(), n)?, FieldElement::one(field)));
    }
    let bits = x.bits();
    let len = bits.len();
    // Maximal t with the bottom t bits equal to largest_of_degree(t-1).
    let mut t_max = 0usize;
    for t in 1..=len {
        let pattern = largest_of_degree(t - 1, n)?;
        if &bits[len - t..] == pattern.bits() {
            t_max = t;
        }
    }
    if t_max == 0 {
        // Bottom bit is 0: the successor is x + 1.
        debug_assert_eq!(bits[len - 1], 0);
        let mut new_bits = bits.to_vec();
        new_bits[len - 1] = 1;
        let nf = to_normal_form(&SigmaIntRep::new(new_bits)?, n)?;
        return Ok((nf, FieldElement::one(field)));
    }
    let mut new_bits: Vec<u8>;
    if t_max == len {
        new_bits = vec![0u8; len + 1];
        new_bits[0] = 1;
    } else {
        new_bits = bits[..len - t_max].to_vec();
        let last = new_bits.last_mut().expect("nonempty prefix");
        debug_assert_eq!(*last, 0, "bit above a maximal largest-suffix is zero");
        *last = 1;
        new_bits.extend(core::iter::repeat_n(0u8, t_max));
    }
    let nf = to_normal_form(&SigmaIntRep::new(new_bits)?, n)?;
    // Gap formula with r the remainder of t upon division by N; for r = 0 the
    // sum telescopes to exactly 1.
    let r = t_max % n;
    let delta = inverse_power_sum(field, n - r)?;
    Ok((nf, delta))
}

/// `sum_{i=1}^{count} rho^(-i)` as an exact field element.
pub fn inverse_power_sum(field: &Arc<NumberField>, count: usize) -> Result<FieldElement> {
    let rho_inv = FieldElement::generator(field)
        .inverse()
        .ok_or_else(|| Error::Precondition(String::from("base has no inverse")))?;
    let mut acc = FieldElement::zero(field);
    let mut pow = FieldElement::one(field);
    for _ in 0..count {
        pow = &pow * &rho_inv;
        acc = &acc + &pow;
    }
    Ok(acc)
}

/// The first `count` rho-integers in increasing order starting from 0,
/// with exact values and successor gaps (`delta[0]` is zero by convention).
pub struct IntegerEnumeration {
    pub forms: Vec<NormalForm>,
    pub values: Vec<FieldElement>,
    pub deltas: Vec<FieldElement>,
}

pub fn enumerate_integers(
    n_window: usize,
    count: usize,
    field: &Arc<NumberField>,
) -> Result<IntegerEnumeration> {
    if count == 0 {
        return Err(Error::Precondition(String::from("count must be >= 1")));
    }
    let mut forms = Vec::with_capacity(count);
    let mut values = Vec::with_capacity(count);
    let mut deltas = Vec::with_capacity(count);
    let mut cur = NormalForm::zero(n_window);
    let mut val = FieldElement::zero(field);
    forms.push(cur.clone());
    values.push(val.clone());
    deltas.push(FieldElement::zero(field));
    for _ in 1..count {
        let (next, delta) = successor(&cur, field)?;
        val = &val + &delta;
        debug_assert_eq!(val, next.value(field), "successor must preserve exact values");
        forms.push(next.clone());
        values.push(val.clone());
        deltas.push(delta);
        cur = next;
    }
    Ok(IntegerEnumeration { forms, values, deltas })
}

/// Result of the exhaustive scan over `q(rho)` for `q` with coefficients in
/// {-1, 0, 1} up to a degree bound.
#[derive(Debug, Clone)]
pub struct ScanResult {
    /// The smallest nonzero |q(rho)| found, exact.
    pub min_abs: FieldElement,
    /// A polynomial attaining it.
    pub witness: IntPolynomial,
    /// Number of candidate polynomials inspected (excluding the zero poly).
    pub scanned: usize,
    /// How many candidates had q(rho) = 0 exactly.
    pub zeros: usize,
    pub degree_bound: usize,
}

/// Minimum of |q(rho)| over nonzero-valued q with coefficients in {-1,0,1}
/// and degree <= `degree_bound`; zero values are detected exactly by field
/// reduction. The scan is a lower-bound *candidate* for the paper-level
/// infimum only on the scanned range.
pub fn min_difference_scan(
    field: &Arc<NumberField>,
    root: &AlgebraicReal,
    degree_bound: usize,
) -> Result<ScanResult> {
    if degree_bound > 16 {
        return Err(Error::BudgetExhausted { budget: 16, what: "scan degree bound" });
    }
    let mut ctx = RootContext::new(root.clone());
    // Reduced coordinates of rho^k for k = 0..=degree_bound.
    let gen = FieldElement::generator(field);
    let mut powers = Vec::with_capacity(degree_bound + 1);
    let mut p = FieldElement::one(field);
    powers.push(p.clone());
    for _ in 0..degree_bound {
        p = &p * &gen;
        powers.push(p.clone());
    }
    let mut best: Option<(FieldElement, IntPolynomial)> = None;
    let mut zeros = 0usize;
    let mut scanned = 0usize;
    let len = degree_bound + 1;
    let mut trits = vec![-1i8; len]; // -1, 0, 1 odometer, c_0 fastest
    let mut exhausted = false;
    while !exhausted {
        if trits.iter().all(|&t| t == 0) {
            // Skip the zero polynomial.
        } else {
            scanned += 1;
            scan_candidate(&trits, &powers, field, &mut ctx, &mut best, &mut zeros)?;
        }
        // Advance the odometer; wrap-around ends the scan.
        let mut i = 0;
        loop {
            if i == len {
                exhausted = true;
                break;
            }
            if trits[i] < 1 {
                trits[i] += 1;
                break;
            }
            trits[i] = -1;
            i += 1;
        }
    }
    let min = best.expect("scan covered a nonzero candidate");
    Ok(ScanResult { min_abs: min.0, witness: min.1, scanned, zeros, degree_bound })
}

fn scan_candidate(
    trits: &[i8],
    powers: &[FieldElement],
    field: &Arc<NumberField>,
    ctx: &mut RootContext,
    best: &mut Option<(FieldElement, IntPolynomial)>,
    zeros: &mut usize,
) -> Result<()> {
    let mut val = FieldElement::zero(field);
    for (k, &t) in trits.iter().enumerate() {
        match t {
            1 => val = &val + &powers[k],
            -1 => val = &val - &powers[k],
            _ => {}
        }
    }
    if val.is_zero() {
        *zeros += 1;
        return Ok(());
    }
    let s = ctx.sign(&val)?;
    let abs = if s < 0 { -&val } else { val };
    let better = match best {
        None => true,
        Some((cur, _)) => ctx.sign(&(&abs - cur))? < 0,
    };
    if better {
        let poly = IntPolynomial::new(trits.iter().map(|&t| BigInt::from(t)).collect());
        *best = Some((abs, poly));
    }
    Ok(())
}

/// Brute-force oracle: all distinct sigma-integer values representable with
/// degree <= `max_degree`, sorted increasingly, with one canonical witness
/// representation each. Dedup is exact via field-element equality.
pub fn brute_force_ordered_values(
    max_degree: usize,
    field: &Arc<NumberField>,
    root: &AlgebraicReal,
) -> Vec<(FieldElement, SigmaIntRep)> {
    let mut ctx = RootContext::new(root.clone());
    let mut items: Vec<(FieldElement, SigmaIntRep)> = Vec::new();
    // All bit vectors with leading 1 and length <= max_degree + 1, plus zero.
    items.push((FieldElement::zero(field), SigmaIntRep::zero()));
    for len in 1..=max_degree + 1 {
        for mask in 0..(1u64 << (len - 1)) {
            let mut bits = Vec::with_capacity(len);
            bits.push(1u8);
            for j in 0..len - 1 {
                bits.push(((mask >> (len - 2 - j)) & 1) as u8);
            }
            let rep = SigmaIntRep::new(bits).expect("valid bits");
            let v = rep.value(field);
            items.push((v, rep));
        }
    }
    items.sort_by(|a, b| ctx.compare(&a.0, &b.0).expect("same field"));
    items.dedup_by(|a, b| a.0 == b.0);
    items
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::width_10_pow_neg;
    use crate::silver::SilverPolynomial;

    fn dist_field(n: usize) -> (Arc<NumberField>, AlgebraicReal) {
        let sp = SilverPolynomial::distinguished(n).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let root = sp.silver_number(&width_10_pow_neg(30));
        (field, root)
    }

    #[test]
    fn value_of_examples() {
        let (f2, _) = dist_field(2);
        // bits (1,1): phi + 1 = phi^2.
        let rep = SigmaIntRep::parse("11").unwrap();
        let phi = FieldElement::generator(&f2);
        assert_eq!(rep.value(&f2), phi.pow(2));
        let (f3, _) = dist_field(3);
        // bits (1,0,0,0): rho^3 = rho^2 + rho + 1.
        let rep3 = SigmaIntRep::parse("1000").unwrap();
        let rho = FieldElement::generator(&f3);
        let expect = &(&rho.pow(2) + &rho) + &FieldElement::one(&f3);
        assert_eq!(rep3.value(&f3), expect);
        assert!(SigmaIntRep::zero().value(&f3).is_zero());
    }

    #[test]
    fn inflate_appends_zero() {
        assert_eq!(SigmaIntRep::parse("1").unwrap().inflate().to_bit_string(), "10");
        assert_eq!(SigmaIntRep::parse("101").unwrap().inflate().to_bit_string(), "1010");
        assert!(SigmaIntRep::zero().inflate().is_zero());
        // Exactness: value(inflate(r)) = sigma * value(r).
        let (f, _) = dist_field(3);
        let r = SigmaIntRep::parse("1011").unwrap();
        let sigma = FieldElement::generator(&f);
        assert_eq!(r.inflate().value(&f), &sigma * &r.value(&f));
    }

    #[test]
    fn normal_form_window_checks() {
        let r = SigmaIntRep::parse("101001").unwrap();
        assert!(is_normal_form(&r, 2));
        assert!(!is_normal_form(&SigmaIntRep::parse("11").unwrap(), 2));
        assert!(is_normal_form(&SigmaIntRep::parse("110110").unwrap(), 3));
        assert!(!is_normal_form(&SigmaIntRep::parse("111").unwrap(), 3));
    }

    #[test]
    fn normalization_examples() {
        // N = 2: (1,1) -> (1,0,0).
        let nf = to_normal_form(&SigmaIntRep::parse("11").unwrap(), 2).unwrap();
        assert_eq!(nf.bits(), &[1, 0, 0]);
        // N = 3: (1,1,1) -> (1,0,0,0).
        let nf3 = to_normal_form(&SigmaIntRep::parse("111").unwrap(), 3).unwrap();
        assert_eq!(nf3.bits(), &[1, 0, 0, 0]);
        // N = 2: (1,1,1) has value phi^2 + phi + 1 = phi^3 + 1 -> (1,0,0,1).
        let nf2 = to_normal_form(&SigmaIntRep::parse("111").unwrap(), 2).unwrap();
        assert_eq!(nf2.bits(), &[1, 0, 0, 1]);
        let (f, _) = dist_field(2);
        assert_eq!(nf2.value(&f), SigmaIntRep::parse("111").unwrap().value(&f));
    }

    #[test]
    fn normalization_preserves_value_and_degree_bound() {
        for n in 2..=4 {
            let (field, _) = dist_field(n);
            for len in 1..=9usize {
                for mask in 0..(1u64 << (len - 1)) {
                    let mut bits = alloc::vec![1u8];
                    for j in 0..len - 1 {
                        bits.push(((mask >> j) & 1) as u8);
                    }
                    let rep = SigmaIntRep::new(bits).unwrap();
                    let nf = to_normal_form(&rep, n).unwrap();
                    assert_eq!(nf.value(&field), rep.value(&field), "value preserved");
                    let d0 = rep.degree().unwrap();
                    let d1 = nf.degree().unwrap();
                    assert!(d1 == d0 || d1 == d0 + 1, "degree n or n+1");
                }
            }
        }
    }

    #[test]
    fn compare_examples() {
        let n2 = |s: &str| NormalForm::new(SigmaIntRep::parse(s).unwrap(), 2).unwrap();
        assert!(NormalForm::new(SigmaIntRep::parse("11").unwrap(), 2).is_err());
        assert_eq!(compare(&n2("101"), &n2("100")).unwrap(), core::cmp::Ordering::Greater);
        let n3 = |s: &str| NormalForm::new(SigmaIntRep::parse(s).unwrap(), 3).unwrap();
        assert_eq!(compare(&n3("1000"), &n3("110")).unwrap(), core::cmp::Ordering::Greater);
    }

    #[test]
    fn largest_patterns() {
        assert_eq!(largest_of_degree(3, 2).unwrap().bits(), &[1, 0, 1, 0]);
        assert_eq!(largest_of_degree(2, 3).unwrap().bits(), &[1, 1, 0]);
        assert_eq!(largest_of_degree(5, 3).unwrap().bits(), &[1, 1, 0, 1, 1, 0]);
    }

    #[test]
    fn largest_matches_enumeration_oracle() {
        for n in 2..=4 {
            let (field, root) = dist_field(n);
            let all = brute_force_ordered_values(6, &field, &root);
            for deg in 0..=6usize {
                // Largest value among normal forms of exactly this degree.
                let mut best: Option<&FieldElement> = None;
                for (v, rep) in &all {
                    let nf = to_normal_form(rep, n).unwrap();
                    if nf.degree() == Some(deg) && is_normal_form(rep, n) && rep.degree() == Some(deg) {
                        if best.is_none_or(|b| {
                            RootContext::new(root.clone()).compare(v, b).unwrap()
                                == core::cmp::Ordering::Greater
                        }) {
                            best = Some(v);
                        }
                    }
                }
                let formula = largest_of_degree(deg, n).unwrap();
                assert_eq!(&formula.value(&field), best.unwrap(), "N={n} deg={deg}");
            }
        }
    }

    #[test]
    fn successor_small_cases() {
        let (f2, _) = dist_field(2);
        // 0 -> 1 with delta 1.
        let (one, d) = successor(&NormalForm::zero(2), &f2).unwrap();
        assert_eq!(one.bits(), &[1]);
        assert!(d.is_one());
        // 1 -> phi with delta 1/phi = phi - 1.
        let (phi, d2) = successor(&one, &f2).unwrap();
        assert_eq!(phi.bits(), &[1, 0]);
        let gen = FieldElement::generator(&f2);
        assert_eq!(d2, &gen - &FieldElement::one(&f2));
        // N = 3: (1,1) -> (1,0,0) with delta 1/rho.
        let (f3, _) = dist_field(3);
        let x = NormalForm::new(SigmaIntRep::parse("11").unwrap(), 3).unwrap();
        let (next, d3) = successor(&x, &f3).unwrap();
        assert_eq!(next.bits(), &[1, 0, 0]);
        assert_eq!(d3, inverse_power_sum(&f3, 1).unwrap());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 2..=4 {
            let (field, root) = dist_field(n);
            let oracle = brute_force_ordered_values(7, &field, &root);
            let count = 40.min(oracle.len() / 2);
            let enumerated = enumerate_integers(n, count, &field).unwrap();
            for i in 0..count {
                assert_eq!(enumerated.values[i], oracle[i].0, "N={n} index {i}");
            }
        }
    }

    #[test]
    fn first_two_integers_are_zero_and_one() {
        for n in 2..=6 {
            let (field, _) = dist_field(n);
            let e = enumerate_integers(n, 2, &field).unwrap();
            assert!(e.values[0].is_zero());
            assert!(e.values[1].is_one());
        }
    }

    #[test]
    fn scan_golden_small_bound() {
        let (field, root) = dist_field(2);
        let scan = min_difference_scan(&field, &root, 2).unwrap();
        // The defining polynomial itself evaluates to zero and is skipped.
        assert!(scan.zeros >= 2); // x^2 - x - 1 and its negative
        // Minimum is phi - 1 = 1/phi ~ 0.618 (2 - phi is unreachable with
        // coefficients in {-1,0,1} at this bound).
        let gen = FieldElement::generator(&field);
        let expect = &gen - &FieldElement::one(&field);
        assert_eq!(scan.min_abs, expect);
        assert_eq!(scan.scanned, 26); // 3^3 - 1 candidates
    }

    #[test]
    fn degree_minus_infinity_is_minimum() {
        let (f3, _) = dist_field(3);
        let zero = NormalForm::zero(3);
        let one = NormalForm::new(SigmaIntRep::one(), 3).unwrap();
        assert_eq!(compare(&zero, &one).unwrap(), core::cmp::Ordering::Less);
        assert!(zero.value(&f3).is_zero());
    }
}
