//! Indicator strings, substitution rules, the inflation-substitution
//! iteration, convergence detection, endpoints, and periodicity scans.
//!
//! Tilings of the half-line are represented by finite prefixes of their
//! indicator sequences (prototile indices, 1-based). Limits are never
//! materialized: every downstream check is prefix-checkable.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField, RootContext};
use crate::matrix::{
    companion_perron_vector, is_primitive, perron, silver_companion, CompanionForm, IntMatrix,
    NonNegIntMatrix,
};
use crate::silver::SilverPolynomial;

/// A tile prototype: 1-based index plus its exact length.
#[derive(Debug, Clone)]
pub struct Prototile {
    pub index: usize,
    pub length: FieldElement,
}

/// A finite indicator string (prototile indices, 1-based). The `completed`
/// flag marks E-padding semantics: the string stands for a finite tiling
/// completed by empty space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorString {
    entries: Vec<u8>,
    pub completed: bool,
}

impl IndicatorString {
    pub fn new(entries: Vec<u8>) -> Self {
        Self { entries, completed: true }
    }

    pub fn single(index: u8) -> Self {
        Self::new(vec![index])
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Join of two strings.
    pub fn join(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self::new(entries)
    }

    pub fn starts_with(&self, other: &Self) -> bool {
        self.entries.len() >= other.entries.len() && self.entries[..other.entries.len()] == other.entries[..]
    }

    pub fn truncated(&self, len: usize) -> Self {
        Self::new(self.entries.iter().copied().take(len).collect())
    }
}

/// An inflation-substitution rule: the partition matrix together with the
/// ordered decomposition string of each inflated prototile.
///
/// The strings are stored explicitly rather than derived from the matrix:
/// the ordering is a free choice that decides the convergence behaviour.
#[derive(Debug, Clone)]
pub struct SubstitutionRule {
    matrix: NonNegIntMatrix,
    strings: Vec<Vec<u8>>,
}

impl SubstitutionRule {
    /// Validates `#{k : S_(i,k) = R_j} = u_(ij)` for every row and builds
    /// the rule. On mismatch the offending row (1-based) and count are
    /// reported.
    pub fn new(matrix: NonNegIntMatrix, strings: Vec<Vec<u8>>) -> Result<Self> {
        let n = matrix.size();
        if strings.len() != n {
            return Err(Error::Precondition(String::from("one decomposition string per prototile")));
        }
        for (i, s) in strings.iter().enumerate() {
            let mut counts = vec![0u64; n];
            for &idx in s {
                if idx == 0 || idx as usize > n {
                    return Err(Error::Precondition(alloc::format!(
                        "row {}: prototile index {} out of range",
                        i + 1,
                        idx
                    )));
                }
                counts[idx as usize - 1] += 1;
            }
            for j in 0..n {
                let expect = matrix.at(i, j);
                if &BigInt::from(counts[j]) != expect {
                    return Err(Error::Precondition(alloc::format!(
                        "row {}: prototile {} occurs {} times, matrix expects {}",
                        i + 1,
                        j + 1,
                        counts[j],
                        expect
                    )));
                }
            }
        }
        Ok(Self { matrix, strings })
    }

    /// Rule with every decomposition in canonical ascending order.
    pub fn ascending(matrix: NonNegIntMatrix) -> Result<Self> {
        let n = matrix.size();
        let mut strings = Vec::with_capacity(n);
        for i in 0..n {
            let mut s = Vec::new();
            for j in 0..n {
                let mut c = matrix.at(i, j).clone();
                while c > BigInt::zero() {
                    s.push((j + 1) as u8);
                    c -= 1;
                }
            }
            strings.push(s);
        }
        Self::new(matrix, strings)
    }

    pub fn matrix(&self) -> &NonNegIntMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn string_for(&self, index: usize) -> &[u8] {
        &self.strings[index - 1]
    }

    /// Applies the substitution homomorphism entrywise.
    pub fn apply(&self, s: &IndicatorString) -> IndicatorString {
        let mut out = Vec::new();
        for &idx in s.entries() {
            out.extend_from_slice(&self.strings[idx as usize - 1]);
        }
        IndicatorString::new(out)
    }

    pub fn apply_times(&self, s: &IndicatorString, k: usize) -> IndicatorString {
        let mut cur = s.clone();
        for _ in 0..k {
            cur = self.apply(&cur);
        }
        cur
    }
}

/// Rule for the DW companion of a silver polynomial. Row 1 is the ordered
/// list `order` of the nonzero-coefficient indices (ascending by default);
/// row j > 1 is the single tile `R_(j-1)`.
pub fn dw_rule(p: &SilverPolynomial, order: Option<&[u8]>) -> Result<SubstitutionRule> {
    let n = p.degree();
    let matrix = silver_companion(p, CompanionForm::Dw);
    let default: Vec<u8> = p.nonzero_indices().iter().map(|&j| j as u8).collect();
    let first: Vec<u8> = match order {
        None => default,
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != default {
                return Err(Error::Precondition(String::from(
                    "first-row order must permute the nonzero-coefficient indices",
                )));
            }
            o.to_vec()
        }
    };
    let mut strings = vec![first];
    for j in 2..=n {
        strings.push(vec![(j - 1) as u8]);
    }
    SubstitutionRule::new(matrix, strings)
}

/// Rule for the transposed DW companion (the hat-tiling of Theorem
/// "silvintprop"): `rho R_j = R_1 | R_(j+1)` when `b_j = 1`, else
/// `rho R_j = R_(j+1)`, and `rho R_N = R_1`.
pub fn dwt_rule(p: &SilverPolynomial) -> Result<SubstitutionRule> {
    let n = p.degree();
    let matrix = silver_companion(p, CompanionForm::DwTranspose);
    let mut strings = Vec::with_capacity(n);
    for j in 1..=n {
        let mut s = Vec::new();
        if p.bits()[j - 1] == 1 {
            s.push(1u8);
        }
        if j < n {
            s.push((j + 1) as u8);
        }
        strings.push(s);
    }
    SubstitutionRule::new(matrix, strings)
}

/// Exact prototile lengths for a silver companion rule, normalized so the
/// first prototile has length 1.
pub fn silver_prototiles(
    p: &SilverPolynomial,
    form: CompanionForm,
    field: &Arc<NumberField>,
) -> Result<Vec<Prototile>> {
    let lengths = companion_perron_vector(&p.to_polynomial(), form, field)?;
    Ok(lengths
        .into_iter()
        .enumerate()
        .map(|(i, length)| Prototile { index: i + 1, length })
        .collect())
}

/// Ultrametric distance `2^(-min j: X_j != Y_j)` between E-completed
/// sequences (positions are 1-based); 0 iff equal as completed sequences.
pub fn ultrametric_distance(x: &IndicatorString, y: &IndicatorString) -> BigRational {
    let max_len = x.len().max(y.len());
    for j in 0..max_len {
        let a = x.entries().get(j);
        let b = y.entries().get(j);
        if a != b {
            return BigRational::new(BigInt::one(), BigInt::one() << (j + 1));
        }
    }
    BigRational::zero()
}

/// Convergence mode of the iteration started from a single prototile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConvergenceMode {
    /// `ins(start)` begins with `start`: the plain sequence converges.
    Direct,
    /// `ins^k(start)` begins with `start` for the reported smallest k > 1;
    /// the subsequence with stride k converges.
    Subsequence(usize),
    /// No return within the budget.
    NoneWithinBudget,
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub mode: ConvergenceMode,
    /// Smallest k with `ins^k(start)` starting with `start` (0 when none).
    pub k: usize,
    /// The stable seed string (the single starting prototile).
    pub prefix: IndicatorString,
}

/// Finds the smallest `k <= k_budget` with `ins^k((start))` beginning with
/// `(start)`. The default budget `N^2 + 1` generously covers the return time
/// of an index in an irreducible N-state graph.
pub fn detect_convergence(rule: &SubstitutionRule, start: u8, k_budget: usize) -> ConvergenceReport {
    let seed = IndicatorString::single(start);
    let mut cur = seed.clone();
    for k in 1..=k_budget {
        cur = rule.apply(&cur);
        if cur.starts_with(&seed) {
            return ConvergenceReport {
                mode: if k == 1 { ConvergenceMode::Direct } else { ConvergenceMode::Subsequence(k) },
                k,
                prefix: seed,
            };
        }
    }
    ConvergenceReport { mode: ConvergenceMode::NoneWithinBudget, k: 0, prefix: seed }
}

pub fn default_k_budget(n: usize) -> usize {
    n * n + 1
}

/// First `tile_count` entries of the limit tiling: iterates `ins` (or
/// `ins^k` in subsequence mode) from the starting prototile; every iterate
/// extends the previous one, which is asserted.
pub fn limit_prefix(rule: &SubstitutionRule, start: u8, tile_count: usize) -> Result<IndicatorString> {
    let report = detect_convergence(rule, start, default_k_budget(rule.size()));
    let k = match report.mode {
        ConvergenceMode::Direct => 1,
        ConvergenceMode::Subsequence(k) => k,
        ConvergenceMode::NoneWithinBudget => {
            return Err(Error::Precondition(String::from(
                "no convergence mode within budget; cannot build a limit prefix",
            )))
        }
    };
    let mut cur = IndicatorString::single(start);
    let mut guard = 0usize;
    while cur.len() < tile_count {
        let next = rule.apply_times(&cur, k);
        assert!(next.starts_with(&cur), "stable prefixes must extend");
        if next.len() == cur.len() {
            return Err(Error::Precondition(String::from("substitution does not grow; spectral radius <= 1?")));
        }
        cur = next;
        guard += 1;
        if guard > 10_000 {
            return Err(Error::BudgetExhausted { budget: 10_000, what: "limit prefix iterations" });
        }
    }
    Ok(cur.truncated(tile_count))
}

/// Endpoints `0 = y_0 < y_1 < ...` of a finite prefix: partial sums of the
/// tile lengths, strict monotonicity verified by the sign oracle.
pub fn endpoints(
    prefix: &IndicatorString,
    tiles: &[Prototile],
    ctx: &mut RootContext,
) -> Result<Vec<FieldElement>> {
    let field = match tiles.first() {
        Some(t) => t.length.field().clone(),
        None => {
            return Err(Error::Precondition(String::from("endpoint computation needs prototiles")));
        }
    };
    let mut out = Vec::with_capacity(prefix.len() + 1);
    let mut acc = FieldElement::zero(&field);
    out.push(acc.clone());
    for &idx in prefix.entries() {
        let tile = tiles
            .get(idx as usize - 1)
            .ok_or_else(|| Error::Precondition(String::from("prefix references a missing prototile")))?;
        if ctx.sign(&tile.length)? <= 0 {
            return Err(Error::Precondition(String::from("prototile lengths must be positive")));
        }
        acc = &acc + &tile.length;
        out.push(acc.clone());
    }
    Ok(out)
}

/// Periodicity scan over a finite prefix. The verdict is always relative to
/// the scanned horizon: absence here is evidence, not a proof of
/// aperiodicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    /// Smallest pure period `m <= max_period`, if any.
    pub pure: Option<usize>,
    /// Smallest `(offset, period)` with the suffix from `offset` periodic,
    /// `offset <= len/2`, at least one full period verified.
    pub eventual: Option<(usize, usize)>,
    pub scanned_len: usize,
    pub max_period: usize,
}

pub fn check_periodicity(prefix: &IndicatorString, max_period: usize) -> Result<PeriodReport> {
    let len = prefix.len();
    if len < 2 * max_period {
        return Err(Error::Precondition(String::from("prefix must be at least twice the period horizon")));
    }
    let s = prefix.entries();
    let mut pure = None;
    let mut eventual = None;
    for m in 1..=max_period {
        // Earliest index from which s is m-periodic to the end.
        let mut earliest = 0usize;
        for i in (0..len - m).rev() {
            if s[i] != s[i + m] {
                earliest = i + 1;
                break;
            }
        }
        if earliest == 0 && pure.is_none() {
            pure = Some(m);
        }
        let verified = (len - earliest).saturating_sub(m);
        if earliest > 0 && earliest <= len / 2 && verified >= m && eventual.is_none() {
            eventual = Some((earliest, m));
        }
        if pure.is_some() && eventual.is_some() {
            break;
        }
    }
    Ok(PeriodReport { pure, eventual, scanned_len: len, max_period })
}

/// Occurrence-count vectors along the iteration, one per step (step 0 is the
/// initial count). Computed from the actual strings; the transpose-matrix
/// recursion is the test oracle.
pub fn count_evolution(rule: &SubstitutionRule, start: u8, iterations: usize) -> Result<Vec<Vec<BigInt>>> {
    let n = rule.size();
    let mut out = Vec::with_capacity(iterations + 1);
    let mut cur = IndicatorString::single(start);
    out.push(count_vector(&cur, n));
    for _ in 0..iterations {
        cur = rule.apply(&cur);
        if cur.len() > 20_000_000 {
            return Err(Error::BudgetExhausted { budget: 20_000_000, what: "count-evolution string length" });
        }
        out.push(count_vector(&cur, n));
    }
    Ok(out)
}

pub fn count_vector(s: &IndicatorString, n: usize) -> Vec<BigInt> {
    let mut counts = vec![BigInt::zero(); n];
    for &idx in s.entries() {
        counts[idx as usize - 1] += 1;
    }
    counts
}

/// `(U^tr)^k d0`, the closed-form count recursion.
pub fn count_matrix_power(rule: &SubstitutionRule, d0: &[BigInt], k: usize) -> Vec<BigInt> {
    let ut = rule.matrix().as_int().transpose();
    let mut v = d0.to_vec();
    for _ in 0..k {
        v = ut.mul_vec(&v);
    }
    v
}

/// Frequency vectors along the iteration and their exact squared Euclidean
/// distance to the normalized Perron direction of `U^tr`.
#[derive(Debug)]
pub struct FrequencyDrift {
    /// Normalized count vectors `d^(k) / sum d^(k)` for k = 0..=iterations.
    pub frequencies: Vec<Vec<BigRational>>,
    /// Exact squared distances to the normalized Perron direction.
    pub dist_sq: Vec<FieldElement>,
    /// Field of the Perron data (Q of the spectral radius).
    pub field: Arc<NumberField>,
    /// Isolated spectral radius of U.
    pub rho: AlgebraicReal,
    /// First index from which the distances are strictly decreasing to the
    /// end (0 when decreasing throughout).
    pub burn_in: usize,
    /// First index whose squared distance is below the given tolerance^2.
    pub below_tol_at: Option<usize>,
}

pub fn frequency_drift(
    rule: &SubstitutionRule,
    start: u8,
    iterations: usize,
    tol: &BigRational,
) -> Result<FrequencyDrift> {
    if !is_primitive(rule.matrix()) {
        return Err(Error::Precondition(String::from("frequency drift requires a primitive matrix")));
    }
    let n = rule.size();
    let ut_nonneg = NonNegIntMatrix::new(rule.matrix().as_int().transpose())
        .expect("transpose of a non-negative matrix");
    let perron_data = perron(&ut_nonneg, &BigRational::new(BigInt::one(), BigInt::from(1u64 << 30)))?;
    let field = perron_data.field.clone();
    // Normalize the Perron direction to sum 1.
    let mut sum = FieldElement::zero(&field);
    for w in &perron_data.right {
        sum = &sum + w;
    }
    let sum_inv = sum.inverse().expect("positive vector has nonzero sum");
    let w_hat: Vec<FieldElement> = perron_data.right.iter().map(|w| w * &sum_inv).collect();

    let d0 = count_vector(&IndicatorString::single(start), n);
    let ut = rule.matrix().as_int().transpose();
    let mut counts = d0;
    let mut frequencies = Vec::with_capacity(iterations + 1);
    let mut dist_sq = Vec::with_capacity(iterations + 1);
    for k in 0..=iterations {
        let total: BigInt = counts.iter().sum();
        let freq: Vec<BigRational> =
            counts.iter().map(|c| BigRational::new(c.clone(), total.clone())).collect();
        let mut d2 = FieldElement::zero(&field);
        for (f, w) in freq.iter().zip(&w_hat) {
            let diff = &FieldElement::from_rational(&field, f.clone()) - w;
            d2 = &d2 + &(&diff * &diff);
        }
        frequencies.push(freq);
        dist_sq.push(d2);
        if k < iterations {
            counts = ut.mul_vec(&counts);
        }
    }
    let mut ctx = RootContext::new(perron_data.rho.clone());
    // burn-in: first index after which distances strictly decrease.
    let mut burn_in = 0usize;
    for k in (1..dist_sq.len()).rev() {
        let diff = &dist_sq[k] - &dist_sq[k - 1];
        if ctx.sign(&diff)? >= 0 {
            burn_in = k;
            break;
        }
    }
    let tol_sq = FieldElement::from_rational(&field, tol * tol);
    let mut below_tol_at = None;
    for (k, d2) in dist_sq.iter().enumerate() {
        if ctx.sign(&(d2 - &tol_sq))? < 0 {
            below_tol_at = Some(k);
            break;
        }
    }
    Ok(FrequencyDrift {
        frequencies,
        dist_sq,
        field,
        rho: perron_data.rho,
        burn_in,
        below_tol_at,
    })
}

/// Comparison of the rho-integer tiling against the two inflation-substitution
/// tilings of a distinguished silver number (Theorem "silvintprop").
#[derive(Debug)]
pub struct IntegerVsSubstitution {
    pub n: usize,
    pub tile_count: usize,
    /// Endpoints of the hat-tiling equal the rho-integers elementwise.
    pub hat_equals_integers: bool,
    pub first_hat_mismatch: Option<usize>,
    /// Every rho-integer appears among the DW-tiling endpoints.
    pub integers_subordinate_to_dw: bool,
    pub first_unsubordinated: Option<usize>,
}

pub fn integer_vs_substitution(
    n: usize,
    tile_count: usize,
    field: &Arc<NumberField>,
    root: &AlgebraicReal,
) -> Result<IntegerVsSubstitution> {
    let sp = SilverPolynomial::distinguished(n)?;
    if field.modulus() != &sp.to_polynomial() {
        return Err(Error::Precondition(String::from("field must be built on the distinguished polynomial")));
    }
    let mut ctx = RootContext::new(root.clone());

    let ints = crate::sigma::enumerate_integers(n, tile_count + 1, field)?;

    // Hat tiling: endpoints must be exactly the rho-integers.
    let hat = dwt_rule(&sp)?;
    let hat_tiles = silver_prototiles(&sp, CompanionForm::DwTranspose, field)?;
    let hat_prefix = limit_prefix(&hat, 1, tile_count)?;
    let hat_points = endpoints(&hat_prefix, &hat_tiles, &mut ctx)?;
    let mut hat_equals = true;
    let mut first_hat_mismatch = None;
    for (i, (a, b)) in hat_points.iter().zip(&ints.values).enumerate() {
        if a != b {
            hat_equals = false;
            first_hat_mismatch = Some(i);
            break;
        }
    }

    // DW tiling: the rho-integers are a subset of its endpoints.
    let dw = dw_rule(&sp, None)?;
    let dw_tiles = silver_prototiles(&sp, CompanionForm::Dw, field)?;
    let target = ints.values.last().expect("nonempty").clone();
    let mut dw_count = tile_count.max(8);
    let dw_points = loop {
        let dw_prefix = limit_prefix(&dw, 1, dw_count)?;
        let pts = endpoints(&dw_prefix, &dw_tiles, &mut ctx)?;
        if ctx.sign(&(pts.last().unwrap() - &target))? >= 0 {
            break pts;
        }
        dw_count *= 2;
        if dw_count > 1 << 22 {
            return Err(Error::BudgetExhausted { budget: 1 << 22, what: "DW endpoint coverage" });
        }
    };
    let mut subordinate = true;
    let mut first_unsubordinated = None;
    let mut j = 0usize;
    'outer: for (i, v) in ints.values.iter().enumerate() {
        while j < dw_points.len() {
            match ctx.sign(&(&dw_points[j] - v))? {
                0 => continue 'outer,
                s if s < 0 => j += 1,
                _ => {
                    subordinate = false;
                    first_unsubordinated = Some(i);
                    break 'outer;
                }
            }
        }
        subordinate = false;
        first_unsubordinated = Some(i);
        break;
    }

    Ok(IntegerVsSubstitution {
        n,
        tile_count,
        hat_equals_integers: hat_equals,
        first_hat_mismatch,
        integers_subordinate_to_dw: subordinate,
        first_unsubordinated,
    })
}

/// Index correspondence for a non-primitive silver polynomial
/// `P(X) = Q(X^d)`: prototile `R_(d(s-1)+1)` of the P-tiling corresponds to
/// prototile `R_s` of the Q-tiling. Maps a P-index; `None` off the image.
pub fn nonprimitive_index_map(p_index: u8, d: usize) -> Option<u8> {
    let i = p_index as usize;
    if (i - 1) % d == 0 {
        Some(((i - 1) / d + 1) as u8)
    } else {
        None
    }
}

/// Builds an `IntMatrix` of string counts for diagnostics (row i = counts of
/// `ins(R_i)`), mostly to cross-check rule construction.
pub fn rule_count_matrix(rule: &SubstitutionRule) -> IntMatrix {
    let n = rule.size();
    let mut m = IntMatrix::zero(n);
    for i in 1..=n {
        for &idx in rule.string_for(i) {
            *m.at_mut(i - 1, idx as usize - 1) += 1;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::width_10_pow_neg;

    fn golden_rule() -> SubstitutionRule {
        dw_rule(&SilverPolynomial::distinguished(2).unwrap(), None).unwrap()
    }

    fn field_and_root(bits: &[u8]) -> (Arc<NumberField>, AlgebraicReal) {
        let sp = SilverPolynomial::new(bits.to_vec()).unwrap();
        let f = NumberField::new(sp.to_polynomial()).unwrap();
        let r = sp.silver_number(&width_10_pow_neg(30));
        (f, r)
    }

    #[test]
    fn validate_rules() {
        // Golden: U = [[1,1],[1,0]], ins(R1) = (1,2), ins(R2) = (1).
        assert!(golden_rule().string_for(1) == [1, 2]);
        // Supergolden (1,3),(1),(2).
        let sg = SilverPolynomial::new(alloc::vec![1, 0, 1]).unwrap();
        let rule = dw_rule(&sg, None).unwrap();
        assert_eq!(rule.string_for(1), [1, 3]);
        assert_eq!(rule.string_for(2), [1]);
        assert_eq!(rule.string_for(3), [2]);
        // Count violation: golden with ins(R1) = (1,1).
        let m = silver_companion(&SilverPolynomial::distinguished(2).unwrap(), CompanionForm::Dw);
        assert!(SubstitutionRule::new(m, alloc::vec![alloc::vec![1, 1], alloc::vec![1]]).is_err());
    }

    #[test]
    fn homomorphism_examples() {
        let rule = golden_rule();
        assert_eq!(rule.apply(&IndicatorString::single(1)).entries(), [1, 2]);
        assert_eq!(rule.apply(&IndicatorString::new(alloc::vec![1, 2])).entries(), [1, 2, 1]);
        // Plastic rule-1: ins(R1) = (2,3).
        let pl = SilverPolynomial::new(alloc::vec![0, 1, 1]).unwrap();
        let rule_p = dw_rule(&pl, None).unwrap();
        assert_eq!(rule_p.apply(&IndicatorString::single(1)).entries(), [2, 3]);
    }

    #[test]
    fn ultrametric_cases() {
        let a = IndicatorString::new(alloc::vec![1, 2]);
        assert!(ultrametric_distance(&a, &a).is_zero());
        let b = IndicatorString::new(alloc::vec![1, 1]);
        assert_eq!(ultrametric_distance(&a, &b), BigRational::new(BigInt::one(), BigInt::from(4)));
        let c = IndicatorString::single(1);
        assert_eq!(ultrametric_distance(&c, &a), BigRational::new(BigInt::one(), BigInt::from(4)));
    }

    #[test]
    fn convergence_modes_match_first_row() {
        // Golden: direct.
        let r = detect_convergence(&golden_rule(), 1, 5);
        assert_eq!(r.mode, ConvergenceMode::Direct);
        // Supergolden ascending (1,3): direct; reversed (3,1): k = 3.
        let sg = SilverPolynomial::new(alloc::vec![1, 0, 1]).unwrap();
        let asc = detect_convergence(&dw_rule(&sg, None).unwrap(), 1, 10);
        assert_eq!(asc.mode, ConvergenceMode::Direct);
        let rev = detect_convergence(&dw_rule(&sg, Some(&[3, 1])).unwrap(), 1, 10);
        assert_eq!(rev.mode, ConvergenceMode::Subsequence(3));
        // Plastic (2,3): k = 2; (3,2): k = 3.
        let pl = SilverPolynomial::new(alloc::vec![0, 1, 1]).unwrap();
        let p1 = detect_convergence(&dw_rule(&pl, None).unwrap(), 1, 10);
        assert_eq!(p1.mode, ConvergenceMode::Subsequence(2));
        let p2 = detect_convergence(&dw_rule(&pl, Some(&[3, 2])).unwrap(), 1, 10);
        assert_eq!(p2.mode, ConvergenceMode::Subsequence(3));
    }

    #[test]
    fn golden_limit_prefix_is_fibonacci_word() {
        let prefix = limit_prefix(&golden_rule(), 1, 8).unwrap();
        assert_eq!(prefix.entries(), [1, 2, 1, 1, 2, 1, 2, 1]);
    }

    #[test]
    fn tribonacci_limit_prefix() {
        let sp = SilverPolynomial::distinguished(3).unwrap();
        let prefix = limit_prefix(&dw_rule(&sp, None).unwrap(), 1, 5).unwrap();
        // Direct iteration oracle: (1) -> (1,2,3) -> (1,2,3,1,2).
        assert_eq!(prefix.entries(), [1, 2, 3, 1, 2]);
    }

    #[test]
    fn golden_endpoints() {
        let (field, root) = field_and_root(&[1, 1]);
        let sp = SilverPolynomial::distinguished(2).unwrap();
        let tiles = silver_prototiles(&sp, CompanionForm::Dw, &field).unwrap();
        let mut ctx = RootContext::new(root);
        let prefix = IndicatorString::new(alloc::vec![1, 2, 1]);
        let pts = endpoints(&prefix, &tiles, &mut ctx).unwrap();
        // 0, 1, phi, phi + 1 (since 1 + 1/phi = phi).
        let phi = FieldElement::generator(&field);
        assert_eq!(pts[0], FieldElement::zero(&field));
        assert_eq!(pts[1], FieldElement::one(&field));
        assert_eq!(pts[2], phi);
        assert_eq!(pts[3], &phi + &FieldElement::one(&field));
    }

    #[test]
    fn periodicity_detects_constructed_period() {
        let s = IndicatorString::new(alloc::vec![1, 2, 1, 2, 1, 2]);
        let rep = check_periodicity(&s, 3).unwrap();
        assert_eq!(rep.pure, Some(2));
        let aper = IndicatorString::new(alloc::vec![1, 2, 1, 1, 2, 1, 2, 1]);
        let rep2 = check_periodicity(&aper, 2).unwrap();
        assert_eq!(rep2.pure, None);
    }

    #[test]
    fn count_evolution_matches_matrix_power() {
        let rule = golden_rule();
        let counts = count_evolution(&rule, 1, 6).unwrap();
        assert_eq!(counts[0], alloc::vec![BigInt::one(), BigInt::zero()]);
        assert_eq!(counts[1], alloc::vec![BigInt::one(), BigInt::one()]);
        assert_eq!(counts[2], alloc::vec![BigInt::from(2), BigInt::one()]);
        assert_eq!(counts[3], alloc::vec![BigInt::from(3), BigInt::from(2)]);
        for (k, c) in counts.iter().enumerate() {
            assert_eq!(c, &count_matrix_power(&rule, &counts[0], k));
        }
    }

    #[test]
    fn frequency_drift_golden() {
        let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
        let drift = frequency_drift(&golden_rule(), 1, 40, &tol).unwrap();
        assert_eq!(drift.frequencies[0], alloc::vec![
            BigRational::one(),
            BigRational::zero()
        ]);
        let hit = drift.below_tol_at.expect("converges within 40 iterations");
        assert!(hit <= 40);
        // Distances decrease after a short burn-in.
        assert!(drift.burn_in <= 3);
    }

    #[test]
    fn integer_tiling_equivalences_small() {
        let (field, root) = field_and_root(&[1, 1, 1]);
        let report = integer_vs_substitution(3, 30, &field, &root).unwrap();
        assert!(report.hat_equals_integers);
        assert!(report.integers_subordinate_to_dw);
    }

    #[test]
    fn nonprimitive_correspondence_x4_x2_1() {
        // P = x^4 - x^2 - 1 = Q(x^2) with Q = x^2 - x - 1. The ins^2 limit
        // of the P-rule maps index-wise onto the Q-limit.
        let p = SilverPolynomial::new(alloc::vec![0, 1, 0, 1]).unwrap();
        let q = SilverPolynomial::distinguished(2).unwrap();
        let rule_p = dw_rule(&p, None).unwrap();
        let rule_q = dw_rule(&q, None).unwrap();
        let conv = detect_convergence(&rule_p, 1, 17);
        assert_eq!(conv.mode, ConvergenceMode::Subsequence(2));
        let prefix_p = limit_prefix(&rule_p, 1, 100).unwrap();
        let prefix_q = limit_prefix(&rule_q, 1, 100).unwrap();
        for i in 0..100 {
            let mapped = nonprimitive_index_map(prefix_p.entries()[i], 2).expect("image indices only");
            assert_eq!(mapped, prefix_q.entries()[i]);
        }
    }
}
