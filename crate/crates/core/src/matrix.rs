//! Non-negative integer matrices: irreducibility, primitivity, certified
//! Perron data, companion forms, and the conjugation constructions
//! (anti-triangular T, Krylov W, intertwiners).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::factor;
use crate::field::{FieldElement, NumberField, RootContext};
use crate::poly::IntPolynomial;
use crate::silver::SilverPolynomial;

/// A square matrix with arbitrary-precision integer entries (any sign).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), n * n, "row-major square matrix expected");
        Self { n, entries }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n);
            entries.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        Self { n, entries }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j) * &x[j]).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_non_negative(&self) -> bool {
        self.entries.iter().all(|e| !e.is_negative())
    }

    /// Characteristic polynomial by the Faddeev-LeVerrier recursion; exact,
    /// returned monic with integer coefficients, lowest degree first.
    pub fn char_poly(&self) -> IntPolynomial {
        let n = self.n;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = Self::zero(n); // M_0 = 0
        let mut a = BigInt::one(); // a_0 = 1
        for k in 1..=n {
            // M_k = A * (M_{k-1} + a_{k-1} I)
            let mut shifted = m;
            for i in 0..n {
                *shifted.at_mut(i, i) += &a;
            }
            m = self.mul(&shifted);
            let tr: BigInt = (0..n).map(|i| m.at(i, i).clone()).sum();
            let kk = BigInt::from(k as u64);
            let (q, r) = (-tr).div_rem(&kk);
            debug_assert!(r.is_zero(), "Faddeev-LeVerrier trace divisibility");
            a = q;
            coeffs[n - k] = a.clone();
        }
        IntPolynomial::new(coeffs)
    }

    /// Determinant, read off the characteristic polynomial.
    pub fn det(&self) -> BigInt {
        let cp = self.char_poly();
        let c0 = cp.coeff(0);
        if self.n % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Entry-positivity pattern.
    fn pattern(&self) -> BoolMatrix {
        BoolMatrix {
            n: self.n,
            bits: self.entries.iter().map(|e| e.is_positive()).collect(),
        }
    }
}

/// A non-negative integer matrix; the invariant is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonNegIntMatrix(IntMatrix);

impl NonNegIntMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_non_negative() {
            return Err(Error::Precondition(String::from("matrix has a negative entry")));
        }
        Ok(Self(m))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(rows))
    }

    pub fn as_int(&self) -> &IntMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        self.0.at(i, j)
    }
}

/// Boolean positivity-pattern matrix with OR-AND arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BoolMatrix {
    n: usize,
    bits: Vec<bool>,
}

impl BoolMatrix {
    fn at(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut bits = vec![false; n * n];
        for i in 0..n {
            for k in 0..n {
                if self.at(i, k) {
                    for j in 0..n {
                        if other.at(k, j) {
                            bits[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Self { n, bits }
    }

    fn or(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect(),
        }
    }

    fn all_true(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    fn identity(n: usize) -> Self {
        let mut bits = vec![false; n * n];
        for i in 0..n {
            bits[i * n + i] = true;
        }
        Self { n, bits }
    }

    fn pow_pattern(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// True iff the directed graph with edges `i -> j` for `m_ij > 0` is strongly
/// connected (equivalently: no permutation puts the matrix in block
/// triangular form).
pub fn is_irreducible_matrix(m: &NonNegIntMatrix) -> bool {
    let n = m.size();
    if n == 0 {
        return false;
    }
    let p = m.as_int().pattern();
    // Reachability closure: (I + M)^(n-1) is all-positive iff strongly connected.
    let closure = BoolMatrix::identity(n).or(&p).pow_pattern((n.max(2) - 1) as u64);
    closure.all_true()
}

/// Wielandt exponent: a non-negative matrix is primitive iff its pattern to
/// the power `N^2 - 2N + 2` is entrywise positive.
pub fn is_primitive(m: &NonNegIntMatrix) -> bool {
    let n = m.size();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return m.at(0, 0).is_positive();
    }
    let e = (n * n - 2 * n + 2) as u64;
    m.as_int().pattern().pow_pattern(e).all_true()
}

/// The four companion-matrix layouts for `X^N - sum c_j X^(N-j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompanionForm {
    /// First row `(c_1 ... c_N)`, subdiagonal of ones.
    Dw,
    /// First column `(c_1 ... c_N)`, superdiagonal of ones.
    DwTranspose,
    /// Last row `(c_N ... c_1)`, superdiagonal of ones.
    P,
    /// Last column `(c_N ... c_1)` read top-down, subdiagonal of ones.
    PTranspose,
}

/// Subtracted coefficients `c_1..c_N` of a monic polynomial
/// `X^N - sum c_j X^(N-j)`.
pub fn subtracted_coefficients(p: &IntPolynomial) -> Result<Vec<BigInt>> {
    if !p.is_monic() || p.degree() < 1 {
        return Err(Error::Precondition(String::from("companion forms need a monic polynomial of degree >= 1")));
    }
    let n = p.degree();
    Ok((1..=n).map(|j| -p.coeff(n - j)).collect())
}

/// The requested companion matrix of a monic polynomial. Entries are signed
/// in general; for silver polynomials they are all 0/1.
pub fn companion(p: &IntPolynomial, form: CompanionForm) -> Result<IntMatrix> {
    let c = subtracted_coefficients(p)?;
    let n = c.len();
    let mut m = IntMatrix::zero(n);
    match form {
        CompanionForm::Dw => {
            for j in 0..n {
                *m.at_mut(0, j) = c[j].clone();
            }
            for i in 1..n {
                *m.at_mut(i, i - 1) = BigInt::one();
            }
        }
        CompanionForm::DwTranspose => {
            for i in 0..n {
                *m.at_mut(i, 0) = c[i].clone();
            }
            for i in 0..n - 1 {
                *m.at_mut(i, i + 1) = BigInt::one();
            }
        }
        CompanionForm::P => {
            for i in 0..n - 1 {
                *m.at_mut(i, i + 1) = BigInt::one();
            }
            for j in 0..n {
                *m.at_mut(n - 1, j) = c[n - 1 - j].clone();
            }
        }
        CompanionForm::PTranspose => {
            for i in 1..n {
                *m.at_mut(i, i - 1) = BigInt::one();
            }
            for i in 0..n {
                *m.at_mut(i, n - 1) = c[n - 1 - i].clone();
            }
        }
    }
    Ok(m)
}

/// Companion matrix of a silver polynomial, guaranteed non-negative.
pub fn silver_companion(p: &SilverPolynomial, form: CompanionForm) -> NonNegIntMatrix {
    NonNegIntMatrix::new(companion(&p.to_polynomial(), form).expect("silver polynomials are monic"))
        .expect("silver companion matrices are non-negative")
}

/// Primitivity of the silver companion by the index-gcd criterion: the
/// matrix is primitive iff the labels of the nonzero coefficients are
/// coprime. Returns `(primitive, gcd)`.
pub fn silver_primitivity_by_gcd(p: &SilverPolynomial) -> (bool, usize) {
    let mut g = 0usize;
    for j in p.nonzero_indices() {
        g = g.gcd(&j);
    }
    (g == 1, g)
}

/// Splits a non-primitive silver polynomial as `P(X) = Q(X^d)` with primitive
/// Q, where `d` is the gcd of the nonzero-coefficient labels.
pub fn decompose_nonprimitive(p: &SilverPolynomial) -> Result<(SilverPolynomial, usize)> {
    let (primitive, d) = silver_primitivity_by_gcd(p);
    if primitive {
        return Err(Error::NoDecomposition);
    }
    let n = p.degree();
    let bits = p.bits();
    let q_bits: Vec<u8> = (1..=n / d).map(|l| bits[d * l - 1]).collect();
    let q = SilverPolynomial::new(q_bits)?;
    debug_assert_eq!(q.to_polynomial().compose_power(d), p.to_polynomial());
    Ok((q, d))
}

/// Exact Perron data of an irreducible non-negative integer matrix.
#[derive(Debug, Clone)]
pub struct PerronData {
    /// The spectral radius as an isolated root of its minimal polynomial.
    pub rho: AlgebraicReal,
    /// The Collatz-Wielandt interval that isolated it (width <= requested).
    pub rho_bounds: (BigRational, BigRational),
    /// Field in which the eigenvectors live: Q[X]/(min poly of rho).
    pub field: Arc<NumberField>,
    /// Right eigenvector with positive entries, exact.
    pub right: Vec<FieldElement>,
    /// Left eigenvector with positive entries, exact.
    pub left: Vec<FieldElement>,
}

/// Certifies the spectral radius of an irreducible non-negative matrix by
/// Collatz-Wielandt bounds under exact rational power iteration, then solves
/// for both Perron vectors exactly over Q(rho).
///
/// Irreducible-but-imprimitive inputs are handled by iterating on `M + I`
/// (primitive whenever M is irreducible) and shifting the bounds back by 1.
pub fn perron(m: &NonNegIntMatrix, width: &BigRational) -> Result<PerronData> {
    if !is_irreducible_matrix(m) {
        return Err(Error::Precondition(String::from("Perron data requires an irreducible matrix")));
    }
    let n = m.size();
    let shifted = m.as_int().add(&IntMatrix::identity(n));
    let one = BigRational::from_integer(BigInt::one());

    let mut x: Vec<BigInt> = vec![BigInt::one(); n];
    let mut best_lo: Option<BigRational> = None;
    let mut best_hi: Option<BigRational> = None;
    let mut iterations = 0usize;
    let (lo, hi) = loop {
        let y = shifted.mul_vec(&x);
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for i in 0..n {
            let q = BigRational::new(y[i].clone(), x[i].clone());
            if lo.as_ref().is_none_or(|l| &q < l) {
                lo = Some(q.clone());
            }
            if hi.as_ref().is_none_or(|h| &q > h) {
                hi = Some(q);
            }
        }
        let (lo, hi) = (lo.unwrap() - &one, hi.unwrap() - &one);
        if best_lo.as_ref().is_none_or(|b| &lo > b) {
            best_lo = Some(lo);
        }
        if best_hi.as_ref().is_none_or(|b| &hi < b) {
            best_hi = Some(hi);
        }
        let (blo, bhi) = (best_lo.clone().unwrap(), best_hi.clone().unwrap());
        if &bhi - &blo <= *width {
            break (blo, bhi);
        }
        // Keep the iterate's integers small.
        let mut g = BigInt::zero();
        for v in &y {
            g = g.gcd(v);
        }
        x = if g > BigInt::one() { y.iter().map(|v| v / &g).collect() } else { y };
        iterations += 1;
        if iterations > 200_000 {
            return Err(Error::BudgetExhausted { budget: 200_000, what: "Collatz-Wielandt narrowing" });
        }
    };

    // Identify the irreducible factor of the characteristic polynomial with a
    // root in the certified interval, refining until it is unique.
    let char_poly = m.as_int().char_poly();
    {
        let a = char_poly.eval_rational(&lo);
        let b = char_poly.eval_rational(&hi);
        if a.is_zero() || b.is_zero() || a.is_positive() == b.is_positive() {
            return Err(Error::CannotCertify(String::from(
                "characteristic polynomial does not isolate the spectral radius on the CW interval",
            )));
        }
    }
    let factors = full_factorization(&char_poly)?;
    let mut lo = lo;
    let mut hi = hi;
    let mut guard = 0usize;
    let (defining, lo, hi) = loop {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::BudgetExhausted { budget: 10_000, what: "factor isolation refinement" });
        }
        let hits: Vec<&IntPolynomial> = factors
            .iter()
            .filter(|f| {
                let a = f.eval_rational(&lo);
                let b = f.eval_rational(&hi);
                !a.is_zero() && !b.is_zero() && (a.is_positive() != b.is_positive())
            })
            .collect();
        if hits.len() == 1 {
            break (hits[0].clone(), lo, hi);
        }
        // Narrow by continuing the shifted iteration from the midpoint test:
        // simple bisection against the characteristic polynomial keeps the
        // Perron root because it is simple and real.
        let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
        let a = char_poly.eval_rational(&lo);
        let v = char_poly.eval_rational(&mid);
        if v.is_zero() || a.is_zero() {
            return Err(Error::CannotCertify(String::from("rational spectral radius not expected here")));
        }
        if v.is_positive() == a.is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    };

    let field = NumberField::new(defining.clone())?;
    let rho = AlgebraicReal::new(defining, lo.clone(), hi.clone())?;
    let right = eigenvector_for(m.as_int(), &field)?;
    let left = eigenvector_for(&m.as_int().transpose(), &field)?;
    let mut ctx = RootContext::new(rho.clone());
    let right = orient_positive(right, &mut ctx)?;
    let left = orient_positive(left, &mut ctx)?;
    Ok(PerronData { rho, rho_bounds: (lo, hi), field, right, left })
}

/// Kernel vector of `(M - rho I)` over Q(rho), exact.
fn eigenvector_for(m: &IntMatrix, field: &Arc<NumberField>) -> Result<Vec<FieldElement>> {
    let n = m.size();
    let rho = FieldElement::generator(field);
    let mut a: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = FieldElement::from_rational(field, BigRational::from_integer(m.at(i, j).clone()));
                    if i == j {
                        e = &e - &rho;
                    }
                    e
                })
                .collect()
        })
        .collect();
    // Gauss-Jordan; exactly one free column exists because rho is a simple root.
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0usize;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].inverse().expect("nonzero pivot");
        for j in 0..n {
            a[row][j] = &a[row][j] * &inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let d = &f * &a[row][j];
                    a[r][j] = &a[r][j] - &d;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let free_col = pivot_of_col
        .iter()
        .position(|p| p.is_none())
        .ok_or_else(|| Error::CannotCertify(String::from("eigenvalue system has full rank")))?;
    let mut w = vec![FieldElement::zero(field); n];
    w[free_col] = FieldElement::one(field);
    for (col, p) in pivot_of_col.iter().enumerate() {
        if let Some(r) = p {
            w[col] = -&a[*r][free_col];
        }
    }
    // Exact residual check: (M - rho I) w = 0.
    for i in 0..n {
        let mut acc = FieldElement::zero(field);
        for j in 0..n {
            let mij = FieldElement::from_rational(field, BigRational::from_integer(m.at(i, j).clone()));
            acc = &acc + &(&mij * &w[j]);
        }
        acc = &acc - &(&rho * &w[i]);
        assert!(acc.is_zero(), "exact eigenvector residual must vanish");
    }
    Ok(w)
}

fn orient_positive(mut w: Vec<FieldElement>, ctx: &mut RootContext) -> Result<Vec<FieldElement>> {
    let s = ctx.sign(&w[0])?;
    if s < 0 {
        for e in w.iter_mut() {
            *e = -&*e;
        }
    }
    for e in &w {
        if ctx.sign(e)? <= 0 {
            return Err(Error::CannotCertify(String::from("Perron vector entry is not positive")));
        }
    }
    Ok(w)
}

/// Closed-form Perron right eigenvector of a companion matrix, normalized so
/// the first prototile has length 1:
/// `C_P`: `(1/s^(N-1), ..., 1/s, 1)`; `C_P^tr`: `T v`;
/// the DW forms are the reversals.
pub fn companion_perron_vector(
    p: &IntPolynomial,
    form: CompanionForm,
    field: &Arc<NumberField>,
) -> Result<Vec<FieldElement>> {
    let c = subtracted_coefficients(p)?;
    let n = c.len();
    if field.modulus() != p {
        return Err(Error::Precondition(String::from("field modulus must equal the companion polynomial")));
    }
    let sigma = FieldElement::generator(field);
    let sigma_inv = sigma
        .inverse()
        .ok_or_else(|| Error::Precondition(String::from("zero root")))?;
    let v: Vec<FieldElement> = (0..n).map(|k| sigma_inv.pow((n - 1 - k) as u64)).collect();
    let tv: Vec<FieldElement> = {
        // Entry m (1-based, m < N): sum_{j=0}^{m-1} c_{N-j} s^(j-m); entry N: 1.
        let mut out = Vec::with_capacity(n);
        for m_idx in 1..n {
            let mut acc = FieldElement::zero(field);
            for j in 0..m_idx {
                let coeff = BigRational::from_integer(c[n - 1 - j].clone());
                acc = &acc + &sigma_inv.pow((m_idx - j) as u64).scale(&coeff);
            }
            out.push(acc);
        }
        out.push(FieldElement::one(field));
        out
    };
    let vec = match form {
        CompanionForm::P => v,
        CompanionForm::PTranspose => tv,
        CompanionForm::Dw => {
            let mut r = v;
            r.reverse();
            r
        }
        CompanionForm::DwTranspose => {
            let mut r = tv;
            r.reverse();
            r
        }
    };
    // Normalize the leading entry to 1 (basic length L_0 making L(R_1) = 1).
    let lead_inv = vec[0]
        .inverse()
        .ok_or_else(|| Error::CannotCertify(String::from("leading eigenvector entry is zero")))?;
    Ok(vec.iter().map(|e| e * &lead_inv).collect())
}

/// Full factorization into irreducible monic integer factors (with
/// multiplicity), by repeated factor extraction.
pub fn full_factorization(p: &IntPolynomial) -> Result<Vec<IntPolynomial>> {
    let mut stack = vec![p.clone()];
    let mut out = Vec::new();
    while let Some(q) = stack.pop() {
        if q.degree() == 0 {
            continue;
        }
        match factor::find_monic_factor(&q, factor::DEFAULT_DEGREE_CAP)? {
            None => out.push(q),
            Some(f) => {
                let cof = q.div_exact(&f).expect("factor divides");
                stack.push(f);
                stack.push(cof);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The anti-triangular conjugator `T` with `T C_P = C_P^tr T` and
/// `det T = +/- c_N^(N-1)`.
///
/// Row m (1-based, m < N) carries `c_N, c_(N-1), ..., c_(N-m+1)` ending at
/// column N-1; row N is `(0, ..., 0, 1)`.
pub fn conjugation_t(p: &IntPolynomial) -> Result<IntMatrix> {
    let c = subtracted_coefficients(p)?;
    let n = c.len();
    if c[n - 1].is_zero() {
        return Err(Error::SingularT);
    }
    let mut t = IntMatrix::zero(n);
    for m_idx in 1..n {
        // Columns N-m .. N-1 (1-based), entry c_(2N - m - k) at column k.
        for k in (n - m_idx)..=(n - 1) {
            let c_index = 2 * n - m_idx - k; // 1-based coefficient label
            *t.at_mut(m_idx - 1, k - 1) = c[c_index - 1].clone();
        }
    }
    *t.at_mut(n - 1, n - 1) = BigInt::one();
    // Postcondition, verified exactly.
    let cp = companion(p, CompanionForm::P)?;
    let cpt = companion(p, CompanionForm::PTranspose)?;
    assert_eq!(t.mul(&cp), cpt.mul(&t), "T C_P = C_P^tr T must hold exactly");
    let det = t.det();
    let expect = c[n - 1].pow((n - 1) as u32);
    assert!(det == expect || det == -&expect, "det T = +/- c_N^(N-1)");
    Ok(t)
}

/// Which Krylov construction to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrylovDirection {
    /// `W` with rows `u^tr A^k`; satisfies `W A = C_P W`.
    Row,
    /// `W` with columns `A^k u`; satisfies `A W = W C_P^tr`.
    Column,
}

/// Searches deterministically for a non-negative integer vector `u` whose
/// Krylov matrix is invertible over Q: standard basis vectors first, then
/// sums of two basis vectors, with budget `2 N^2`.
pub fn krylov_w(a: &NonNegIntMatrix, direction: KrylovDirection) -> Result<(IntMatrix, Vec<BigInt>)> {
    let n = a.size();
    let budget = 2 * n * n;
    let mut candidates: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut u = vec![BigInt::zero(); n];
        u[i] = BigInt::one();
        candidates.push(u);
    }
    for i in 0..n {
        for j in i..n {
            let mut u = vec![BigInt::zero(); n];
            u[i] += BigInt::one();
            u[j] += BigInt::one();
            candidates.push(u);
        }
    }
    candidates.truncate(budget);
    let at = a.as_int().transpose();
    for u in candidates {
        let w = match direction {
            KrylovDirection::Row => {
                // Rows u^tr A^k  <=>  columns (A^tr)^k u, transposed.
                let mut cols = Vec::with_capacity(n);
                let mut cur = u.clone();
                for _ in 0..n {
                    cols.push(cur.clone());
                    cur = at.mul_vec(&cur);
                }
                columns_to_matrix(&cols).transpose()
            }
            KrylovDirection::Column => {
                let mut cols = Vec::with_capacity(n);
                let mut cur = u.clone();
                for _ in 0..n {
                    cols.push(cur.clone());
                    cur = a.as_int().mul_vec(&cur);
                }
                columns_to_matrix(&cols)
            }
        };
        if !w.det().is_zero() {
            return Ok((w, u));
        }
    }
    Err(Error::BudgetExhausted { budget, what: "Krylov seed vector u with det W != 0" })
}

fn columns_to_matrix(cols: &[Vec<BigInt>]) -> IntMatrix {
    let n = cols.len();
    let mut m = IntMatrix::zero(n);
    for (j, col) in cols.iter().enumerate() {
        for i in 0..n {
            *m.at_mut(i, j) = col[i].clone();
        }
    }
    m
}

/// The intertwiner `M = W_hat T W` with `B M = M A`, for irreducible
/// non-negative A, B sharing a characteristic polynomial
/// `X^N - sum b_j X^(N-j)` (b_j >= 0, b_N != 0) equal to their minimal
/// polynomial. `M` is non-negative, integral, and invertible over Q.
pub fn intertwiner(a: &NonNegIntMatrix, b: &NonNegIntMatrix) -> Result<IntMatrix> {
    let pa = a.as_int().char_poly();
    let pb = b.as_int().char_poly();
    if pa != pb {
        return Err(Error::Precondition(String::from("characteristic polynomials differ")));
    }
    let c = subtracted_coefficients(&pa)?;
    if c.iter().any(|x| x.is_negative()) {
        return Err(Error::Precondition(String::from(
            "characteristic polynomial must have non-negative subtracted coefficients",
        )));
    }
    if c[c.len() - 1].is_zero() {
        return Err(Error::Precondition(String::from("b_N must be nonzero")));
    }
    if !is_irreducible_matrix(a) || !is_irreducible_matrix(b) {
        return Err(Error::Precondition(String::from("both matrices must be irreducible")));
    }
    let (w, _) = krylov_w(a, KrylovDirection::Row)?;
    let (w_hat, _) = krylov_w(b, KrylovDirection::Column)?;
    let t = conjugation_t(&pa)?;
    let m = w_hat.mul(&t).mul(&w);
    if m.det().is_zero() {
        return Err(Error::CannotCertify(String::from("intertwiner is singular")));
    }
    debug_assert!(m.is_non_negative());
    assert_eq!(b.as_int().mul(&m), m.mul(a.as_int()), "B M = M A must hold exactly");
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::width_10_pow_neg;

    fn silver(bits: &[u8]) -> SilverPolynomial {
        SilverPolynomial::new(bits.to_vec()).unwrap()
    }

    #[test]
    fn companion_layouts() {
        // Golden DW form.
        let g = silver(&[1, 1]);
        let dw = silver_companion(&g, CompanionForm::Dw);
        assert_eq!(dw.as_int(), &IntMatrix::from_i64(&[&[1, 1], &[1, 0]]));
        // Supergolden DW form from the paper's partition matrix.
        let sg = silver(&[1, 0, 1]);
        let dw3 = silver_companion(&sg, CompanionForm::Dw);
        assert_eq!(dw3.as_int(), &IntMatrix::from_i64(&[&[1, 0, 1], &[1, 0, 0], &[0, 1, 0]]));
        // Plastic C_P: shifted identity with last row (1, 1, 0).
        let pl = silver(&[0, 1, 1]);
        let cp = silver_companion(&pl, CompanionForm::P);
        assert_eq!(cp.as_int(), &IntMatrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 0]]));
    }

    #[test]
    fn char_poly_round_trips_companions() {
        for bits in [&[1u8, 1][..], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1, 1]] {
            let sp = silver(bits);
            for form in [CompanionForm::Dw, CompanionForm::DwTranspose, CompanionForm::P, CompanionForm::PTranspose] {
                let m = silver_companion(&sp, form);
                assert_eq!(m.as_int().char_poly(), sp.to_polynomial());
            }
        }
    }

    #[test]
    fn irreducibility_of_graphs() {
        let full = NonNegIntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        assert!(is_irreducible_matrix(&full));
        let diag = NonNegIntMatrix::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(!is_irreducible_matrix(&diag));
        for n in 2..=8 {
            for p in crate::silver::enumerate_silver_polynomials(n).unwrap() {
                assert!(is_irreducible_matrix(&silver_companion(&p, CompanionForm::Dw)));
            }
        }
    }

    #[test]
    fn primitivity_checks() {
        assert!(is_primitive(&NonNegIntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap()));
        assert!(!is_primitive(&NonNegIntMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap()));
        // Companion of x^4 - x^2 - 1; index gcd 2.
        let sp = silver(&[0, 1, 0, 1]);
        assert!(!is_primitive(&silver_companion(&sp, CompanionForm::Dw)));
        let (prim, d) = silver_primitivity_by_gcd(&sp);
        assert!(!prim);
        assert_eq!(d, 2);
    }

    #[test]
    fn gcd_criterion_matches_power_test_to_degree_8() {
        for n in 2..=8 {
            for p in crate::silver::enumerate_silver_polynomials(n).unwrap() {
                let by_gcd = silver_primitivity_by_gcd(&p).0;
                let by_power = is_primitive(&silver_companion(&p, CompanionForm::Dw));
                assert_eq!(by_gcd, by_power, "{p}");
            }
        }
    }

    #[test]
    fn decompose_round_trips() {
        let (q, d) = decompose_nonprimitive(&silver(&[0, 1, 0, 1])).unwrap();
        assert_eq!(q, silver(&[1, 1]));
        assert_eq!(d, 2);
        let (q2, d2) = decompose_nonprimitive(&silver(&[0, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(q2, silver(&[1, 1]));
        assert_eq!(d2, 3);
        let (q3, d3) = decompose_nonprimitive(&silver(&[0, 1, 0, 1, 0, 1])).unwrap();
        assert_eq!(q3, silver(&[1, 1, 1]));
        assert_eq!(d3, 2);
        assert!(matches!(decompose_nonprimitive(&silver(&[1, 1])), Err(Error::NoDecomposition)));
    }

    #[test]
    fn perron_golden_closed_form() {
        let m = NonNegIntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        let data = perron(&m, &width_10_pow_neg(20)).unwrap();
        assert!(data.rho_bounds.1.clone() - data.rho_bounds.0.clone() <= width_10_pow_neg(20));
        // Right vector is proportional to (phi, 1): w_0 = phi * w_1.
        let phi = FieldElement::generator(&data.field);
        let expect = &phi * &data.right[1];
        assert_eq!(data.right[0], expect);
    }

    #[test]
    fn perron_cp_supergolden_inverse_powers() {
        // C_P of x^3 - x^2 - 1 has right vector prop to (1/psi^2, 1/psi, 1).
        let sp = silver(&[1, 0, 1]);
        let m = silver_companion(&sp, CompanionForm::P);
        let data = perron(&m, &width_10_pow_neg(10)).unwrap();
        let closed = companion_perron_vector(&sp.to_polynomial(), CompanionForm::P, &data.field).unwrap();
        // Both normalized differently; compare ratios r_i / r_last.
        let last_inv = data.right[2].inverse().unwrap();
        let closed_last_inv = closed[2].inverse().unwrap();
        for i in 0..3 {
            assert_eq!(&data.right[i] * &last_inv, &closed[i] * &closed_last_inv);
        }
    }

    #[test]
    fn perron_dw_distinguished_powers() {
        // DW companion of the distinguished N=3 polynomial has right Perron
        // vector proportional to (rho^2, rho, 1).
        let sp = silver(&[1, 1, 1]);
        let m = silver_companion(&sp, CompanionForm::Dw);
        let data = perron(&m, &width_10_pow_neg(10)).unwrap();
        let rho = FieldElement::generator(&data.field);
        let last_inv = data.right[2].inverse().unwrap();
        assert_eq!(&data.right[0] * &last_inv, rho.pow(2));
        assert_eq!(&data.right[1] * &last_inv, rho);
    }

    #[test]
    fn perron_rejects_reducible() {
        let m = NonNegIntMatrix::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(perron(&m, &width_10_pow_neg(4)), Err(Error::Precondition(_))));
    }

    #[test]
    fn conjugation_t_layouts() {
        // x^2 - x - 1: T = [[c_2, 0], [0, 1]] = identity.
        let t2 = conjugation_t(&silver(&[1, 1]).to_polynomial()).unwrap();
        assert_eq!(t2, IntMatrix::identity(2));
        // x^3 - x^2 - 1: rows (0,1,0), (1,0,0), (0,0,1).
        let t3 = conjugation_t(&silver(&[1, 0, 1]).to_polynomial()).unwrap();
        assert_eq!(t3, IntMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]));
        // Zero constant coefficient is rejected.
        assert!(matches!(
            conjugation_t(&IntPolynomial::from_i64(&[0, -1, 1])),
            Err(Error::SingularT)
        ));
    }

    #[test]
    fn krylov_row_and_column_identities() {
        let sp = silver(&[1, 1]);
        let a = silver_companion(&sp, CompanionForm::Dw);
        let cp = companion(&sp.to_polynomial(), CompanionForm::P).unwrap();
        let (w, _) = krylov_w(&a, KrylovDirection::Row).unwrap();
        assert_eq!(w.mul(a.as_int()), cp.mul(&w));
        let cpt = companion(&sp.to_polynomial(), CompanionForm::PTranspose).unwrap();
        let (wh, _) = krylov_w(&a, KrylovDirection::Column).unwrap();
        assert_eq!(a.as_int().mul(&wh), wh.mul(&cpt));
    }

    #[test]
    fn krylov_on_companion_itself() {
        let sp = silver(&[1, 1]);
        let cp_mat = NonNegIntMatrix::new(companion(&sp.to_polynomial(), CompanionForm::P).unwrap()).unwrap();
        let (w, u) = krylov_w(&cp_mat, KrylovDirection::Row).unwrap();
        assert_eq!(u, vec![BigInt::one(), BigInt::zero()]);
        assert!(!w.det().is_zero());
    }

    #[test]
    fn intertwiner_dw_to_transpose() {
        let sp = silver(&[1, 1, 1]);
        let a = silver_companion(&sp, CompanionForm::Dw);
        let b = silver_companion(&sp, CompanionForm::DwTranspose);
        let m = intertwiner(&a, &b).unwrap();
        assert_eq!(b.as_int().mul(&m), m.mul(a.as_int()));
        assert!(m.is_non_negative());
        assert!(!m.det().is_zero());
    }

    #[test]
    fn intertwiner_same_matrix() {
        let a = NonNegIntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        let m = intertwiner(&a, &a).unwrap();
        assert_eq!(a.as_int().mul(&m), m.mul(a.as_int()));
    }

    #[test]
    fn intertwiner_example_with_conjugated_matrix() {
        // A = [[1,2,1],[1,0,0],[0,1,0]], B = S A S^-1 = [[0,1,1],[1,0,0],[1,2,1]].
        let a = NonNegIntMatrix::from_i64(&[&[1, 2, 1], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        let b = NonNegIntMatrix::from_i64(&[&[0, 1, 1], &[1, 0, 0], &[1, 2, 1]]).unwrap();
        assert_eq!(a.as_int().char_poly(), b.as_int().char_poly());
        let m = intertwiner(&a, &b).unwrap();
        assert_eq!(b.as_int().mul(&m), m.mul(a.as_int()));
        assert!(m.is_non_negative());
    }

    #[test]
    fn incompatible_char_polys_rejected() {
        let a = NonNegIntMatrix::from_i64(&[&[1, 1], &[1, 0]]).unwrap();
        let b = NonNegIntMatrix::from_i64(&[&[2, 1], &[1, 0]]).unwrap();
        assert!(matches!(intertwiner(&a, &b), Err(Error::Precondition(_))));
    }

    #[test]
    fn wielandt_exponent_is_sharp_bound() {
        // Positivity pattern stabilizes no later than N^2 - 2N + 2.
        for n in 2..=8 {
            for p in crate::silver::enumerate_silver_polynomials(n).unwrap() {
                let m = silver_companion(&p, CompanionForm::Dw);
                if is_primitive(&m) {
                    let e = (n * n - 2 * n + 2) as u64;
                    assert!(m.as_int().pattern().pow_pattern(e).all_true());
                }
            }
        }
    }
}
