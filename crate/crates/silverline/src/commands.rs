//! Command implementations shared by the binary and the test suites.
//! Every function returns the complete, deterministic stdout payload;
//! progress goes through the callback so data artifacts stay byte-identical
//! across runs.

use std::sync::Arc;

use num_rational::BigRational;
use serde::Serialize;

use silverline_core::dichotomy::{
    self, DichotomyCertificate, ImpossibilityCase, VerifyOutcome, WitnessKind,
};
use silverline_core::field::{FieldElement, NumberField, RootContext};
use silverline_core::matrix::{
    companion, decompose_nonprimitive, intertwiner, is_irreducible_matrix, is_primitive, perron,
    silver_companion, silver_primitivity_by_gcd, CompanionForm,
};
use silverline_core::pisot::{self, PisotStatus};
use silverline_core::sigma::{self, SigmaIntRep};
use silverline_core::silver::{enumerate_silver_polynomials, SilverPolynomial};
use silverline_core::tiling::{
    detect_convergence, dw_rule, endpoints, limit_prefix, silver_prototiles, ConvergenceMode,
    IndicatorString, SubstitutionRule,
};
use silverline_core::{AlgebraicReal, Error};

use crate::config::{OutputFormat, RunConfig};
use crate::formats::{
    algebraic_to_json, coords_csv, coords_to_json, csv_line, matrix_to_json, poly_to_json,
    AlgebraicRealJson, CertificateJson, PrototileJson, TileJson,
};

/// Usage errors exit with 2, computation errors with 1.
#[derive(Debug)]
pub enum CommandError {
    Usage(String),
    Computation(Error),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Computation(e)
    }
}

pub type CmdResult = Result<String, CommandError>;

pub fn parse_silver_bits(bits: &str) -> Result<SilverPolynomial, CommandError> {
    let mut v = Vec::with_capacity(bits.len());
    for ch in bits.chars() {
        match ch {
            '0' => v.push(0u8),
            '1' => v.push(1u8),
            _ => return Err(CommandError::Usage(format!("bad coefficient bits: {bits}"))),
        }
    }
    SilverPolynomial::new(v).map_err(|e| CommandError::Usage(e.to_string()))
}

pub fn parse_form(s: &str) -> Result<CompanionForm, CommandError> {
    match s {
        "dw" => Ok(CompanionForm::Dw),
        "dwt" => Ok(CompanionForm::DwTranspose),
        "p" => Ok(CompanionForm::P),
        "pt" => Ok(CompanionForm::PTranspose),
        other => Err(CommandError::Usage(format!("unknown companion form: {other} (use dw|dwt|p|pt)"))),
    }
}

/// Parses substitution strings "1,3;1;2" (groups per prototile).
pub fn parse_rule_strings(s: &str) -> Result<Vec<Vec<u8>>, CommandError> {
    let mut out = Vec::new();
    for group in s.split(';') {
        let mut row = Vec::new();
        for item in group.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let idx: u8 = item
                .parse()
                .map_err(|_| CommandError::Usage(format!("bad prototile index: {item}")))?;
            row.push(idx);
        }
        out.push(row);
    }
    Ok(out)
}

fn field_and_root(
    sp: &SilverPolynomial,
    width: &BigRational,
) -> Result<(Arc<NumberField>, AlgebraicReal), Error> {
    let field = NumberField::new(sp.to_polynomial())?;
    let root = sp.silver_number(width);
    Ok((field, root))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// `polys N`: census with classification columns.
pub fn cmd_polys(n: usize, cfg: &RunConfig) -> CmdResult {
    if n < 2 {
        return Err(CommandError::Usage(format!("N must be >= 2, got {n}")));
    }
    if n > 16 {
        return Err(CommandError::Usage(format!("census is desk-scale, N <= 16, got {n}")));
    }
    #[derive(Serialize)]
    struct Row {
        bits: String,
        polynomial: String,
        irreducible: bool,
        primitive: bool,
        gcd: usize,
        pisot: Option<bool>,
        distinguished: bool,
    }
    let mut rows = Vec::new();
    for sp in enumerate_silver_polynomials(n)? {
        let poly = sp.to_polynomial();
        let irreducible = silverline_core::factor::is_irreducible(&poly)?;
        let (primitive, gcd) = silver_primitivity_by_gcd(&sp);
        let pisot = if irreducible {
            let root = sp.silver_number(&cfg.precision_width);
            match pisot::is_pisot(&poly, &root, &pisot::default_margin())?.status {
                PisotStatus::Pisot => Some(true),
                PisotStatus::NotPisot { .. } => Some(false),
                PisotStatus::Indeterminate { .. } => None,
            }
        } else {
            None
        };
        rows.push(Row {
            bits: sp.bits().iter().map(|b| char::from(b'0' + b)).collect(),
            polynomial: poly.to_string(),
            irreducible,
            primitive,
            gcd,
            pisot,
            distinguished: sp.is_distinguished(),
        });
    }
    match cfg.output_format {
        OutputFormat::Json => Ok(to_json(&rows)),
        OutputFormat::Csv | OutputFormat::Text => {
            let mut out = String::from("bits,polynomial,irreducible,primitive,gcd,pisot,distinguished\n");
            for r in rows {
                out.push_str(&csv_line(&[
                    r.bits,
                    r.polynomial.replace(',', " "),
                    r.irreducible.to_string(),
                    r.primitive.to_string(),
                    r.gcd.to_string(),
                    r.pisot.map_or("n/a".to_string(), |b| b.to_string()),
                    r.distinguished.to_string(),
                ]));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// `root --poly BITS`: isolated silver number.
pub fn cmd_root(bits: &str, cfg: &RunConfig) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    let root = sp.silver_number(&cfg.precision_width);
    let (refined, decimal, exact) = root.decimal(cfg.digits);
    #[derive(Serialize)]
    struct RootOut {
        root: AlgebraicRealJson,
        decimal: String,
        decimal_is_exact: bool,
    }
    Ok(to_json(&RootOut { root: algebraic_to_json(&refined), decimal, decimal_is_exact: exact }))
}

/// `normal-form --n N --bits BITS`.
pub fn cmd_normal_form(n: usize, bits: &str, cfg: &RunConfig) -> CmdResult {
    if n < 2 {
        return Err(CommandError::Usage(format!("window N must be >= 2, got {n}")));
    }
    let rep = SigmaIntRep::parse(bits).map_err(|e| CommandError::Usage(e.to_string()))?;
    let sp = SilverPolynomial::distinguished(n)?;
    let (field, root) = field_and_root(&sp, &cfg.precision_width)?;
    let nf = sigma::to_normal_form(&rep, n)?;
    let value = nf.value(&field);
    let mut ctx = RootContext::new(root);
    let (decimal, exact) = ctx.decimal(&value, cfg.digits)?;
    #[derive(Serialize)]
    struct NfOut {
        input: String,
        normal_form: String,
        degree: Option<usize>,
        value_coords: Vec<String>,
        value_decimal: String,
        decimal_is_exact: bool,
    }
    Ok(to_json(&NfOut {
        input: rep.to_bit_string(),
        normal_form: nf.rep().to_bit_string(),
        degree: nf.degree(),
        value_coords: coords_to_json(&value),
        value_decimal: decimal,
        decimal_is_exact: exact,
    }))
}

/// `integers N --count K`: CSV with exact values and successor gaps.
pub fn cmd_integers(n: usize, count: usize, cfg: &RunConfig) -> CmdResult {
    if n < 2 {
        return Err(CommandError::Usage(format!("N must be >= 2, got {n}")));
    }
    if count == 0 {
        return Err(CommandError::Usage("count must be >= 1".to_string()));
    }
    let sp = SilverPolynomial::distinguished(n)?;
    let (field, root) = field_and_root(&sp, &cfg.precision_width)?;
    let enumeration = sigma::enumerate_integers(n, count, &field)?;
    let mut ctx = RootContext::new(root);
    let mut out = String::from("index,bits,coords,value,delta\n");
    for i in 0..count {
        let (value_dec, _) = ctx.decimal(&enumeration.values[i], cfg.digits)?;
        let delta_dec = if i == 0 {
            String::new()
        } else {
            ctx.decimal(&enumeration.deltas[i], cfg.digits)?.0
        };
        out.push_str(&csv_line(&[
            i.to_string(),
            enumeration.forms[i].rep().to_bit_string(),
            coords_csv(&enumeration.values[i]),
            value_dec,
            delta_dec,
        ]));
        out.push('\n');
    }
    Ok(out)
}

/// Builds the substitution rule for `tile`/`converge`: explicit strings when
/// given, else the canonical ascending DW rule.
fn rule_for(sp: &SilverPolynomial, rule_str: Option<&str>) -> Result<SubstitutionRule, CommandError> {
    match rule_str {
        None => Ok(dw_rule(sp, None)?),
        Some(s) => {
            let strings = parse_rule_strings(s)?;
            let matrix = silver_companion(sp, CompanionForm::Dw);
            Ok(SubstitutionRule::new(matrix, strings)?)
        }
    }
}

/// `tile --poly BITS [--rule S] [--start j] --tiles K --emit json|csv`.
pub fn cmd_tile(
    bits: &str,
    rule_str: Option<&str>,
    start: u8,
    tiles: usize,
    cfg: &RunConfig,
) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    if start == 0 || start as usize > sp.degree() {
        return Err(CommandError::Usage(format!("start must be in 1..={}", sp.degree())));
    }
    let rule = rule_for(&sp, rule_str)?;
    let (field, root) = field_and_root(&sp, &cfg.precision_width)?;
    let prototiles = silver_prototiles(&sp, CompanionForm::Dw, &field)?;
    let prefix = limit_prefix(&rule, start, tiles)?;
    let mut ctx = RootContext::new(root);
    let points = endpoints(&prefix, &prototiles, &mut ctx)?;
    match cfg.output_format {
        OutputFormat::Json | OutputFormat::Text => {
            let mut tiles_json = Vec::new();
            for t in &prototiles {
                tiles_json.push(PrototileJson {
                    index: t.index,
                    length_coords: coords_to_json(&t.length),
                    length_decimal: ctx.decimal(&t.length, cfg.digits)?.0,
                });
            }
            let mut endpoint_strs = Vec::with_capacity(points.len());
            for p in &points {
                endpoint_strs.push(ctx.decimal(p, cfg.digits)?.0);
            }
            Ok(to_json(&TileJson {
                prototiles: tiles_json,
                prefix: prefix.entries().to_vec(),
                endpoints: endpoint_strs,
            }))
        }
        OutputFormat::Csv => {
            let mut out = String::from("tile,prototile,endpoint\n");
            for (i, &idx) in prefix.entries().iter().enumerate() {
                out.push_str(&csv_line(&[
                    (i + 1).to_string(),
                    idx.to_string(),
                    ctx.decimal(&points[i + 1], cfg.digits)?.0,
                ]));
                out.push('\n');
            }
            Ok(out)
        }
    }
}

/// `converge --poly BITS [--rule S] [--start j] [--budget k]`.
pub fn cmd_converge(
    bits: &str,
    rule_str: Option<&str>,
    start: u8,
    budget: Option<usize>,
) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    if start == 0 || start as usize > sp.degree() {
        return Err(CommandError::Usage(format!("start must be in 1..={}", sp.degree())));
    }
    let rule = rule_for(&sp, rule_str)?;
    let budget = budget.unwrap_or_else(|| silverline_core::tiling::default_k_budget(sp.degree()));
    let report = detect_convergence(&rule, start, budget);
    #[derive(Serialize)]
    struct ConvergeOut {
        mode: String,
        k: usize,
        budget: usize,
    }
    let mode = match report.mode {
        ConvergenceMode::Direct => "direct",
        ConvergenceMode::Subsequence(_) => "subsequence",
        ConvergenceMode::NoneWithinBudget => "none-within-budget",
    };
    Ok(to_json(&ConvergeOut { mode: mode.to_string(), k: report.k, budget }))
}

/// `matrix primitive --poly BITS --form F`.
pub fn cmd_matrix_primitive(bits: &str, form: &str) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    let form = parse_form(form)?;
    let m = silver_companion(&sp, form);
    let (by_gcd, gcd) = silver_primitivity_by_gcd(&sp);
    #[derive(Serialize)]
    struct PrimOut {
        matrix: Vec<String>,
        irreducible: bool,
        primitive: bool,
        gcd_of_labels: usize,
        primitive_by_gcd: bool,
        decomposition: Option<(String, usize)>,
    }
    let decomposition = if by_gcd {
        None
    } else {
        let (q, d) = decompose_nonprimitive(&sp)?;
        Some((q.to_polynomial().to_string(), d))
    };
    Ok(to_json(&PrimOut {
        matrix: matrix_to_json(m.as_int()),
        irreducible: is_irreducible_matrix(&m),
        primitive: is_primitive(&m),
        gcd_of_labels: gcd,
        primitive_by_gcd: by_gcd,
        decomposition,
    }))
}

/// `matrix perron --poly BITS --form F`.
pub fn cmd_matrix_perron(bits: &str, form: &str, cfg: &RunConfig) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    let form = parse_form(form)?;
    let m = silver_companion(&sp, form);
    let data = perron(&m, &cfg.precision_width)?;
    let mut ctx = RootContext::new(data.rho.clone());
    #[derive(Serialize)]
    struct PerronOut {
        rho: AlgebraicRealJson,
        rho_decimal: String,
        right_coords: Vec<Vec<String>>,
        left_coords: Vec<Vec<String>>,
        right_decimal: Vec<String>,
    }
    let mut right_decimal = Vec::new();
    for e in &data.right {
        right_decimal.push(ctx.decimal(e, cfg.digits)?.0);
    }
    Ok(to_json(&PerronOut {
        rho: algebraic_to_json(&data.rho),
        rho_decimal: data.rho.decimal(cfg.digits).1,
        right_coords: data.right.iter().map(coords_to_json).collect(),
        left_coords: data.left.iter().map(coords_to_json).collect(),
        right_decimal,
    }))
}

/// `matrix intertwine --poly BITS --form-a A --form-b B`.
pub fn cmd_matrix_intertwine(bits: &str, form_a: &str, form_b: &str) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    let a = silver_companion(&sp, parse_form(form_a)?);
    let b = silver_companion(&sp, parse_form(form_b)?);
    let m = intertwiner(&a, &b)?;
    #[derive(Serialize)]
    struct IntertwineOut {
        intertwiner: Vec<String>,
        size: usize,
        identity_bm_eq_ma_verified: bool,
    }
    Ok(to_json(&IntertwineOut {
        intertwiner: matrix_to_json(&m),
        size: m.size(),
        identity_bm_eq_ma_verified: true,
    }))
}

/// Thread cap: `SILVERLINE_THREADS`, defaulting to the machine parallelism.
pub fn thread_cap() -> usize {
    let avail = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("SILVERLINE_THREADS") {
        Ok(v) => v.parse::<usize>().ok().filter(|&n| n >= 1).map_or(avail, |n| n.min(64)),
        Err(_) => avail,
    }
}

/// Exhaustive certificate verification fanned out over `threads` chunks of
/// the lexicographic q-order; the merge keeps the lowest-index witness, so
/// the outcome is deterministic regardless of schedule.
pub fn parallel_verify(
    cert: &DichotomyCertificate,
    field: &Arc<NumberField>,
    root: &AlgebraicReal,
    degree_bound: usize,
    threads: usize,
    mut progress: Option<&mut dyn FnMut(usize, usize)>,
) -> Result<VerifyOutcome, Error> {
    let total = dichotomy::candidate_count(degree_bound);
    let threads = threads.clamp(1, 64);
    if threads == 1 {
        return dichotomy::verify_certificate(cert, field, root, degree_bound, progress.take());
    }
    let chunk = total.div_ceil(threads);
    let mut results: Vec<Option<Result<VerifyOutcome, Error>>> = Vec::new();
    results.resize_with(threads, || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let start = t * chunk;
            let len = chunk.min(total.saturating_sub(start));
            let cert = cert.clone();
            let field = Arc::clone(field);
            let root = root.clone();
            handles.push(scope.spawn(move || {
                dichotomy::verify_certificate_range(&cert, &field, &root, degree_bound, start, len)
            }));
        }
        for (t, h) in handles.into_iter().enumerate() {
            results[t] = Some(h.join().expect("verification worker panicked"));
        }
    });
    let mut merged = VerifyOutcome {
        ok: true,
        witness: None,
        checked: 0,
        zeros: 0,
        identity_samples: 0,
        degree_bound,
    };
    for (t, r) in results.into_iter().enumerate() {
        let part = r.expect("all chunks ran")?;
        merged.checked += part.checked;
        merged.zeros += part.zeros;
        merged.identity_samples += part.identity_samples;
        if merged.witness.is_none() {
            if let Some(w) = part.witness {
                merged.ok = false;
                merged.witness = Some(w);
            }
        }
        if let Some(cb) = progress.as_deref_mut() {
            cb((t + 1) * chunk.min(total), total);
        }
    }
    Ok(merged)
}

pub fn certificate_json(
    cert: &DichotomyCertificate,
    ctx: &mut RootContext,
    verified_degree: usize,
    digits: u32,
) -> Result<CertificateJson, Error> {
    use silverline_core::poly::rational_to_string;
    Ok(CertificateJson {
        poly: poly_to_json(&cert.poly.to_polynomial()),
        v0: cert.v0.iter().map(|x| x.to_string()).collect(),
        l_coords: coords_to_json(&cert.l_value),
        l_decimal: ctx.decimal(&cert.l_value, digits)?.0,
        delta: rational_to_string(&cert.delta),
        gamma: rational_to_string(&cert.gamma),
        contraction_steps: cert.contraction_steps,
        omega: rational_to_string(&cert.omega),
        mu_lower: rational_to_string(&cert.mu_lower),
        verified_degree,
    })
}

/// `dichotomy --poly BITS --degree-bound D [--ladder 4,6,8]`.
pub fn cmd_dichotomy(
    bits: &str,
    degree_bound: usize,
    ladder: Option<&str>,
    cfg: &RunConfig,
    mut progress: Option<&mut dyn FnMut(usize, usize)>,
) -> CmdResult {
    let sp = parse_silver_bits(bits)?;
    if degree_bound == 0 || degree_bound > 12 {
        return Err(CommandError::Usage("degree bound must be in 1..=12".to_string()));
    }
    let (field, root) = field_and_root(&sp, &cfg.precision_width)?;
    let bounds: Vec<usize> = match ladder {
        None => vec![degree_bound],
        Some(s) => {
            let mut v = Vec::new();
            for item in s.split(',') {
                v.push(
                    item.trim()
                        .parse()
                        .map_err(|_| CommandError::Usage(format!("bad ladder entry: {item}")))?,
                );
            }
            v
        }
    };

    // Scan ladder.
    let mut scan_trail = Vec::new();
    for &b in &bounds {
        let est = dichotomy::estimate_mu(&field, &root, b)?;
        scan_trail.push((b, silverline_core::poly::rational_to_string(&est.lower_bound)));
    }
    let mu = dichotomy::estimate_mu(&field, &root, degree_bound)?;

    let pisot_cert = pisot::is_pisot(&sp.to_polynomial(), &root, &pisot::default_margin())?;
    #[derive(Serialize)]
    struct WitnessOut {
        q: Vec<String>,
        q_index: usize,
        kind: String,
        entry: Option<usize>,
    }
    #[derive(Serialize)]
    struct VerifyOut {
        ok: bool,
        checked: usize,
        zeros: usize,
        identity_samples: usize,
        witness: Option<WitnessOut>,
    }
    #[derive(Serialize)]
    struct DichotomyOut {
        pisot: String,
        scan_trail: Vec<(usize, String)>,
        mu_lower: String,
        certificate: Option<CertificateJson>,
        verification: Option<VerifyOut>,
        verdict: String,
        note: String,
    }

    let pisot_str = match pisot_cert.status {
        PisotStatus::Pisot => "pisot".to_string(),
        PisotStatus::NotPisot { .. } => "not-pisot".to_string(),
        PisotStatus::Indeterminate { .. } => "indeterminate".to_string(),
    };
    if pisot_cert.status != PisotStatus::Pisot {
        return Ok(to_json(&DichotomyOut {
            pisot: pisot_str,
            scan_trail,
            mu_lower: silverline_core::poly::rational_to_string(&mu.lower_bound),
            certificate: None,
            verification: None,
            verdict: "inconclusive".to_string(),
            note: "hypotheses unmet: the certificate requires a Pisot root".to_string(),
        }));
    }

    let cert = dichotomy::build_certificate(&sp, &field, &root, &mu.lower_bound, degree_bound)?;
    let outcome = parallel_verify(&cert, &field, &root, degree_bound, thread_cap(), progress.take())?;
    let mut ctx = RootContext::new(root.clone());
    let cert_json = certificate_json(&cert, &mut ctx, degree_bound, cfg.digits)?;
    let verdict = if outcome.ok { "certified-tiling" } else { "rejected" };
    let witness = outcome.witness.as_ref().map(|w| WitnessOut {
        q: poly_to_json(&w.q),
        q_index: w.q_index,
        kind: match w.kind {
            WitnessKind::SignMismatch { .. } => "sign-mismatch".to_string(),
            WitnessKind::IdentityMismatch => "identity-mismatch".to_string(),
        },
        entry: match w.kind {
            WitnessKind::SignMismatch { entry } => Some(entry),
            WitnessKind::IdentityMismatch => None,
        },
    });
    Ok(to_json(&DichotomyOut {
        pisot: pisot_str,
        scan_trail,
        mu_lower: silverline_core::poly::rational_to_string(&mu.lower_bound),
        certificate: Some(cert_json),
        verification: Some(VerifyOut {
            ok: outcome.ok,
            checked: outcome.checked,
            zeros: outcome.zeros,
            identity_samples: outcome.identity_samples,
            witness,
        }),
        verdict: verdict.to_string(),
        note: "same-sign property verified exhaustively for the scanned degrees; the paper-level mu is an infimum over all degrees".to_string(),
    }))
}

/// `impossibility --case supergolden|plastic|golden`: the rational-L report.
pub fn cmd_impossibility(case: &str) -> CmdResult {
    let case = match case {
        "supergolden" => ImpossibilityCase::Supergolden,
        "plastic" => ImpossibilityCase::Plastic,
        "golden" => ImpossibilityCase::GoldenAnalog,
        other => return Err(CommandError::Usage(format!("unknown case: {other}"))),
    };
    let report = dichotomy::rational_l_impossibility(case)?;
    #[derive(Serialize)]
    struct ImpossibilityOut {
        polynomial: String,
        minuend_bits: String,
        subtrahend_bits: String,
        forced_la_lb_lc: Vec<String>,
        derived_relation: String,
        contradiction: bool,
        identity_checked: String,
    }
    let names = ["La", "Lb", "Lc", "Ld"];
    let n = report.poly.degree();
    let mut rel = String::new();
    for (j, f) in report.forced.iter().enumerate() {
        let c = -f;
        use num_traits::Zero;
        let term = if c.is_zero() {
            format!("({})", names[j])
        } else {
            use num_traits::Signed;
            let sign = if c.is_negative() { "-" } else { "+" };
            format!("({} {} {})", names[j], sign, c.abs())
        };
        let power = n - 1 - j;
        match power {
            0 => rel.push_str(&term),
            1 => rel.push_str(&format!("{term}*x + ")),
            _ => rel.push_str(&format!("{term}*x^{power} + ")),
        }
    }
    rel.push_str(" = 0");
    Ok(to_json(&ImpossibilityOut {
        polynomial: report.poly.to_polynomial().to_string(),
        minuend_bits: report.minuend.to_bit_string(),
        subtrahend_bits: report.subtrahend.to_bit_string(),
        forced_la_lb_lc: report
            .forced
            .iter()
            .map(silverline_core::poly::rational_to_string)
            .collect(),
        derived_relation: rel,
        contradiction: report.contradiction,
        identity_checked: report.identity_checked.to_string(),
    }))
}

/// Companion matrix display helper used by tests.
pub fn companion_of(bits: &str, form: &str) -> Result<Vec<String>, CommandError> {
    let sp = parse_silver_bits(bits)?;
    let m = companion(&sp.to_polynomial(), parse_form(form)?)?;
    Ok(matrix_to_json(&m))
}

/// Maps command errors to process exit codes: usage 2, computation 1.
pub fn exit_code(e: &CommandError) -> i32 {
    match e {
        CommandError::Usage(_) => 2,
        CommandError::Computation(_) => 1,
    }
}

pub fn describe(e: &CommandError) -> String {
    match e {
        CommandError::Usage(m) => m.clone(),
        CommandError::Computation(err) => err.to_string(),
    }
}

pub fn error_object(e: &CommandError) -> String {
    match e {
        CommandError::Usage(m) => {
            serde_json::to_string(&crate::formats::ErrorJson {
                error: m.clone(),
                kind: "usage".to_string(),
            })
            .unwrap()
        }
        CommandError::Computation(err) => {
            serde_json::to_string(&crate::formats::error_to_json(err)).unwrap()
        }
    }
}

/// The latest prefix entries for quick inspection in converge outputs.
pub fn short_prefix(rule: &SubstitutionRule, start: u8, len: usize) -> Result<Vec<u8>, Error> {
    Ok(limit_prefix(rule, start, len)?.entries().to_vec())
}

/// Canonical indicator-string display.
pub fn indicator_display(s: &IndicatorString) -> String {
    s.entries().iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}
