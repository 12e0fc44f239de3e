//! Separation, exponents, exponent certificates and parameter scans.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bigfloat::{BigComplex, BigFloat, Round};
use crate::error::{Error, Result};
use crate::family::{catalan, mignotte_family, FamilyInstance};
use crate::numfmt::{ln_bigint, ln_rational, rational_string, sig_digits};
use crate::poly::IntPolynomial;
use crate::rootfind::{
    adaptive_roots_about, adaptive_roots_with, family_center, isolate_close_pair, Dyadic,
    PrecisionPolicy, RealBracket, RootSet,
};

/// Digits used for `sep` in reports and CSV rows.
const SEP_DIGITS: usize = 30;
/// Certificate brackets are bisected to `2^-CERT_BITS` times the predicted
/// separation.
const CERT_BITS: i64 = 24;

/// Minimum pairwise distance and the lexicographically smallest pair of
/// indices realizing it.
pub fn separation(rs: &RootSet) -> Result<(BigFloat, (usize, usize))> {
    if !rs.converged {
        return Err(Error::Unconverged);
    }
    if rs.roots.len() < 2 {
        return Err(Error::InsufficientData(
            "separation needs at least two roots".into(),
        ));
    }
    let prec = rs.prec_bits.max(64);
    let mut best: Option<(BigFloat, (usize, usize))> = None;
    for i in 0..rs.roots.len() {
        for j in i + 1..rs.roots.len() {
            let dist = rs.roots[i].sub_exact(&rs.roots[j]).abs(prec);
            if best.as_ref().is_none_or(|(b, _)| dist < *b) {
                best = Some((dist, (i, j)));
            }
        }
    }
    Ok(best.expect("at least one pair"))
}

/// `-ln(sep) / ln(H)`.
pub fn exponent(h: &BigInt, sep: &BigFloat) -> Result<f64> {
    if *h <= BigInt::one() {
        return Err(Error::InvalidParameter(format!(
            "exponent undefined for height {h}"
        )));
    }
    if sep.signum() <= 0 {
        return Err(Error::InvalidParameter(
            "separation must be positive".into(),
        ));
    }
    Ok(-sep.ln_abs() / ln_bigint(h))
}

/// Lower bound on `e(P_{d,a})` from exact sign changes only.
#[derive(Clone, Debug)]
pub struct ExponentCertificate {
    pub left: RealBracket,
    pub right: RealBracket,
    /// `h2 - l1`, an exact upper bound on the separation.
    pub sep_bound: BigRational,
    pub e_certified: f64,
}

impl ExponentCertificate {
    /// Re-evaluates the four endpoint signs exactly.
    pub fn verify(&self, p: &IntPolynomial) -> bool {
        self.left.verify(p) && self.right.verify(p) && self.left.hi <= self.right.lo
    }
}

/// Both close roots lie in `(l1, h2)`, so `sep <= h2 - l1` and
/// `e >= -ln(h2 - l1) / ln H`. With `width_target`, each bracket is first
/// bisected to at most that width.
pub fn certify_exponent(
    inst: &FamilyInstance,
    width_target: Option<&BigRational>,
) -> Result<ExponentCertificate> {
    let (left, right) = isolate_close_pair(inst, 0.1, width_target)?;
    let sep_bound = &right.hi - &left.lo;
    let e_certified = -ln_rational(&sep_bound) / ln_bigint(&inst.height());
    Ok(ExponentCertificate {
        left,
        right,
        sep_bound,
        e_certified,
    })
}

/// Bracket width used by [`analyze`] for its certificate.
pub fn default_certificate_width(inst: &FamilyInstance) -> BigRational {
    inst.prediction
        .sep_pred
        .mul_pow2(-CERT_BITS)
        .round(64, Round::Down)
        .to_rational()
}

/// Checks of the reciprocal-polynomial identities on computed roots.
#[derive(Clone, Debug, Serialize)]
pub struct ReciprocalCheck {
    /// The minimizing pair of `Q` are the inverses of the minimizing pair of `P`.
    pub pair_maps_to_inverses: bool,
    /// `max(|1/alpha|, |1/beta|) / a^(d-1)` over the close pair.
    pub inverse_scale: f64,
    /// `2 c_(d-2)`, the limit of `inverse_scale`.
    pub inverse_scale_limit: f64,
    pub inverse_scale_within_10pct: bool,
    /// `sep(Q) |alpha beta| / sep(P)`, 1 up to rounding.
    pub sep_identity_ratio: f64,
    /// `e(Q) - (e(P) - 1)`.
    pub exponent_gap: f64,
}

#[derive(Clone, Debug)]
pub struct SepReport {
    pub d: u32,
    pub a: u64,
    pub h: BigInt,
    pub sep: BigFloat,
    pub pair: (usize, usize),
    pub e: f64,
    pub e_pred: BigRational,
    pub sep_pred: BigFloat,
    pub ratio: f64,
    pub e_certified: Option<f64>,
    pub mahler_ok: bool,
    pub disc_nonzero: bool,
    pub monic_variant: bool,
    pub prec_bits: u32,
    /// Whether the minimizing pair lies in the certified brackets.
    pub pair_in_brackets: Option<bool>,
    /// Number of computed roots with `|z| < 1/2`.
    pub small_roots: usize,
    pub reciprocal: Option<ReciprocalCheck>,
    pub roots: RootSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct SepReportJson {
    pub d: u32,
    pub a: u64,
    #[serde(rename = "H")]
    pub h: String,
    pub sep: String,
    pub pair: [usize; 2],
    pub e: f64,
    pub e_pred: String,
    pub sep_pred: String,
    pub ratio: f64,
    pub e_certified: Option<f64>,
    pub mahler_ok: bool,
    pub disc_nonzero: bool,
    pub monic_variant: bool,
    pub prec_bits: u32,
    pub pair_in_brackets: Option<bool>,
    pub small_roots: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reciprocal_check: Option<ReciprocalCheck>,
}

impl SepReport {
    pub fn to_json(&self) -> SepReportJson {
        SepReportJson {
            d: self.d,
            a: self.a,
            h: self.h.to_string(),
            sep: self.sep.to_sci_string(SEP_DIGITS),
            pair: [self.pair.0, self.pair.1],
            e: self.e,
            e_pred: rational_string(&self.e_pred),
            sep_pred: self.sep_pred.to_sci_string(SEP_DIGITS),
            ratio: self.ratio,
            e_certified: self.e_certified,
            mahler_ok: self.mahler_ok,
            disc_nonzero: self.disc_nonzero,
            monic_variant: self.monic_variant,
            prec_bits: self.prec_bits,
            pair_in_brackets: self.pair_in_brackets,
            small_roots: self.small_roots,
            reciprocal_check: self.reciprocal.clone(),
        }
    }
}

/// Centered solve when a center is known, plain adaptive solve otherwise.
fn solve(poly: &IntPolynomial, center: Option<Dyadic>, hint: &BigFloat) -> Result<RootSet> {
    let policy = PrecisionPolicy::from_env();
    match center {
        Some(c) => adaptive_roots_about(poly, &c, hint, &policy),
        None => adaptive_roots_with(poly, hint, &policy),
    }
}

fn pair_in(rs: &RootSet, pair: (usize, usize), left: &RealBracket, right: &RealBracket) -> bool {
    let inside = |z: &BigComplex, b: &RealBracket| {
        z.im.abs().to_rational() < b.width() && b.contains(&z.re.to_rational())
    };
    let (zi, zj) = (&rs.roots[pair.0], &rs.roots[pair.1]);
    (inside(zi, left) && inside(zj, right)) || (inside(zi, right) && inside(zj, left))
}

fn small_root_count(rs: &RootSet) -> usize {
    let quarter = BigFloat::one().mul_pow2(-2);
    rs.roots.iter().filter(|z| z.norm_sqr(64) < quarter).count()
}

fn is_nonzero_disc(p: &IntPolynomial) -> Result<bool> {
    Ok(!p.discriminant()?.is_zero())
}

/// All roots of `P_{d,a}`, solved about the close pair when its center can
/// be bracketed and with the plain adaptive policy otherwise.
pub fn family_roots(inst: &FamilyInstance) -> Result<RootSet> {
    solve(
        &inst.poly,
        family_center(inst).ok(),
        &inst.prediction.sep_pred,
    )
}

/// Full pipeline for `P_{d,a}`: roots, separation, exponent, a best-effort
/// certificate, the ratio to the prediction and the Mahler check.
pub fn analyze(inst: &FamilyInstance) -> Result<SepReport> {
    let pred = &inst.prediction;
    let rs = family_roots(inst)?;
    let (sep, pair) = separation(&rs)?;
    let h = inst.height();
    let e = exponent(&h, &sep)?;
    let ratio = sep.div(&pred.sep_pred, 64).to_f64();
    let cert = certify_exponent(inst, Some(&default_certificate_width(inst))).ok();
    let pair_in_brackets = cert.as_ref().map(|c| pair_in(&rs, pair, &c.left, &c.right));
    Ok(SepReport {
        d: inst.d,
        a: inst.a,
        mahler_ok: e <= (inst.d - 1) as f64,
        disc_nonzero: is_nonzero_disc(&inst.poly)?,
        h,
        sep,
        pair,
        e,
        e_pred: pred.exp_pred.clone(),
        sep_pred: pred.sep_pred.clone(),
        ratio,
        e_certified: cert.map(|c| c.e_certified),
        monic_variant: false,
        prec_bits: rs.prec_bits,
        pair_in_brackets,
        small_roots: small_root_count(&rs),
        reciprocal: None,
        roots: rs,
    })
}

/// Report for the monic reciprocal `Q = x^d P_{d,a}(1/x)`, with
/// `e_pred = exp_pred - 1`. The close pair of `Q` is computed
/// independently of `P` and then compared with the inverses of the close
/// pair of `P`.
pub fn analyze_reciprocal(inst: &FamilyInstance) -> Result<SepReport> {
    let base = analyze(inst)?;
    let q = inst.poly.reciprocal();
    let prec = base.prec_bits.max(128);

    let alpha = &base.roots.roots[base.pair.0];
    let beta = &base.roots.roots[base.pair.1];
    let ab = alpha.mul(beta, prec).abs(prec);
    // sep(Q) is close to sep(P) / |alpha beta|.
    let hint = base.sep.div(&ab, prec);

    let center = inst.refined_x0().ok().map(|(lo, hi)| {
        if lo == hi {
            let inv = BigRational::one() / lo;
            Dyadic::nearest(&inv, 0)
        } else {
            Dyadic::inside(&(BigRational::one() / &hi), &(BigRational::one() / &lo))
        }
    });
    let rs = solve(&q, center, &hint)?;
    let (sep, pair) = separation(&rs)?;
    let h = q.height()?;
    let e = exponent(&h, &sep)?;
    let pred = &inst.prediction;
    let sep_pred_q = pred.sep_pred.div(&ab, 128);

    let wprec = rs.prec_bits.max(prec);
    let inv_a = alpha.recip(wprec);
    let inv_b = beta.recip(wprec);
    let (qa, qb) = (&rs.roots[pair.0], &rs.roots[pair.1]);
    let close = |u: &BigComplex, v: &BigComplex| u.sub(v, wprec).abs(64) < sep.mul_pow2(-10);
    let pair_maps_to_inverses =
        (close(qa, &inv_a) && close(qb, &inv_b)) || (close(qa, &inv_b) && close(qb, &inv_a));

    let a_pow = BigFloat::from_bigint(BigInt::from(inst.a).pow(inst.d - 1));
    let inverse_scale = inv_a.abs(64).max(inv_b.abs(64)).div(&a_pow, 64).to_f64();
    let limit = 2.0
        * crate::numfmt::rational_to_f64(&BigRational::from_integer(catalan(inst.d as i64 - 2)?));
    let sep_identity_ratio = sep.mul(&ab, 64).div(&base.sep, 64).to_f64();

    Ok(SepReport {
        d: inst.d,
        a: inst.a,
        mahler_ok: e <= (inst.d - 1) as f64,
        disc_nonzero: is_nonzero_disc(&q)?,
        h,
        sep: sep.clone(),
        pair,
        e,
        e_pred: pred.exp_pred_monic.clone(),
        ratio: sep.div(&sep_pred_q, 64).to_f64(),
        sep_pred: sep_pred_q,
        e_certified: None,
        monic_variant: true,
        prec_bits: rs.prec_bits,
        pair_in_brackets: None,
        small_roots: small_root_count(&rs),
        reciprocal: Some(ReciprocalCheck {
            pair_maps_to_inverses,
            inverse_scale,
            inverse_scale_limit: limit,
            inverse_scale_within_10pct: ((inverse_scale - limit) / limit).abs() <= 0.1,
            sep_identity_ratio,
            exponent_gap: e - (base.e - 1.0),
        }),
        roots: rs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Ok,
    /// Measured, but the sign pattern was not found, so no certificate.
    Threshold,
    NonConvergence,
    Error,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowStatus::Ok => "ok",
            RowStatus::Threshold => "threshold",
            RowStatus::NonConvergence => "non-convergence",
            RowStatus::Error => "error",
        }
    }
}

/// One `(d, a)` line of a scan.
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub d: u32,
    pub a: u64,
    pub status: RowStatus,
    pub h: Option<BigInt>,
    pub sep: Option<BigFloat>,
    pub e: Option<f64>,
    pub e_pred: BigRational,
    pub ratio: Option<f64>,
    pub e_certified: Option<f64>,
    pub prec_bits: Option<u32>,
    pub elapsed_ms: Option<u128>,
}

pub const CSV_HEADER: [&str; 11] = [
    "d",
    "a",
    "status",
    "H",
    "sep",
    "e",
    "e_pred",
    "ratio",
    "e_certified",
    "prec_bits",
    "elapsed_ms",
];

impl ScanRow {
    fn failed(d: u32, a: u64, e_pred: BigRational, err: &Error) -> Self {
        ScanRow {
            d,
            a,
            status: match err {
                Error::NonConvergence(_) | Error::Unconverged => RowStatus::NonConvergence,
                Error::Threshold { .. } | Error::BracketNotFound { .. } => RowStatus::Threshold,
                _ => RowStatus::Error,
            },
            h: None,
            sep: None,
            e: None,
            e_pred,
            ratio: None,
            e_certified: None,
            prec_bits: None,
            elapsed_ms: None,
        }
    }

    pub fn ln_sep(&self) -> Option<f64> {
        self.sep.as_ref().map(BigFloat::ln_abs)
    }

    pub fn csv_record(&self) -> Vec<String> {
        let opt = |x: Option<String>| x.unwrap_or_default();
        vec![
            self.d.to_string(),
            self.a.to_string(),
            self.status.as_str().to_string(),
            opt(self.h.as_ref().map(BigInt::to_string)),
            opt(self.sep.as_ref().map(|s| s.to_sci_string(SEP_DIGITS))),
            opt(self.e.map(|e| sig_digits(e, 12))),
            rational_string(&self.e_pred),
            opt(self.ratio.map(|r| sig_digits(r, 12))),
            opt(self.e_certified.map(|e| sig_digits(e, 12))),
            opt(self.prec_bits.map(|p| p.to_string())),
            opt(self.elapsed_ms.map(|t| t.to_string())),
        ]
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub jobs: usize,
    pub timing: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: 1,
            timing: true,
        }
    }
}

fn family_row(d: u32, a: u64) -> ScanRow {
    let inst = match FamilyInstance::new(d, a) {
        Ok(inst) => inst,
        Err(e) => return ScanRow::failed(d, a, crate::family::exp_pred(d), &e),
    };
    let e_pred = inst.prediction.exp_pred.clone();
    match analyze(&inst) {
        Ok(r) => ScanRow {
            d,
            a,
            status: if r.e_certified.is_some() {
                RowStatus::Ok
            } else {
                RowStatus::Threshold
            },
            h: Some(r.h),
            sep: Some(r.sep),
            e: Some(r.e),
            e_pred,
            ratio: Some(r.ratio),
            e_certified: r.e_certified,
            prec_bits: Some(r.prec_bits),
            elapsed_ms: None,
        },
        Err(e) => ScanRow::failed(d, a, e_pred, &e),
    }
}

/// Predicted `sep` order of the comparison family, `a^(-(d+2)/2)`.
fn mignotte_hint(d: u32, a: u64) -> BigFloat {
    let bits = ((d + 2) as f64 / 2.0 * (a as f64).log2()).ceil() as i64;
    BigFloat::one().mul_pow2(-bits - 2)
}

/// Measured row for `x^d - 2(ax - 1)^2`; `e_pred` is `(d+2)/4`.
pub fn mignotte_row(d: u32, a: u64) -> ScanRow {
    let e_pred = BigRational::new(BigInt::from(d + 2), BigInt::from(4));
    let run = || -> Result<ScanRow> {
        let p = mignotte_family(d, a)?;
        let rs = adaptive_roots_with(&p, &mignotte_hint(d, a), &PrecisionPolicy::from_env())?;
        let (sep, _) = separation(&rs)?;
        let h = p.height()?;
        let e = exponent(&h, &sep)?;
        Ok(ScanRow {
            d,
            a,
            status: RowStatus::Ok,
            h: Some(h),
            sep: Some(sep),
            e: Some(e),
            e_pred: e_pred.clone(),
            ratio: None,
            e_certified: None,
            prec_bits: Some(rs.prec_bits),
            elapsed_ms: None,
        })
    };
    run().unwrap_or_else(|e| ScanRow::failed(d, a, e_pred.clone(), &e))
}

fn run_rows(
    d: u32,
    a_values: &[u64],
    opts: ScanOptions,
    row: fn(u32, u64) -> ScanRow,
) -> Result<Vec<ScanRow>> {
    if a_values.is_empty() {
        return Err(Error::InvalidParameter("no values of a to scan".into()));
    }
    if d < 3 {
        return Err(Error::DegreeTooSmall {
            degree: d as usize,
            min: 3,
        });
    }
    if let Some(&bad) = a_values.iter().find(|&&a| a < 1) {
        return Err(Error::InvalidParameter(format!("a = {bad} must be >= 1")));
    }
    let mut values = a_values.to_vec();
    values.sort_unstable();
    values.dedup();

    // Instant is unavailable on some targets, so it is only touched when timing.
    let timed = |a: u64| {
        let start = opts.timing.then(Instant::now);
        let mut r = row(d, a);
        r.elapsed_ms = start.map(|t| t.elapsed().as_millis());
        r
    };
    let jobs = opts.jobs.clamp(1, values.len());
    if jobs == 1 {
        return Ok(values.iter().map(|&a| timed(a)).collect());
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<ScanRow>>> = Mutex::new(vec![None; values.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= values.len() {
                    break;
                }
                let r = timed(values[i]);
                slots.lock().expect("scan worker panicked")[i] = Some(r);
            });
        }
    });
    Ok(slots
        .into_inner()
        .expect("scan worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect())
}

/// One row per distinct `a`, sorted by `a`. Per-row failures are recorded
/// in the row status.
pub fn scan(d: u32, a_values: &[u64], opts: ScanOptions) -> Result<Vec<ScanRow>> {
    run_rows(d, a_values, opts, family_row)
}

pub fn mignotte_scan(d: u32, a_values: &[u64], opts: ScanOptions) -> Result<Vec<ScanRow>> {
    run_rows(d, a_values, opts, mignotte_row)
}

/// `from, ceil(from * factor), ...` up to `to`.
pub fn geometric_sweep(from: u64, to: u64, factor: f64) -> Result<Vec<u64>> {
    if from < 1 || to < from {
        return Err(Error::InvalidParameter(format!("bad range {from}..{to}")));
    }
    if !(factor.is_finite() && factor > 1.0) {
        return Err(Error::InvalidParameter(format!(
            "factor {factor} must exceed 1"
        )));
    }
    let mut out = vec![from];
    let mut a = from;
    loop {
        let next = ((a as f64) * factor).ceil() as u64;
        let next = next.max(a + 1);
        if next > to {
            return Ok(out);
        }
        out.push(next);
        a = next;
    }
}

/// Least-squares slope of `ln sep` against `ln a` over rows with a value.
pub fn slope_fit(rows: &[ScanRow]) -> Result<f64> {
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| r.ln_sep().map(|y| ((r.a as f64).ln(), y)))
        .collect();
    if pts.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "{} usable rows, need 2",
            pts.len()
        )));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx <= 0.0 {
        return Err(Error::InsufficientData("no variance in ln a".into()));
    }
    Ok(sxy / sxx)
}

pub fn write_csv<W: std::io::Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::InvalidParameter(format!("csv output failed: {e}"));
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record(r.csv_record()).map_err(io)?;
    }
    w.flush()
        .map_err(|e| Error::InvalidParameter(format!("csv output failed: {e}")))?;
    Ok(())
}
