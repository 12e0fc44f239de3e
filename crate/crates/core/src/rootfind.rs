//! Complex roots by simultaneous Aberth–Ehrlich iteration at arbitrary
//! precision, and exact-rational isolation of the close real pair.
//!
//! Floating results never certify anything on their own. The close pair is
//! certified separately by [`isolate_close_pair`], which only uses exact
//! sign evaluations of the integer polynomial at rational points.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bigfloat::{BigComplex, BigFloat, Round};
use crate::error::{Error, Result};
use crate::family::FamilyInstance;
use crate::numfmt::ln_bigint;
use crate::poly::IntPolynomial;

/// Fixed angular offset of the initial Aberth points, in radians.
const INITIAL_ANGLE_OFFSET: f64 = 0.4;
/// Precision used for radii, norms and other bookkeeping quantities.
const AUX_PREC: u32 = 64;
/// Error radii must be below `hint / RADIUS_FACTOR` for an adaptive solve
/// to be accepted.
const RADIUS_FACTOR: i64 = 1_000_000;
/// Default number of precision doublings in the adaptive drivers.
pub const MAX_ESCALATIONS: u32 = 4;
/// Environment variable capping the working precision of adaptive solves.
pub const PREC_CAP_ENV: &str = "POLYSEP_PREC_CAP";

/// Approximate roots with per-root inclusion radii.
#[derive(Clone, Debug)]
pub struct RootSet {
    /// Sorted by (real part, imaginary part).
    pub roots: Vec<BigComplex>,
    pub error_radii: Vec<BigFloat>,
    pub prec_bits: u32,
    /// The disks `(root, 3 * radius)` are pairwise disjoint.
    pub converged: bool,
    pub iterations: usize,
}

impl RootSet {
    pub fn max_radius(&self) -> BigFloat {
        self.error_radii
            .iter()
            .max()
            .cloned()
            .unwrap_or_else(BigFloat::zero)
    }

    pub fn to_json(&self) -> RootSetJson {
        let digits = BigFloat::digits_for_prec(self.prec_bits);
        RootSetJson {
            prec_bits: self.prec_bits,
            roots: self
                .roots
                .iter()
                .zip(&self.error_radii)
                .map(|(z, r)| RootJson {
                    re: z.re.to_sci_string(digits),
                    im: z.im.to_sci_string(digits),
                    radius: r.to_sci_string(6),
                })
                .collect(),
            converged: self.converged,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSetJson {
    pub prec_bits: u32,
    pub roots: Vec<RootJson>,
    pub converged: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootJson {
    pub re: String,
    pub im: String,
    pub radius: String,
}

/// Precision escalation limits for the adaptive drivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrecisionPolicy {
    pub max_escalations: u32,
    pub cap_bits: Option<u32>,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            max_escalations: MAX_ESCALATIONS,
            cap_bits: None,
        }
    }
}

impl PrecisionPolicy {
    /// Default policy, capped by `POLYSEP_PREC_CAP` when set.
    pub fn from_env() -> Self {
        let cap_bits = std::env::var(PREC_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok());
        PrecisionPolicy {
            cap_bits,
            ..PrecisionPolicy::default()
        }
    }
}

/// `mant / 2^shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub shift: u32,
}

impl Dyadic {
    /// A dyadic rational inside `[lo, hi]`, using the fewest bits that fit.
    pub fn inside(lo: &BigRational, hi: &BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        if lo == hi && lo.denom().is_one() {
            return Dyadic {
                mant: lo.numer().clone(),
                shift: 0,
            };
        }
        let width = hi - lo;
        let mut shift = 0u32;
        let mut step = BigRational::one();
        while step > width {
            shift += 1;
            step /= BigRational::from_integer(BigInt::from(2));
        }
        loop {
            let scale = BigRational::from_integer(BigInt::one() << (shift as usize));
            let mant = (lo * &scale).ceil().to_integer();
            let cand = BigRational::new(mant.clone(), BigInt::one() << (shift as usize));
            if &cand <= hi {
                return Dyadic { mant, shift };
            }
            shift += 1;
        }
    }

    /// Nearest dyadic with `shift` fractional bits.
    pub fn nearest(q: &BigRational, shift: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::one() << (shift as usize));
        Dyadic {
            mant: (q * scale).round().to_integer(),
            shift,
        }
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << (self.shift as usize))
    }

    pub fn to_bigfloat(&self) -> BigFloat {
        BigFloat::from_parts(self.mant.clone(), -(self.shift as i64))
    }
}

/// Horner evaluation of `p` and `p'` together with a bound on the rounding
/// error of the `p` value.
struct Evaluator {
    coeffs: Vec<BigFloat>,
    abs_coeffs: Vec<BigFloat>,
    prec: u32,
}

struct Evaluation {
    value: BigComplex,
    deriv: BigComplex,
    /// Upper bound on `|computed p(z) - p(z)|`.
    err: BigFloat,
}

impl Evaluator {
    fn new(p: &IntPolynomial, prec: u32) -> Self {
        let coeffs: Vec<BigFloat> = p
            .coeffs()
            .iter()
            .map(|c| BigFloat::from_bigint(c.clone()).round(prec, Round::Nearest))
            .collect();
        let abs_coeffs = p
            .coeffs()
            .iter()
            .map(|c| BigFloat::from_bigint(c.abs()).round(AUX_PREC, Round::Up))
            .collect();
        Evaluator {
            coeffs,
            abs_coeffs,
            prec,
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn eval(&self, z: &BigComplex) -> Evaluation {
        let prec = self.prec;
        let n = self.degree();
        let mut b = BigComplex::from_real(self.coeffs[n].clone());
        let mut db = BigComplex::zero();
        for c in self.coeffs[..n].iter().rev() {
            db = db.mul(z, prec).add(&b, prec);
            b = b.mul(z, prec);
            b = BigComplex::new(b.re.add(c, prec), b.im);
        }
        let zabs = z.abs(AUX_PREC).round(AUX_PREC, Round::Up);
        let mut s = self.abs_coeffs[n].clone();
        for c in self.abs_coeffs[..n].iter().rev() {
            s = s.mul(&zabs, AUX_PREC).add(c, AUX_PREC);
        }
        let gamma = BigFloat::from_i64(8 * (n as i64 + 1)).mul_pow2(-(prec as i64));
        Evaluation {
            value: b,
            deriv: db,
            err: s.mul(&gamma, AUX_PREC),
        }
    }
}

/// Inclusion radius `deg(p) * |p(z) / p'(z)|` evaluated at `prec_bits`.
/// `None` stands for an infinite radius: `p'(z)` vanished at the working
/// precision.
pub fn error_radius(p: &IntPolynomial, z: &BigComplex, prec_bits: u32) -> Result<Option<BigFloat>> {
    let n = p.degree()?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    let ev = Evaluator::new(p, prec_bits).eval(z);
    if ev.deriv.is_zero() {
        return Ok(None);
    }
    let ratio = ev
        .value
        .abs(AUX_PREC)
        .div(&ev.deriv.abs(AUX_PREC), AUX_PREC);
    Ok(Some(ratio.mul(&BigFloat::from_i64(n as i64), AUX_PREC)))
}

fn log2_abs_c(z: &BigComplex) -> f64 {
    if z.is_zero() {
        f64::NEG_INFINITY
    } else {
        0.5 * z.norm_sqr(AUX_PREC).log2_abs()
    }
}

fn max_iterations(prec: u32) -> usize {
    1000 + 2 * prec as usize
}

/// Aberth iteration on a polynomial of degree >= 1 without the square-free
/// check. Exact zero roots are split off first.
fn aberth_solve(p: &IntPolynomial, prec: u32) -> RootSet {
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let reduced = IntPolynomial::new(p.coeffs()[zeros..].to_vec());
    let n = reduced.degree().expect("nonzero polynomial");

    let mut roots: Vec<BigComplex> = vec![BigComplex::zero(); zeros];
    let mut radii: Vec<Option<BigFloat>> = vec![Some(BigFloat::zero()); zeros];
    let mut iterations = 0;

    if n > 0 {
        let ev = Evaluator::new(&reduced, prec);
        let mut z = initial_points(&reduced, prec);
        let mut frozen = vec![false; n];
        let one = BigComplex::from_real(BigFloat::one());
        let stop = prec as f64 - 8.0;

        while iterations < max_iterations(prec) {
            iterations += 1;
            let mut active = false;
            for i in 0..n {
                if frozen[i] {
                    continue;
                }
                let e = ev.eval(&z[i]);
                if e.value.is_zero() || log2_abs_c(&e.value) <= e.err.log2_abs() {
                    frozen[i] = true;
                    continue;
                }
                active = true;
                if e.deriv.is_zero() {
                    z[i] = nudge(&z[i], prec);
                    continue;
                }
                let newton = e.value.div(&e.deriv, prec);
                let mut repulsion = BigComplex::zero();
                let mut collided = false;
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let diff = z[i].sub(&z[j], prec);
                    if diff.is_zero() {
                        collided = true;
                        break;
                    }
                    repulsion = repulsion.add(&diff.recip(prec), prec);
                }
                if collided {
                    z[i] = nudge(&z[i], prec);
                    continue;
                }
                let denom = one.sub(&newton.mul(&repulsion, prec), prec);
                let w = if denom.is_zero() {
                    newton
                } else {
                    newton.div(&denom, prec)
                };
                z[i] = z[i].sub(&w, prec);
                if log2_abs_c(&w) <= log2_abs_c(&z[i]) - stop {
                    frozen[i] = true;
                }
            }
            if !active {
                break;
            }
        }

        let nf = BigFloat::from_i64(n as i64);
        for zi in &z {
            let e = ev.eval(zi);
            let r = if e.deriv.is_zero() {
                None
            } else {
                let num = e.value.abs(AUX_PREC).add(&e.err, AUX_PREC);
                Some(num.div(&e.deriv.abs(AUX_PREC), AUX_PREC).mul(&nf, AUX_PREC))
            };
            roots.push(zi.clone());
            radii.push(r);
        }
    }

    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&i, &j| roots[i].lex_cmp(&roots[j]));
    let roots: Vec<BigComplex> = order.iter().map(|&i| roots[i].clone()).collect();
    let radii: Vec<Option<BigFloat>> = order.iter().map(|&i| radii[i].clone()).collect();

    let finite = radii.iter().all(Option::is_some);
    let error_radii: Vec<BigFloat> = radii
        .into_iter()
        .map(|r| r.unwrap_or_else(|| BigFloat::one().mul_pow2(1 << 40)))
        .collect();
    let converged = finite && disks_disjoint(&roots, &error_radii);
    RootSet {
        roots,
        error_radii,
        prec_bits: prec,
        converged,
        iterations,
    }
}

/// Starting points on the circles given by the upper convex hull of
/// `(i, log2 |c_i|)`: an edge from `i` to `j` contributes `j - i` points on
/// the circle of radius `(|c_i| / |c_j|)^(1/(j-i))`. Angles are equally
/// spaced per circle, offset by `2 pi i / n` and a fixed 0.4 rad.
fn initial_points(p: &IntPolynomial, prec: u32) -> Vec<BigComplex> {
    let coeffs = p.coeffs();
    let n = coeffs.len() - 1;
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, ln_bigint(c) / std::f64::consts::LN_2))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // drop b unless it lies strictly above the chord from a to pt
            let cross =
                (b.0 as f64 - a.0 as f64) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let ((i, li), (j, lj)) = (w[0], w[1]);
        let m = j - i;
        let log_r = (li - lj) / m as f64;
        let whole = log_r.floor();
        let radius = BigFloat::from_f64((log_r - whole).exp2()).mul_pow2(whole as i64);
        for k in 0..m {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 / m as f64 + i as f64 / n as f64)
                + INITIAL_ANGLE_OFFSET;
            out.push(BigComplex::from_f64(theta.cos(), theta.sin()).mul_real(&radius, prec));
        }
    }
    out
}

fn nudge(z: &BigComplex, prec: u32) -> BigComplex {
    let scale = if z.is_zero() {
        BigFloat::one().mul_pow2(-(prec as i64) / 2)
    } else {
        z.abs(AUX_PREC).mul_pow2(-(prec as i64) / 2)
    };
    z.add(&BigComplex::new(scale.clone(), scale.mul_pow2(-1)), prec)
}

fn disks_disjoint(roots: &[BigComplex], radii: &[BigFloat]) -> bool {
    let three = BigFloat::from_i64(3);
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let dist = roots[i].sub_exact(&roots[j]).abs(AUX_PREC);
            let reach = radii[i].add(&radii[j], AUX_PREC).mul(&three, AUX_PREC);
            if dist <= reach {
                return false;
            }
        }
    }
    true
}

fn check_square_free(p: &IntPolynomial) -> Result<usize> {
    let n = p.degree()?;
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, min: 1 });
    }
    if n >= 2 && p.discriminant()?.is_zero() {
        return Err(Error::NotSquareFree);
    }
    Ok(n)
}

/// All complex roots of a square-free `p` at fixed working precision.
pub fn aberth_all_roots(p: &IntPolynomial, prec_bits: u32) -> Result<RootSet> {
    if prec_bits < 32 {
        return Err(Error::InvalidParameter(format!(
            "precision {prec_bits} < 32 bits"
        )));
    }
    check_square_free(p)?;
    Ok(aberth_solve(p, prec_bits))
}

fn ceil_log2_int(n: &BigInt) -> u32 {
    let b = n.bits() as u32;
    if b == 0 {
        0
    } else if (n.abs() - BigInt::one()).bits() < n.bits() {
        // exact power of two
        b - 1
    } else {
        b
    }
}

fn accept(rs: &RootSet, hint: &BigFloat) -> bool {
    rs.converged
        && rs
            .max_radius()
            .mul(&BigFloat::from_i64(RADIUS_FACTOR), AUX_PREC)
            < *hint
}

fn escalate(
    prec0: u32,
    hint: &BigFloat,
    policy: &PrecisionPolicy,
    mut solve: impl FnMut(u32) -> RootSet,
) -> Result<RootSet> {
    let mut prec = prec0;
    let mut last: Option<RootSet> = None;
    for _ in 0..=policy.max_escalations {
        if policy.cap_bits.is_some_and(|cap| prec > cap) {
            break;
        }
        let rs = solve(prec);
        if accept(&rs, hint) {
            return Ok(rs);
        }
        last = Some(rs);
        prec = prec.saturating_mul(2);
    }
    let detail = match last {
        Some(rs) => format!(
            "last attempt at {} bits: converged={}, max radius {} against hint {} ({} iterations)",
            rs.prec_bits,
            rs.converged,
            rs.max_radius().to_sci_string(4),
            hint.to_sci_string(4),
            rs.iterations
        ),
        None => format!("initial precision {prec0} bits already exceeds the cap"),
    };
    Err(Error::NonConvergence(detail))
}

/// Initial precision `64 + 2 ceil(log2 H) + 2 ceil(-log2 hint)` bits.
pub fn initial_precision(p: &IntPolynomial, sep_scale_hint: &BigFloat) -> Result<u32> {
    let h = p.height()?;
    let hint_bits = (-sep_scale_hint.log2_abs()).ceil().max(0.0) as u32;
    Ok(64 + 2 * ceil_log2_int(&h) + 2 * hint_bits)
}

/// Roots of `p`, doubling precision until the disks are disjoint and every
/// radius is below `sep_scale_hint / 10^6`.
pub fn adaptive_roots(p: &IntPolynomial, sep_scale_hint: &BigFloat) -> Result<RootSet> {
    adaptive_roots_with(p, sep_scale_hint, &PrecisionPolicy::from_env())
}

pub fn adaptive_roots_with(
    p: &IntPolynomial,
    sep_scale_hint: &BigFloat,
    policy: &PrecisionPolicy,
) -> Result<RootSet> {
    if sep_scale_hint.signum() <= 0 {
        return Err(Error::InvalidParameter(
            "separation hint must be positive".into(),
        ));
    }
    check_square_free(p)?;
    let prec0 = initial_precision(p, sep_scale_hint)?;
    escalate(prec0, sep_scale_hint, policy, |prec| aberth_solve(p, prec))
}

/// Like [`adaptive_roots_with`], but iterates on the exact Taylor shift of
/// `p` about a dyadic `center`, so values near a root cluster at `center`
/// are computed without cancellation. The initial precision is
/// `64 + ceil(log2 H) + ceil(-log2 hint)`: enough to resolve every root,
/// all of modulus below `1 + H`, to the hint, with no extra allowance for
/// cancellation at the cluster.
pub fn adaptive_roots_about(
    p: &IntPolynomial,
    center: &Dyadic,
    sep_scale_hint: &BigFloat,
    policy: &PrecisionPolicy,
) -> Result<RootSet> {
    if sep_scale_hint.signum() <= 0 {
        return Err(Error::InvalidParameter(
            "separation hint must be positive".into(),
        ));
    }
    check_square_free(p)?;
    let hint_bits = (-sep_scale_hint.log2_abs()).ceil().max(0.0) as u32;
    let prec0 = 64 + ceil_log2_int(&p.height()?) + hint_bits;
    let shifted = p.dyadic_shift(&center.mant, center.shift);
    let m = BigFloat::from_bigint(center.mant.clone());
    let k = center.shift as i64;
    escalate(prec0, sep_scale_hint, policy, |prec| {
        let rs = aberth_solve(&shifted, prec);
        RootSet {
            roots: rs
                .roots
                .iter()
                .map(|z| BigComplex::new(z.re.add_exact(&m).mul_pow2(-k), z.im.mul_pow2(-k)))
                .collect(),
            error_radii: rs.error_radii.iter().map(|r| r.mul_pow2(-k)).collect(),
            ..rs
        }
    })
}

/// Interval with an exact sign change of the target polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealBracket {
    pub lo: BigRational,
    pub hi: BigRational,
    pub sign_lo: i8,
    pub sign_hi: i8,
}

impl RealBracket {
    /// Bracket `[lo, hi]` for `p`, or `None` when the exact signs at the
    /// endpoints do not differ.
    pub fn new(p: &IntPolynomial, lo: BigRational, hi: BigRational) -> Option<Self> {
        if lo >= hi {
            return None;
        }
        let (sign_lo, sign_hi) = (p.sign_at(&lo), p.sign_at(&hi));
        (sign_lo * sign_hi < 0).then_some(RealBracket {
            lo,
            hi,
            sign_lo,
            sign_hi,
        })
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// A bisection midpoint was an exact root: `lo == hi` and both signs 0.
    pub fn is_exact_root(&self) -> bool {
        self.lo == self.hi && self.sign_lo == 0
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Re-evaluates both endpoint signs exactly.
    pub fn verify(&self, p: &IntPolynomial) -> bool {
        if self.is_exact_root() {
            return p.sign_at(&self.lo) == 0;
        }
        self.lo < self.hi
            && self.sign_lo * self.sign_hi < 0
            && p.sign_at(&self.lo) == self.sign_lo
            && p.sign_at(&self.hi) == self.sign_hi
    }
}

/// Sign-preserving bisection with exact rational evaluation until the
/// bracket is at most `target_width` wide.
pub fn bisect_bracket(
    p: &IntPolynomial,
    b: &RealBracket,
    target_width: &BigRational,
) -> RealBracket {
    let mut b = b.clone();
    let two = BigRational::from_integer(BigInt::from(2));
    while !b.is_exact_root() && b.width() > *target_width {
        let mid = (&b.lo + &b.hi) / &two;
        let s = p.sign_at(&mid);
        match s.cmp(&0) {
            Ordering::Equal => {
                return RealBracket {
                    lo: mid.clone(),
                    hi: mid,
                    sign_lo: 0,
                    sign_hi: 0,
                }
            }
            _ if s == b.sign_lo => b.lo = mid,
            _ => b.hi = mid,
        }
    }
    b
}

const PROXY_BITS: u32 = 140;

/// Brackets the two close real roots of `P_{d,a}` around
/// `x0 -/+ delta_0 h` with `epsilon = epsilon_frac * delta_0`, using exact
/// signs at rational proxies of the four test points
/// `x0 +/- (delta_0 +/- epsilon) h`. On a failed sign pattern the search is
/// retried once with `epsilon_frac = 0.01`.
pub fn isolate_close_pair(
    inst: &FamilyInstance,
    epsilon_frac: f64,
    target_width: Option<&BigRational>,
) -> Result<(RealBracket, RealBracket)> {
    if !(epsilon_frac > 0.0 && epsilon_frac < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "epsilon_frac {epsilon_frac} must lie in (0, 1)"
        )));
    }
    let (lo, hi) = inst.refined_x0()?;
    let x0 = (lo + hi) / BigRational::from_integer(BigInt::from(2));
    let first = try_pattern(inst, &x0, epsilon_frac);
    let (left, right) = match first {
        Ok(pair) => pair,
        Err(_) if epsilon_frac > 0.01 => try_pattern(inst, &x0, 0.01)?,
        Err(e) => return Err(e),
    };
    Ok(match target_width {
        Some(w) => (
            bisect_bracket(&inst.poly, &left, w),
            bisect_bracket(&inst.poly, &right, w),
        ),
        None => (left, right),
    })
}

fn try_pattern(
    inst: &FamilyInstance,
    x0: &BigRational,
    epsilon_frac: f64,
) -> Result<(RealBracket, RealBracket)> {
    let pred = &inst.prediction;
    let prec = pred.prec_bits.max(128);
    let dh = pred.delta0.mul(&pred.h.value(prec + 8), prec + 8);
    let eps = BigFloat::from_f64(epsilon_frac);
    let one = BigFloat::one();
    let outer = dh
        .mul(&one.add(&eps, prec + 8), prec + 8)
        .round(PROXY_BITS, Round::Up)
        .to_rational();
    let inner = dh
        .mul(&one.sub(&eps, prec + 8), prec + 8)
        .round(PROXY_BITS, Round::Down)
        .to_rational();
    let pts = [x0 - &outer, x0 - &inner, x0 + &inner, x0 + &outer];
    let signs = [
        inst.poly.sign_at(&pts[0]),
        inst.poly.sign_at(&pts[1]),
        inst.poly.sign_at(&pts[2]),
        inst.poly.sign_at(&pts[3]),
    ];
    if signs != [1, -1, -1, 1] {
        return Err(Error::Threshold {
            d: inst.d,
            a: inst.a,
            epsilon_frac,
            signs,
        });
    }
    let [p0, p1, p2, p3] = pts;
    Ok((
        RealBracket {
            lo: p0,
            hi: p1,
            sign_lo: 1,
            sign_hi: -1,
        },
        RealBracket {
            lo: p2,
            hi: p3,
            sign_lo: -1,
            sign_hi: 1,
        },
    ))
}

/// Dyadic point inside the refined bracket of `x0`, used as the expansion
/// center for [`adaptive_roots_about`].
pub fn family_center(inst: &FamilyInstance) -> Result<Dyadic> {
    let (lo, hi) = inst.refined_x0()?;
    Ok(Dyadic::inside(&lo, &hi))
}
