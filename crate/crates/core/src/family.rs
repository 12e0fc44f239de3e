//! The Catalan-number polynomial families and their close-pair predictions.
//!
//! For `d >= 3` and `a >= 1`, with `c_i` the Catalan numbers and
//!
//! ```text
//! g(a, x) = 2 c_0 a x^(d-1) + 2 c_1 a^2 x^(d-2) + ... + 2 c_(d-2) a^(d-1) x
//! ```
//!
//! the family member is `P_{d,a} = (1 + g)^2 + x^d (4 a x^(d-1) - 2 (1 + g))`.
//! It is built here twice: literally from the four-block expansion, where the
//! Catalan recurrence makes every coefficient above `x^d` cancel, and from the
//! compact form above. The two must agree coefficientwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bigfloat::{BigFloat, Round};
use crate::error::{Error, Result};
use crate::numfmt::rational_string;
use crate::poly::{IntPolynomial, PolyJson};

/// Working precision for the real-valued parts of a prediction.
pub const DEFAULT_PREDICTION_PREC: u32 = 128;

/// Exact Catalan number `binomial(2i, i) / (i + 1)`.
pub fn catalan(i: i64) -> Result<BigInt> {
    if i < 0 {
        return Err(Error::InvalidParameter(format!(
            "catalan index {i} is negative"
        )));
    }
    Ok(catalan_u(i as usize))
}

pub(crate) fn catalan_u(i: usize) -> BigInt {
    // binomial(2i, i) by the multiplicative formula; every prefix is integral.
    let mut b = BigInt::one();
    for k in 0..i {
        b = b * BigInt::from(2 * i - k) / BigInt::from(k + 1);
    }
    b / BigInt::from(i + 1)
}

fn check_params(d: u32, a: u64) -> Result<()> {
    if d < 3 {
        return Err(Error::InvalidParameter(format!(
            "degree d={d} must be at least 3"
        )));
    }
    if a < 1 {
        return Err(Error::InvalidParameter(
            "parameter a must be at least 1".into(),
        ));
    }
    Ok(())
}

fn pow(a: u64, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(a), e)
}

/// `g(a, x)`: zero constant term, coefficient of `x^(d-1-k)` is
/// `2 c_k a^(k+1)`.
pub fn g_poly(d: u32, a: u64) -> Result<IntPolynomial> {
    check_params(d, a)?;
    let d = d as usize;
    let mut coeffs = vec![BigInt::zero(); d];
    for k in 0..=d - 2 {
        coeffs[d - 1 - k] = BigInt::from(2) * catalan_u(k) * pow(a, k + 1);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Dense sum of the four defining blocks, `2d - 1` coefficients, before any
/// trailing zeros are stripped.
pub fn expanded_blocks(d: u32, a: u64) -> Result<Vec<BigInt>> {
    let g = g_poly(d, a)?;
    let d = d as usize;
    let mut out = vec![BigInt::zero(); 2 * d - 1];
    let square = g.mul(&g);
    for (i, c) in square.coeffs().iter().enumerate() {
        out[i] += c;
    }
    for j in 1..=d - 2 {
        let t = BigInt::from(4) * catalan_u(j) * pow(a, j + 1);
        out[2 * d - 1 - j] -= &t;
        out[d - 1 - j] += &t;
    }
    out[d - 1] += BigInt::from(4) * BigInt::from(a);
    out[d] -= BigInt::from(2);
    out[0] += BigInt::one();
    Ok(out)
}

/// `P_{d,a}` assembled literally from its four blocks.
///
/// Panics if a coefficient above `x^d` survives; that would be a bug in the
/// construction, not a property of the input.
pub fn construct_expanded(d: u32, a: u64) -> Result<IntPolynomial> {
    let dense = expanded_blocks(d, a)?;
    let d = d as usize;
    assert!(
        dense[d + 1..].iter().all(Zero::is_zero),
        "degree collapse failed: nonzero coefficient above x^{d}"
    );
    let p = IntPolynomial::new(dense);
    assert_eq!(
        p.degree().ok(),
        Some(d),
        "leading coefficient of P vanished"
    );
    Ok(p)
}

/// `P_{d,a} = (1 + g)^2 + x^d (4 a x^(d-1) - 2 (1 + g))`.
pub fn construct_compact(d: u32, a: u64) -> Result<IntPolynomial> {
    let g = g_poly(d, a)?;
    let one_g = g.add(&IntPolynomial::from_i64s(&[1]));
    let tail = IntPolynomial::monomial(BigInt::from(4) * BigInt::from(a), d as usize - 1)
        .add(&one_g.scale(&BigInt::from(-2)));
    Ok(one_g.mul(&one_g).add(&tail.shift_up(d as usize)))
}

/// `4 c_(d-2)^2 a^(2d-2) + 4 c_(d-3) a^(d-2)`, the coefficient of `x^2`.
pub fn height_formula(d: u32, a: u64) -> Result<BigInt> {
    check_params(d, a)?;
    let d = d as usize;
    let c = catalan_u(d - 2);
    Ok(BigInt::from(4) * &c * &c * pow(a, 2 * d - 2)
        + BigInt::from(4) * catalan_u(d - 3) * pow(a, d - 2))
}

/// `4 c_(d-1) a^d - 2`.
pub fn leading_formula(d: u32, a: u64) -> Result<BigInt> {
    check_params(d, a)?;
    Ok(BigInt::from(4) * catalan_u(d as usize - 1) * pow(a, d as usize) - BigInt::from(2))
}

/// `x^d - 2 (a x - 1)^2`, the older comparison family of height `2 a^2`.
pub fn mignotte_family(d: u32, a: u64) -> Result<IntPolynomial> {
    check_params(d, a)?;
    let lin = IntPolynomial::new(vec![BigInt::from(-1), BigInt::from(a)]);
    Ok(IntPolynomial::monomial(BigInt::one(), d as usize)
        .add(&lin.mul(&lin).scale(&BigInt::from(-2))))
}

/// `a^(num/den)` with `den` in {1, 2}; the scale of the close-root splitting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HScale {
    pub a: u64,
    pub num: i64,
    pub den: i64,
}

impl HScale {
    /// `a^(-d^2 + d/2 + 1)`, i.e. exponent `(2 - 2d^2 + d) / 2` in lowest
    /// terms.
    pub fn for_family(d: u32, a: u64) -> Self {
        let d = d as i64;
        let num = 2 - 2 * d * d + d;
        if num % 2 == 0 {
            HScale {
                a,
                num: num / 2,
                den: 1,
            }
        } else {
            HScale { a, num, den: 2 }
        }
    }

    pub fn exponent(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn value(&self, prec: u32) -> BigFloat {
        let p = prec + 16;
        let base = BigFloat::from_bigint(BigInt::from(self.a));
        let (int_part, half) = if self.den == 1 {
            (self.num, false)
        } else {
            // num odd: a^(num/2) = a^((num-1)/2) * sqrt(a)
            ((self.num - 1) / 2, true)
        };
        let mut v = if int_part >= 0 {
            BigFloat::from_bigint(pow(self.a, int_part as usize))
        } else {
            BigFloat::one().div(&BigFloat::from_bigint(pow(self.a, (-int_part) as usize)), p)
        };
        if half {
            v = v.mul(&base.sqrt(p), p);
        }
        v.round(prec, Round::Nearest)
    }
}

/// `delta_0 = 1 / (2^(d - 1/2) c_(d-2)^(d + 1/2)) = sqrt(2 / c) / (2c)^d`.
pub fn delta0(d: u32, prec: u32) -> BigFloat {
    let p = prec + 16;
    let c = catalan_u(d as usize - 2);
    let two_over_c = BigFloat::from_i64(2).div(&BigFloat::from_bigint(c.clone()), p);
    let denom = BigFloat::from_bigint(num_traits::pow(BigInt::from(2) * &c, d as usize));
    two_over_c
        .sqrt(p)
        .div(&denom, p)
        .round(prec, Round::Nearest)
}

/// `(2d^2 - d - 2) / (4(d - 1))`.
pub fn exp_pred(d: u32) -> BigRational {
    let d = d as i64;
    BigRational::new(BigInt::from(2 * d * d - d - 2), BigInt::from(4 * (d - 1)))
}

/// Predicted close-pair geometry for `P_{d,a}`.
#[derive(Clone, Debug)]
pub struct ClosePairPrediction {
    /// Leading-order double root of `(1 + g)^2`, `-a^(1-d) / (2 c_(d-2))`.
    /// [`refine_x0`] brackets the exact root of `1 + g`.
    pub x0: BigRational,
    pub delta0: BigFloat,
    pub h: HScale,
    /// `2 delta_0 h`.
    pub sep_pred: BigFloat,
    pub exp_pred: BigRational,
    pub exp_pred_monic: BigRational,
    pub prec_bits: u32,
}

pub fn predict(d: u32, a: u64) -> Result<ClosePairPrediction> {
    predict_with_prec(d, a, DEFAULT_PREDICTION_PREC)
}

pub fn predict_with_prec(d: u32, a: u64, prec: u32) -> Result<ClosePairPrediction> {
    check_params(d, a)?;
    if prec < 64 {
        return Err(Error::InvalidParameter(format!(
            "prediction precision {prec} < 64 bits"
        )));
    }
    let c = catalan_u(d as usize - 2);
    let x0 = -BigRational::new(BigInt::one(), BigInt::from(2) * &c * pow(a, d as usize - 1));
    let delta0 = delta0(d, prec);
    let h = HScale::for_family(d, a);
    let sep_pred = delta0.mul(&h.value(prec + 8), prec).mul_pow2(1);
    let exp_pred = exp_pred(d);
    let exp_pred_monic = &exp_pred - BigRational::one();
    Ok(ClosePairPrediction {
        x0,
        delta0,
        h,
        sep_pred,
        exp_pred,
        exp_pred_monic,
        prec_bits: prec,
    })
}

/// Bisect the sign change of `1 + g` on `(-1/(c_(d-2) a^(d-1)), 0)` with
/// exact rational evaluation until the bracket is at most `target_width`
/// wide. Returns `(lo, hi)` with `1 + g(lo) < 0 < 1 + g(hi)`.
pub fn refine_x0(d: u32, a: u64, target_width: &BigRational) -> Result<(BigRational, BigRational)> {
    check_params(d, a)?;
    if !target_width.is_positive() {
        return Err(Error::InvalidParameter(
            "target width must be positive".into(),
        ));
    }
    let one_g = g_poly(d, a)?.add(&IntPolynomial::from_i64s(&[1]));
    let c = catalan_u(d as usize - 2);
    let mut lo = -BigRational::new(BigInt::one(), c * pow(a, d as usize - 1));
    let mut hi = BigRational::zero();
    if one_g.sign_at(&lo) >= 0 {
        return Err(Error::BracketNotFound { d, a });
    }
    let two = BigRational::from_integer(BigInt::from(2));
    while &hi - &lo > *target_width {
        let mid = (&lo + &hi) / &two;
        match one_g.sign_at(&mid) {
            0 => return Ok((mid.clone(), mid)),
            s if s < 0 => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((lo, hi))
}

/// One member `P_{d,a}` with its prediction.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub d: u32,
    pub a: u64,
    pub poly: IntPolynomial,
    pub prediction: ClosePairPrediction,
}

impl FamilyInstance {
    /// Builds `P_{d,a}` along both construction paths and checks they agree.
    pub fn new(d: u32, a: u64) -> Result<Self> {
        let poly = construct_compact(d, a)?;
        let expanded = construct_expanded(d, a)?;
        assert_eq!(
            poly, expanded,
            "compact and expanded constructions disagree at d={d}, a={a}"
        );
        Ok(FamilyInstance {
            d,
            a,
            poly,
            prediction: predict(d, a)?,
        })
    }

    pub fn height(&self) -> BigInt {
        self.poly.height().expect("family polynomials are nonzero")
    }

    /// Bracket for the root of `1 + g` no wider than `delta_0 h / 64`.
    pub fn refined_x0(&self) -> Result<(BigRational, BigRational)> {
        let p = &self.prediction;
        let scale = p
            .delta0
            .mul(&p.h.value(p.prec_bits), p.prec_bits)
            .mul_pow2(-6);
        let width = scale.round(64, Round::Down).to_rational();
        refine_x0(self.d, self.a, &width)
    }

    /// JSON form: the polynomial object plus `d`, `a`, `height` and a
    /// `prediction` sub-object.
    pub fn to_json(&self) -> FamilyJson {
        let p = &self.prediction;
        let x0_mid = match self.refined_x0() {
            Ok((lo, hi)) => (lo + hi) / BigRational::from_integer(BigInt::from(2)),
            Err(_) => p.x0.clone(),
        };
        let digits = BigFloat::digits_for_prec(p.prec_bits);
        FamilyJson {
            d: self.d,
            a: self.a,
            height: self.height().to_string(),
            poly: self.poly.clone().into(),
            prediction: PredictionJson {
                x0_mid: BigFloat::from_rational(&x0_mid, p.prec_bits, Round::Nearest)
                    .to_sci_string(digits),
                delta0: p.delta0.to_sci_string(digits),
                h_exponent: rational_string(&p.h.exponent()),
                sep_pred: p.sep_pred.to_sci_string(digits),
                exp_pred: rational_string(&p.exp_pred),
                exp_pred_monic: rational_string(&p.exp_pred_monic),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyJson {
    pub d: u32,
    pub a: u64,
    #[serde(flatten)]
    pub poly: PolyJson,
    pub height: String,
    pub prediction: PredictionJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictionJson {
    pub x0_mid: String,
    pub delta0: String,
    pub h_exponent: String,
    pub sep_pred: String,
    pub exp_pred: String,
    pub exp_pred_monic: String,
}

/// Smallest `a` at which prediction-accuracy assertions are made for
/// degree `d`. With `epsilon_frac = 0.1` the `+ - - +` sign pattern was
/// observed from `a = 10` on for every `d` in 3..=12; smaller `a` work for
/// larger `d` but are not asserted.
pub fn a_min(d: u32) -> u64 {
    const TABLE: [(u32, u64); 10] = [
        (3, 10),
        (4, 10),
        (5, 10),
        (6, 10),
        (7, 10),
        (8, 10),
        (9, 10),
        (10, 10),
        (11, 10),
        (12, 10),
    ];
    TABLE
        .iter()
        .find(|(k, _)| *k == d)
        .map(|(_, v)| *v)
        .unwrap_or(10)
}
