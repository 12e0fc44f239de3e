//! Binary arbitrary-precision floating point on top of `num-bigint`.
//!
//! A [`BigFloat`] is `mant * 2^exp` with an unbounded exponent. Every
//! rounding operation takes the target precision in bits explicitly, so a
//! single value never carries hidden context. Rounding is to nearest with
//! ties away from zero; division and square root are faithful (error below
//! one unit in the last place).
//!
//! Conversion to and from [`BigRational`] is exact in the float-to-rational
//! direction, which is what lets the root finder hand its results to the
//! exact sign-change machinery without contamination.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Direction used by the directed-rounding helpers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    /// Round to nearest, ties away from zero.
    Nearest,
    /// Round the magnitude up (away from zero).
    Up,
    /// Round the magnitude down (toward zero).
    Down,
}

#[derive(Clone, Debug)]
pub struct BigFloat {
    mant: BigInt,
    exp: i64,
}

impl BigFloat {
    pub fn zero() -> Self {
        BigFloat {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        BigFloat::from_bigint(BigInt::one())
    }

    /// Exact value `mant * 2^exp`.
    pub fn from_parts(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            BigFloat::zero()
        } else {
            BigFloat { mant, exp }
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        BigFloat::from_parts(n, 0)
    }

    pub fn from_i64(n: i64) -> Self {
        BigFloat::from_bigint(BigInt::from(n))
    }

    /// Exact conversion; panics on NaN or infinity.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "BigFloat::from_f64 on non-finite value");
        if x == 0.0 {
            return BigFloat::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 0 { 1i64 } else { -1i64 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), raw_exp - 1075)
        };
        BigFloat::from_parts(BigInt::from(m) * sign, e)
    }

    /// `q` rounded to `prec` significant bits.
    pub fn from_rational(q: &BigRational, prec: u32, mode: Round) -> Self {
        if q.numer().is_zero() {
            return BigFloat::zero();
        }
        let num = q.numer();
        let den = q.denom();
        let shift = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let shift = shift.max(0);
        let scaled = num << (shift as usize);
        let (quot, rem) = scaled.div_rem(den);
        // A nonzero remainder only matters for directed rounding; fold it in
        // as a sticky bit below the rounding position.
        let sticky = !rem.is_zero();
        let mut mant = quot << 1usize;
        if sticky {
            if mant.sign() == Sign::Minus {
                mant -= 1;
            } else {
                mant += 1;
            }
        }
        BigFloat::round_parts(mant, -shift - 1, prec, mode)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    /// -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    /// Number of significant bits currently held.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Position just above the most significant bit: `|self|` lies in
    /// `[2^(top-1), 2^top)`. Zero maps to `i64::MIN`.
    pub fn top(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    fn round_parts(mant: BigInt, exp: i64, prec: u32, mode: Round) -> Self {
        let bits = mant.bits();
        if bits <= prec as u64 {
            return BigFloat::from_parts(mant, exp);
        }
        let shift = bits - prec as u64;
        let (sign, mag) = mant.into_parts();
        let mag: BigUint = match mode {
            Round::Nearest => {
                let half = BigUint::one() << (shift - 1);
                (mag + half) >> shift
            }
            Round::Down => mag >> shift,
            Round::Up => {
                let low_mask = (BigUint::one() << shift) - 1u32;
                let inexact = !(&mag & &low_mask).is_zero();
                let q = mag >> shift;
                if inexact {
                    q + 1u32
                } else {
                    q
                }
            }
        };
        BigFloat::from_parts(BigInt::from_biguint(sign, mag), exp + shift as i64)
    }

    /// Round to `prec` significant bits.
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        BigFloat::round_parts(self.mant.clone(), self.exp, prec, mode)
    }

    pub fn neg(&self) -> Self {
        BigFloat::from_parts(-&self.mant, self.exp)
    }

    pub fn abs(&self) -> Self {
        BigFloat::from_parts(self.mant.abs(), self.exp)
    }

    /// Exact multiplication by `2^k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return BigFloat::zero();
        }
        BigFloat::from_parts(self.mant.clone(), self.exp + k)
    }

    /// Exact sum, no rounding.
    pub fn add_exact(&self, other: &BigFloat) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << ((self.exp - e) as usize);
        let b = &other.mant << ((other.exp - e) as usize);
        BigFloat::from_parts(a + b, e)
    }

    pub fn sub_exact(&self, other: &BigFloat) -> Self {
        self.add_exact(&other.neg())
    }

    pub fn add(&self, other: &BigFloat, prec: u32) -> Self {
        if self.is_zero() {
            return other.round(prec, Round::Nearest);
        }
        if other.is_zero() {
            return self.round(prec, Round::Nearest);
        }
        let (hi, lo) = if self.top() >= other.top() {
            (self, other)
        } else {
            (other, self)
        };
        // Bits of `lo` far below the rounding position of the result only act
        // as a sticky bit; truncate them instead of aligning exactly.
        let cutoff = hi.top() - prec as i64 - 8;
        if lo.top() < cutoff {
            let mut r = hi.clone();
            let sticky = BigFloat::from_parts(BigInt::from(lo.signum()), cutoff - 4);
            r = r.add_exact(&sticky);
            return r.round(prec, Round::Nearest);
        }
        let lo = if lo.exp < cutoff - 64 {
            let drop = (cutoff - 64 - lo.exp) as usize;
            BigFloat::from_parts(&lo.mant >> drop, lo.exp + drop as i64)
        } else {
            lo.clone()
        };
        let hi = if hi.exp < cutoff - 64 {
            let drop = (cutoff - 64 - hi.exp) as usize;
            BigFloat::from_parts(&hi.mant >> drop, hi.exp + drop as i64)
        } else {
            hi.clone()
        };
        hi.add_exact(&lo).round(prec, Round::Nearest)
    }

    pub fn sub(&self, other: &BigFloat, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &BigFloat, prec: u32) -> Self {
        if self.is_zero() || other.is_zero() {
            return BigFloat::zero();
        }
        BigFloat::round_parts(
            &self.mant * &other.mant,
            self.exp + other.exp,
            prec,
            Round::Nearest,
        )
    }

    pub fn mul_exact(&self, other: &BigFloat) -> Self {
        BigFloat::from_parts(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Faithfully rounded quotient. Panics when `other` is zero.
    pub fn div(&self, other: &BigFloat, prec: u32) -> Self {
        assert!(!other.is_zero(), "BigFloat division by zero");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let shift = (prec as i64 + 2 + other.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let q = (&self.mant << (shift as usize)) / &other.mant;
        BigFloat::round_parts(q, self.exp - shift - other.exp, prec, Round::Nearest)
    }

    /// Faithfully rounded square root of a nonnegative value.
    pub fn sqrt(&self, prec: u32) -> Self {
        assert!(self.signum() >= 0, "BigFloat::sqrt of negative value");
        if self.is_zero() {
            return BigFloat::zero();
        }
        let mut shift = (2 * prec as i64 + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = (&self.mant << (shift as usize)).sqrt();
        BigFloat::round_parts(m, (self.exp - shift) / 2, prec, Round::Nearest)
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << (self.exp as usize))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as usize))
        }
    }

    /// Nearest `f64`; saturates to infinity or flushes to zero outside the
    /// `f64` range. Use [`BigFloat::log2_abs`] for magnitudes.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(53, Round::Nearest);
        let top = r.mant.to_i64().expect("53-bit mantissa fits") as f64;
        if r.exp > 2000 {
            return top.signum() * f64::INFINITY;
        }
        if r.exp < -2200 {
            return 0.0;
        }
        let half = (r.exp / 2) as i32;
        top * 2f64.powi(half) * 2f64.powi(r.exp as i32 - half)
    }

    /// `log2 |self|` to roughly `f64` accuracy, valid for any exponent.
    /// Zero maps to negative infinity.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let bits = self.mant.bits() as i64;
        let drop = (bits - 60).max(0);
        let top = (self.mant.magnitude() >> (drop as usize))
            .to_u64()
            .unwrap_or(1) as f64;
        top.log2() + (self.exp + drop) as f64
    }

    pub fn ln_abs(&self) -> f64 {
        self.log2_abs() * std::f64::consts::LN_2
    }

    /// Decimal scientific notation with `digits` significant digits,
    /// correctly rounded, e.g. `-1.118033988e-7`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.signum() < 0;
        let mag = self.mant.magnitude().clone();
        let mut k = (self.log2_abs() * std::f64::consts::LOG10_2).floor() as i64;
        let lower = BigUint::from(10u32).pow((digits - 1) as u32);
        let upper = BigUint::from(10u32).pow(digits as u32);
        let n = loop {
            let s = digits as i64 - 1 - k;
            let mut num = mag.clone();
            let mut den = BigUint::one();
            if s >= 0 {
                num *= BigUint::from(10u32).pow(s as u32);
            } else {
                den *= BigUint::from(10u32).pow((-s) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as usize;
            } else {
                den <<= (-self.exp) as usize;
            }
            let (q, r) = num.div_rem(&den);
            let n = if r << 1usize >= den { q + 1u32 } else { q };
            if n >= upper {
                k += 1;
            } else if n < lower {
                k -= 1;
            } else {
                break n;
            }
        };
        let s = n.to_str_radix(10);
        let mut out = String::with_capacity(digits + 8);
        if neg {
            out.push('-');
        }
        out.push_str(&s[..1]);
        if digits > 1 {
            out.push('.');
            out.push_str(&s[1..]);
        }
        out.push('e');
        out.push_str(&k.to_string());
        out
    }

    /// Decimal digits that faithfully represent a value of `prec` bits.
    pub fn digits_for_prec(prec: u32) -> usize {
        (prec as f64 * std::f64::consts::LOG10_2).floor() as usize + 1
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for BigFloat {}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let mag = match self.top().cmp(&other.top()) {
            Ordering::Equal => {
                let e = self.exp.min(other.exp);
                let a = self.mant.magnitude() << ((self.exp - e) as usize);
                let b = other.mant.magnitude() << ((other.exp - e) as usize);
                a.cmp(&b)
            }
            o => o,
        };
        if sa > 0 {
            mag
        } else {
            mag.reverse()
        }
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        f.write_str(&self.to_sci_string(digits))
    }
}

/// Complex number with [`BigFloat`] parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        BigComplex { re, im }
    }

    pub fn zero() -> Self {
        BigComplex::new(BigFloat::zero(), BigFloat::zero())
    }

    pub fn from_real(re: BigFloat) -> Self {
        BigComplex::new(re, BigFloat::zero())
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        BigComplex::new(BigFloat::from_f64(re), BigFloat::from_f64(im))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn neg(&self) -> Self {
        BigComplex::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, o: &BigComplex, prec: u32) -> Self {
        BigComplex::new(self.re.add(&o.re, prec), self.im.add(&o.im, prec))
    }

    pub fn sub(&self, o: &BigComplex, prec: u32) -> Self {
        BigComplex::new(self.re.sub(&o.re, prec), self.im.sub(&o.im, prec))
    }

    pub fn sub_exact(&self, o: &BigComplex) -> Self {
        BigComplex::new(self.re.sub_exact(&o.re), self.im.sub_exact(&o.im))
    }

    pub fn mul(&self, o: &BigComplex, prec: u32) -> Self {
        let re = self
            .re
            .mul_exact(&o.re)
            .sub_exact(&self.im.mul_exact(&o.im));
        let im = self
            .re
            .mul_exact(&o.im)
            .add_exact(&self.im.mul_exact(&o.re));
        BigComplex::new(
            re.round(prec, Round::Nearest),
            im.round(prec, Round::Nearest),
        )
    }

    pub fn mul_real(&self, r: &BigFloat, prec: u32) -> Self {
        BigComplex::new(self.re.mul(r, prec), self.im.mul(r, prec))
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        BigComplex::new(self.re.mul_pow2(k), self.im.mul_pow2(k))
    }

    /// `|self|^2`.
    pub fn norm_sqr(&self, prec: u32) -> BigFloat {
        self.re
            .mul_exact(&self.re)
            .add_exact(&self.im.mul_exact(&self.im))
            .round(prec, Round::Nearest)
    }

    pub fn abs(&self, prec: u32) -> BigFloat {
        self.norm_sqr(prec + 4).sqrt(prec)
    }

    /// Panics when `o` is zero.
    pub fn div(&self, o: &BigComplex, prec: u32) -> Self {
        let p = prec + 8;
        let den = o.norm_sqr(p);
        let num = self.mul(&o.conj(), p);
        BigComplex::new(num.re.div(&den, prec), num.im.div(&den, prec))
    }

    pub fn recip(&self, prec: u32) -> Self {
        BigComplex::from_real(BigFloat::one()).div(self, prec)
    }

    pub fn round(&self, prec: u32) -> Self {
        BigComplex::new(
            self.re.round(prec, Round::Nearest),
            self.im.round(prec, Round::Nearest),
        )
    }

    /// Lexicographic order on (re, im).
    pub fn lex_cmp(&self, o: &BigComplex) -> Ordering {
        self.re.cmp(&o.re).then_with(|| self.im.cmp(&o.im))
    }
}
