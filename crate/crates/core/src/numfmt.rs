//! Logarithms of exact values and the number formats used in reports.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Natural log of `|n|` for an arbitrary-size integer, `f64` accurate.
pub fn ln_bigint(n: &BigInt) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits() as i64;
    let drop = (bits - 60).max(0);
    let top = (n.magnitude() >> (drop as usize)).to_u64().unwrap_or(1) as f64;
    top.ln() + drop as f64 * std::f64::consts::LN_2
}

/// Natural log of `|q|`.
pub fn ln_rational(q: &BigRational) -> f64 {
    ln_bigint(q.numer()) - ln_bigint(q.denom())
}

/// Approximate `f64` value of a rational of any size (may under/overflow).
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.numer().is_zero() {
        return 0.0;
    }
    let sign = if q.is_negative() { -1.0 } else { 1.0 };
    sign * ln_rational(q).exp()
}

/// `p/q` form of an exact rational, `q` always printed.
pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Plain decimal with `sig` significant digits, e.g. `2.14054124566`.
/// Falls back to scientific notation outside `[1e-4, 1e15)`.
pub fn sig_digits(x: f64, sig: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{:.*e}", sig.saturating_sub(1), x);
    }
    let decimals = (sig as i32 - 1 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// Natural log of the absolute value of a decimal string such as
/// `1.118033988e-7` or `40040`. Returns `None` for malformed input or zero.
pub fn ln_decimal(s: &str) -> Option<f64> {
    let s = s.trim().trim_start_matches(['-', '+']);
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let n: BigInt = digits.parse().ok()?;
    if n.is_zero() {
        return None;
    }
    let e10 = exp - frac_part.len() as i64;
    Some(ln_bigint(&n) + e10 as f64 * std::f64::consts::LN_10)
}
