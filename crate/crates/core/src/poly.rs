//! Dense integer polynomials with exact arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bigfloat::{BigComplex, BigFloat, Round};
use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending order (`coeffs[i]` is the
/// coefficient of `x^i`). Trailing zeros are always stripped, so the zero
/// polynomial is the empty sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "PolyJson", try_from = "PolyJson")]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else {
            Ok(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Result<&BigInt> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }

    /// Naive height: the largest absolute value of a coefficient.
    pub fn height(&self) -> Result<BigInt> {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Index of the first coefficient attaining the height.
    pub fn height_index(&self) -> Result<usize> {
        let h = self.height()?;
        Ok(self.coeffs.iter().position(|c| c.abs() == h).unwrap_or(0))
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPolynomial::new(coeffs)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, k: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `x^deg * p(1/x)`: the coefficient sequence reversed. Leading zeros
    /// produced by a vanishing constant term are stripped.
    pub fn reciprocal(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Exact value at a rational point (Horner).
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the exact value at a rational point: -1, 0 or 1.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Horner evaluation with every operation rounded to `prec_bits`.
    pub fn eval_complex(&self, z: &BigComplex, prec_bits: u32) -> BigComplex {
        let mut acc = BigComplex::zero();
        for c in self.coeffs.iter().rev() {
            let c = BigFloat::from_bigint(c.clone()).round(prec_bits, Round::Nearest);
            acc = acc.mul(z, prec_bits);
            acc = BigComplex::new(acc.re.add(&c, prec_bits), acc.im);
        }
        acc
    }

    /// Taylor shift with scaling: `2^(k*d) * p((m + z) / 2^k)` as an integer
    /// polynomial in `z`, where `d` is the degree of `p`.
    pub fn dyadic_shift(&self, m: &BigInt, k: u32) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let lin = IntPolynomial::new(vec![m.clone(), BigInt::one()]);
        let step = BigInt::one() << (k as usize);
        let mut acc = IntPolynomial::zero();
        let mut pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&IntPolynomial::new(vec![c * &pow]));
            pow *= &step;
        }
        acc
    }

    /// Exact discriminant, from the resultant of `p` and `p'` computed by
    /// fraction-free elimination on the Sylvester matrix.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.degree()?;
        if d < 2 {
            return Err(Error::DegreeTooSmall { degree: d, min: 2 });
        }
        let dp = self.derivative();
        let res = resultant(self, &dp);
        let lead = self.leading()?;
        let disc = res / lead;
        // (-1)^(d(d-1)/2)
        if (d * (d - 1) / 2) % 2 == 1 {
            Ok(-disc)
        } else {
            Ok(disc)
        }
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), rows in descending
/// coefficient order.
pub fn sylvester_matrix(f: &IntPolynomial, g: &IntPolynomial) -> Vec<Vec<BigInt>> {
    let m = f.coeffs.len().saturating_sub(1);
    let n = g.coeffs.len().saturating_sub(1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Resultant of two nonzero polynomials via the Sylvester determinant.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    bareiss_determinant(sylvester_matrix(f, g))
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::add(self, rhs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::add(self, &-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Wire form: `{"degree": n, "coeffs": ["c0", ..., "cn"]}`, ascending,
/// coefficients as decimal strings. The zero polynomial has `degree: null`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: Option<usize>,
    pub coeffs: Vec<String>,
}

impl From<IntPolynomial> for PolyJson {
    fn from(p: IntPolynomial) -> Self {
        PolyJson {
            degree: p.degree().ok(),
            coeffs: p.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl TryFrom<PolyJson> for IntPolynomial {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::InvalidParameter(format!("bad coefficient {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let p = IntPolynomial::new(coeffs);
        if p.degree().ok() != j.degree {
            return Err(Error::InvalidParameter(format!(
                "degree field {:?} does not match coefficients",
                j.degree
            )));
        }
        Ok(p)
    }
}
