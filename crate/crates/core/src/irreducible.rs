//! Eisenstein certificates, in the form used for the families: the prime 2
//! applied to the reciprocal polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::FamilyInstance;
use crate::poly::IntPolynomial;

const MAX_CHECKED_PRIME: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EisensteinFailure {
    LeadingDivisible,
    InteriorNotDivisible,
    ConstantDivisibleByPSquared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EisensteinCertificate {
    pub prime: u64,
    #[serde(rename = "reciprocal")]
    pub applied_to_reciprocal: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_condition: Option<EisensteinFailure>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Standard Eisenstein criterion at `prime`: it divides every non-leading
/// coefficient, does not divide the leading one, and its square does not
/// divide the constant term. The first failing condition is recorded.
pub fn eisenstein_check(p: &IntPolynomial, prime: u64) -> Result<EisensteinCertificate> {
    let deg = p.degree()?;
    if deg < 1 {
        return Err(Error::DegreeTooSmall {
            degree: deg,
            min: 1,
        });
    }
    if prime > MAX_CHECKED_PRIME {
        return Err(Error::InvalidParameter(format!(
            "prime {prime} exceeds the checked range {MAX_CHECKED_PRIME}"
        )));
    }
    if !is_prime(prime) {
        return Err(Error::InvalidParameter(format!("{prime} is not prime")));
    }
    let q = BigInt::from(prime);
    let q2 = &q * &q;
    let coeffs = p.coeffs();
    let failing = if coeffs[deg].is_multiple_of(&q) {
        Some(EisensteinFailure::LeadingDivisible)
    } else if !coeffs[..deg].iter().all(|c| c.is_multiple_of(&q)) {
        Some(EisensteinFailure::InteriorNotDivisible)
    } else if (&coeffs[0] % &q2).is_zero() {
        Some(EisensteinFailure::ConstantDivisibleByPSquared)
    } else {
        None
    };
    Ok(EisensteinCertificate {
        prime,
        applied_to_reciprocal: false,
        passed: failing.is_none(),
        failing_condition: failing,
    })
}

/// Eisenstein at 2 on `x^d P_{d,a}(1/x)`. A failed certificate is returned,
/// not raised.
pub fn verify_family_irreducible(inst: &FamilyInstance) -> EisensteinCertificate {
    let mut cert = eisenstein_check(&inst.poly.reciprocal(), 2)
        .expect("family polynomials have degree >= 3 and 2 is prime");
    cert.applied_to_reciprocal = true;
    cert
}
