//! Oracles shared by the integration tests. Nothing here calls the solver
//! or the family constructors.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polysep::{BigComplex, BigFloat, IntPolynomial};

/// Catalan numbers from the closed form `binom(2n, n) / (n + 1)`.
pub fn catalan_closed(n: u64) -> BigInt {
    let mut b = BigInt::one();
    for k in 0..n {
        b = b * BigInt::from(2 * n - k) / BigInt::from(k + 1);
    }
    b / BigInt::from(n + 1)
}

pub fn big_pow(a: u64, k: u32) -> BigInt {
    BigInt::from(a).pow(k)
}

/// Horner evaluation in the complex numbers at `prec` bits.
fn eval(coeffs: &[BigFloat], z: &BigComplex, prec: u32) -> BigComplex {
    let mut acc = BigComplex::zero();
    for c in coeffs.iter().rev() {
        acc = acc
            .mul(z, prec)
            .add(&BigComplex::from_real(c.clone()), prec);
    }
    acc
}

/// Durand–Kerner (Weierstrass) iteration from the usual `(0.4 + 0.9i)^k`
/// starting points. Returns `None` if it fails to settle.
pub fn durand_kerner(p: &IntPolynomial, prec: u32) -> Option<Vec<BigComplex>> {
    let n = p.degree().ok()?;
    let lead = BigFloat::from_bigint(p.leading().ok()?.clone());
    let monic: Vec<BigFloat> = p
        .coeffs()
        .iter()
        .map(|c| BigFloat::from_bigint(c.clone()).div(&lead, prec))
        .collect();
    let seed = BigComplex::from_f64(0.4, 0.9);
    let mut z = Vec::with_capacity(n);
    let mut w = BigComplex::from_f64(1.0, 0.0);
    for _ in 0..n {
        z.push(w.clone());
        w = w.mul(&seed, prec);
    }
    let tol = -(prec as f64) + 12.0;
    for _ in 0..20_000 {
        let mut worst = f64::NEG_INFINITY;
        for i in 0..n {
            let mut denom = BigComplex::from_f64(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom = denom.mul(&z[i].sub(&z[j], prec), prec);
                }
            }
            if denom.is_zero() {
                return None;
            }
            let step = eval(&monic, &z[i], prec).div(&denom, prec);
            z[i] = z[i].sub(&step, prec);
            if !step.is_zero() {
                let rel = step.abs(64).log2_abs() - z[i].abs(64).log2_abs().max(-(prec as f64));
                worst = worst.max(rel);
            }
        }
        if worst < tol {
            return Some(z);
        }
    }
    None
}

/// Smallest pairwise distance by exhaustive comparison.
pub fn min_distance(roots: &[BigComplex]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min(roots[i].sub_exact(&roots[j]).abs(64).to_f64());
        }
    }
    best
}

/// Coefficients of `lead * prod (x - r_i)` at `prec` bits.
pub fn rebuild(lead: &BigInt, roots: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let mut c = vec![BigComplex::from_real(BigFloat::from_bigint(lead.clone()))];
    for r in roots {
        let mut next = vec![BigComplex::zero(); c.len() + 1];
        for (i, ci) in c.iter().enumerate() {
            next[i + 1] = next[i + 1].add(ci, prec);
            next[i] = next[i].sub(&ci.mul(r, prec), prec);
        }
        c = next;
    }
    c
}

/// Largest `|rebuilt_i - c_i| / max(|c_i|, 1)` over all coefficients.
pub fn reconstruction_error(p: &IntPolynomial, roots: &[BigComplex], prec: u32) -> f64 {
    let lead = p.leading().expect("nonzero").clone();
    let rebuilt = rebuild(&lead, roots, prec);
    let mut worst = f64::NEG_INFINITY;
    for (i, r) in rebuilt.iter().enumerate() {
        let c = p.coeff(i);
        let diff = r.sub(
            &BigComplex::from_real(BigFloat::from_bigint(c.clone())),
            prec,
        );
        let scale = if c.is_zero() {
            0.0
        } else {
            BigFloat::from_bigint(c).log2_abs().max(0.0)
        };
        let e = if diff.is_zero() {
            f64::NEG_INFINITY
        } else {
            diff.abs(64).log2_abs() - scale
        };
        worst = worst.max(e);
    }
    worst
}
