mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::{catalan_closed, reconstruction_error};
use polysep::family::{construct_compact, construct_expanded, height_formula};
use polysep::irreducible::eisenstein_check;
use polysep::rootfind::{aberth_all_roots, bisect_bracket, RealBracket};
use polysep::{BigFloat, IntPolynomial, Round};

fn poly_strategy(max_deg: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
}

fn to_poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

fn schoolbook(a: &[i64], b: &[i64]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += BigInt::from(*x) * BigInt::from(*y);
        }
    }
    out
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-1000i64..=1000, 1i64..=97).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

/// Monic-normalized remainder sequence over the rationals.
fn rational_gcd_degree(p: &IntPolynomial, q: &IntPolynomial) -> usize {
    let conv = |p: &IntPolynomial| -> Vec<BigRational> {
        p.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    };
    let trim = |v: &mut Vec<BigRational>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    let (mut a, mut b) = (conv(p), conv(q));
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let k = a.len() - b.len();
            let f = a.last().unwrap() / b.last().unwrap();
            for (i, c) in b.iter().enumerate() {
                a[i + k] = &a[i + k] - &f * c;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut k = BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            out.push(&n / &k);
        }
        k += 1;
    }
    out
}

fn has_rational_root(p: &IntPolynomial) -> bool {
    let c = p.coeffs();
    if c[0].is_zero() {
        return true;
    }
    for num in divisors(&c[0]) {
        for den in divisors(p.leading().unwrap()) {
            for s in [1, -1] {
                let x = BigRational::new(&num * s, den.clone());
                if p.eval_rational(&x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_matches_schoolbook(a in poly_strategy(8, 1000), b in poly_strategy(8, 1000)) {
        let prod = to_poly(&a).mul(&to_poly(&b));
        prop_assert_eq!(prod, IntPolynomial::new(schoolbook(&a, &b)));
    }

    #[test]
    fn ring_laws(a in poly_strategy(6, 50), b in poly_strategy(6, 50), c in poly_strategy(6, 50)) {
        let (a, b, c) = (to_poly(&a), to_poly(&b), to_poly(&c));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(6, 50), b in poly_strategy(6, 50), x in rational()) {
        let (a, b) = (to_poly(&a), to_poly(&b));
        prop_assert_eq!(a.mul(&b).eval_rational(&x), a.eval_rational(&x) * b.eval_rational(&x));
        prop_assert_eq!(a.add(&b).eval_rational(&x), a.eval_rational(&x) + b.eval_rational(&x));
    }

    #[test]
    fn reciprocal_is_an_involution(mut c in poly_strategy(8, 50), c0 in 1i64..=50) {
        c[0] = c0;
        let p = to_poly(&c);
        prop_assert_eq!(p.reciprocal().reciprocal(), p);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_factor(c in poly_strategy(5, 12), r in poly_strategy(2, 5)) {
        // multiply by a square some of the time to get repeated factors
        let base = to_poly(&c);
        let sq = to_poly(&r);
        for p in [base.clone(), base.mul(&sq).mul(&sq)] {
            let Ok(deg) = p.degree() else { continue };
            if deg < 2 {
                continue;
            }
            let repeated = rational_gcd_degree(&p, &p.derivative()) > 0;
            prop_assert_eq!(p.discriminant().unwrap().is_zero(), repeated, "{}", p);
        }
    }

    #[test]
    fn eisenstein_pass_means_no_rational_roots(c in poly_strategy(5, 40), prime in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let p = to_poly(&c);
        let Ok(deg) = p.degree() else { return Ok(()) };
        if deg < 2 {
            return Ok(());
        }
        let cert = eisenstein_check(&p, prime).unwrap();
        let q = BigInt::from(prime);
        let brute = !p.leading().unwrap().is_multiple_of(&q)
            && p.coeffs()[..deg].iter().all(|x| x.is_multiple_of(&q))
            && !p.coeffs()[0].is_multiple_of(&(&q * &q));
        prop_assert_eq!(cert.passed, brute);
        if cert.passed {
            prop_assert!(!has_rational_root(&p));
        }
    }

    #[test]
    fn family_constructions_agree(d in 3u32..=12, a in 1u64..=1_000_000) {
        let p = construct_compact(d, a).unwrap();
        prop_assert_eq!(&p, &construct_expanded(d, a).unwrap());
        prop_assert_eq!(p.height().unwrap(), height_formula(d, a).unwrap());
        let lead = BigInt::from(4) * catalan_closed(d as u64 - 1) * BigInt::from(a).pow(d) - 2;
        prop_assert_eq!(p.leading().unwrap(), &lead);
    }

    #[test]
    fn json_round_trip(c in poly_strategy(8, i64::MAX / 2)) {
        let p = to_poly(&c);
        let s = serde_json::to_string(&p).unwrap();
        let back: IntPolynomial = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rounded_arithmetic_is_faithful(x in -1e12f64..1e12, y in -1e12f64..1e12, prec in 24u32..200) {
        let (bx, by) = (BigFloat::from_f64(x), BigFloat::from_f64(y));
        let exact_sum = bx.to_rational() + by.to_rational();
        let exact_prod = bx.to_rational() * by.to_rational();
        for (got, exact) in [(bx.add(&by, prec), exact_sum), (bx.mul(&by, prec), exact_prod)] {
            // directed modes act on the magnitude
            let a = BigFloat::from_rational(&exact, prec, Round::Down);
            let b = BigFloat::from_rational(&exact, prec, Round::Up);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(lo <= got && got <= hi);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn roots_reconstruct_and_come_in_conjugate_pairs(c in poly_strategy(10, 50)) {
        let p = to_poly(&c);
        let Ok(deg) = p.degree() else { return Ok(()) };
        if deg < 1 || (deg >= 2 && p.discriminant().unwrap().is_zero()) {
            return Ok(());
        }
        let rs = aberth_all_roots(&p, 192).unwrap();
        prop_assert_eq!(rs.roots.len(), deg);
        if !rs.converged {
            return Ok(());
        }
        prop_assert!(reconstruction_error(&p, &rs.roots, rs.prec_bits) <= -(rs.prec_bits as f64) / 2.0);
        for (z, r) in rs.roots.iter().zip(&rs.error_radii) {
            let partner = rs.roots.iter().zip(&rs.error_radii).any(|(w, s)| {
                z.conj().sub_exact(w).abs(64) <= r.add(s, 64)
            });
            prop_assert!(partner);
        }
    }

    #[test]
    fn bisection_keeps_sign_change(c in poly_strategy(6, 30), k in 4u32..60) {
        let p = to_poly(&c);
        let Ok(deg) = p.degree() else { return Ok(()) };
        if deg < 1 {
            return Ok(());
        }
        let bound = BigRational::from_integer(p.height().unwrap() + BigInt::one());
        let Some(b) = RealBracket::new(&p, -bound.clone(), bound) else { return Ok(()) };
        let w = BigRational::new(BigInt::one(), BigInt::one() << k as usize);
        let r = bisect_bracket(&p, &b, &w);
        prop_assert!(r.verify(&p));
        prop_assert!(r.is_exact_root() || r.width() <= w);
        prop_assert!(b.lo <= r.lo && r.hi <= b.hi);
    }
}
