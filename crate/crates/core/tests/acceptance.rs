//! Acceptance run: one PASS/FAIL line per criterion, with the measured
//! values and the time taken against the budget.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{big_pow, catalan_closed, durand_kerner, min_distance, reconstruction_error};
use polysep::family::{construct_compact, construct_expanded, mignotte_family};
use polysep::irreducible::verify_family_irreducible;
use polysep::rootfind::adaptive_roots;
use polysep::sep::{
    analyze, analyze_reciprocal, certify_exponent, mignotte_scan, scan, separation, slope_fit,
    ScanOptions,
};
use polysep::{BigComplex, BigFloat, FamilyInstance, IntPolynomial, Round, SepReport};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ipoly(c: Vec<BigInt>) -> IntPolynomial {
    IntPolynomial::new(c)
}

/// Independent Horner over the rationals.
fn horner(p: &IntPolynomial, x: &BigRational) -> BigRational {
    p.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

fn sign(q: &BigRational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

fn serial() -> ScanOptions {
    ScanOptions {
        jobs: 1,
        timing: false,
    }
}

fn criterion_1() -> Outcome {
    let mut bad = Vec::new();
    for d in 3..=12u32 {
        for a in 1..=20u64 {
            let p = construct_expanded(d, a).unwrap();
            let q = construct_compact(d, a).unwrap();
            let du = d as u64;
            let lead = BigInt::from(4) * catalan_closed(du - 1) * big_pow(a, d) - 2;
            let c2 = catalan_closed(du - 2);
            let h = BigInt::from(4) * &c2 * &c2 * big_pow(a, 2 * d - 2)
                + BigInt::from(4) * catalan_closed(du - 3) * big_pow(a, d - 2);
            let ok = p == q
                && p.degree().unwrap() == d as usize
                && p.coeff(0).is_one()
                && *p.leading().unwrap() == lead
                && p.height().unwrap() == h
                && p.coeff(2) == h;
            if !ok {
                bad.push(format!("(d={d},a={a})"));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("200 instances, mismatches: {}", bad.len()),
    )
}

fn printed(d: u32, a: u64) -> IntPolynomial {
    let p = |k: u32| big_pow(a, k);
    let n = |v: i64| BigInt::from(v);
    match d {
        3 => ipoly(vec![
            n(1),
            n(4) * p(2),
            n(4) * p(4) + n(4) * p(1),
            n(8) * p(3) - 2,
        ]),
        4 => ipoly(vec![
            n(1),
            n(8) * p(3),
            n(16) * p(6) + n(4) * p(2),
            n(16) * p(5) + n(4) * p(1),
            n(20) * p(4) - 2,
        ]),
        5 => ipoly(vec![
            n(1),
            n(20) * p(4),
            n(100) * p(8) + n(8) * p(3),
            n(80) * p(7) + n(4) * p(2),
            n(56) * p(6) + n(4) * p(1),
            n(56) * p(5) - 2,
        ]),
        _ => unreachable!(),
    }
}

fn criterion_2() -> Outcome {
    let mut bad = 0;
    for d in 3..=5 {
        for a in 1..=10 {
            if construct_compact(d, a).unwrap() != printed(d, a)
                || construct_expanded(d, a).unwrap() != printed(d, a)
            {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("30 instances, mismatches: {bad}"))
}

fn criterion_3() -> Outcome {
    let mut bad = 0;
    for d in 3..=10 {
        for a in 1..=100 {
            let inst = FamilyInstance::new(d, a).unwrap();
            let c = verify_family_irreducible(&inst);
            // independent check of the same conditions
            let r: Vec<BigInt> = inst.poly.coeffs().iter().rev().cloned().collect();
            let two = BigInt::from(2);
            let manual = (&r[d as usize] % &two) != BigInt::zero()
                && r[..d as usize].iter().all(|c| (c % &two).is_zero())
                && !(&r[0] % BigInt::from(4)).is_zero();
            if !(c.passed && c.applied_to_reciprocal && c.prime == 2 && manual) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("800 instances, failures: {bad}"))
}

/// `log2 |z - x|` for a complex root and a rational target.
fn log2_err(z: &BigComplex, x: &BigRational, prec: u32) -> f64 {
    let x = BigFloat::from_rational(x, prec + 64, Round::Nearest);
    BigComplex::new(z.re.sub_exact(&x), z.im.clone())
        .abs(64)
        .log2_abs()
}

fn a_pow(a: u64, k: i32) -> BigRational {
    let p = BigRational::from_integer(big_pow(a, k.unsigned_abs()));
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Two smallest-modulus roots of a report.
fn small_pair(r: &SepReport) -> Vec<BigComplex> {
    let mut roots = r.roots.roots.clone();
    roots.sort_by_key(|z| z.norm_sqr(64));
    roots.truncate(2);
    roots
}

fn criterion_4() -> (Outcome, Outcome) {
    let mut lines = Vec::new();
    let mut two_term_ok = true;
    let mut full_ok = true;
    for d in 3..=5u32 {
        for a in [10u64, 100] {
            let r = analyze(&FamilyInstance::new(d, a).unwrap()).unwrap();
            let two_term = match d {
                3 => -rat(1, 2) * a_pow(a, -2) - rat(1, 4) * a_pow(a, -5),
                4 => -rat(1, 4) * a_pow(a, -3) - rat(1, 32) * a_pow(a, -7),
                _ => -rat(1, 10) * a_pow(a, -4) - rat(1, 250) * a_pow(a, -9),
            };
            // d = 5: every printed center term, sign as forced by positive coefficients
            let full = match d {
                5 => &two_term - rat(3, 25000) * a_pow(a, -14) + rat(3, 250000) * a_pow(a, -19),
                _ => two_term.clone(),
            };
            let tol = 10f64.log2() - (d * d) as f64 * (a as f64).log2()
                + (d as f64 / 2.0 + 1.0) * (a as f64).log2();
            let pair = small_pair(&r);
            let e2 = pair
                .iter()
                .map(|z| log2_err(z, &two_term, r.prec_bits))
                .fold(f64::NEG_INFINITY, f64::max);
            let ef = pair
                .iter()
                .map(|z| log2_err(z, &full, r.prec_bits))
                .fold(f64::NEG_INFINITY, f64::max);
            two_term_ok &= e2 <= tol;
            full_ok &= ef <= tol;
            lines.push(format!(
                "(d={d},a={a}) err {:.2e} tol {:.2e}{}",
                e2.exp2(),
                tol.exp2(),
                if d == 5 {
                    format!(" full-center err {:.2e}", ef.exp2())
                } else {
                    String::new()
                }
            ));
        }
    }
    let detail = lines.join("; ");
    (
        outcome(two_term_ok, format!("two-term truncation: {detail}")),
        outcome(
            full_ok,
            "all printed center terms (d=5 needs four; d=3,4 two)",
        ),
    )
}

fn criterion_5(reports: &mut Vec<SepReport>) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut max_bits = 0;
    let mut bad = Vec::new();
    for d in 3..=8 {
        for a in [100u64, 1000] {
            let r = analyze(&FamilyInstance::new(d, a).unwrap()).unwrap();
            worst = worst.max((r.ratio - 1.0).abs());
            max_bits = max_bits.max(r.prec_bits);
            if !(0.99..=1.01).contains(&r.ratio)
                || r.prec_bits > 1024
                || r.pair_in_brackets != Some(true)
            {
                bad.push(format!(
                    "(d={d},a={a}) ratio {} bits {}",
                    r.ratio, r.prec_bits
                ));
            }
            reports.push(r);
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "12 instances, max |ratio-1| {worst:.3e}, max precision {max_bits} bits {}",
            bad.join(" ")
        ),
    )
}

fn criterion_6(reports: &mut Vec<SepReport>) -> Outcome {
    let rows = scan(4, &[10, 100, 1000, 10000], serial()).unwrap();
    let e: Vec<f64> = rows.iter().map(|r| r.e.unwrap()).collect();
    let increasing = e.windows(2).all(|w| w[0] < w[1]);
    let e4 = e[2];
    let r5 = analyze(&FamilyInstance::new(5, 1000).unwrap()).unwrap();
    let slope = slope_fit(&rows[1..3]).unwrap();
    let ok = (e4 - 13.0 / 6.0).abs() <= 0.05
        && increasing
        && (r5.e - 43.0 / 16.0).abs() <= 0.08
        && (slope + 13.0).abs() <= 0.05;
    for a in [10, 100, 1000, 10000] {
        reports.push(analyze(&FamilyInstance::new(4, a).unwrap()).unwrap());
    }
    reports.push(r5.clone());
    outcome(
        ok,
        format!(
            "e(P_4,a) {:.5} {:.5} {:.5} {:.5} (13/6 = {:.5}); e(P_5,1000) {:.5} (43/16 = {:.5}); slope {slope:.5}",
            e[0],
            e[1],
            e[2],
            e[3],
            13.0 / 6.0,
            r5.e,
            43.0 / 16.0
        ),
    )
}

fn criterion_7() -> Outcome {
    let inst = FamilyInstance::new(3, 10).unwrap();
    let cert = certify_exponent(&inst, None).unwrap();
    let measured = analyze(&inst).unwrap().e;
    let p = &inst.poly;
    let signs_ok = [
        (&cert.left.lo, cert.left.sign_lo),
        (&cert.left.hi, cert.left.sign_hi),
        (&cert.right.lo, cert.right.sign_lo),
        (&cert.right.hi, cert.right.sign_hi),
    ]
    .iter()
    .all(|(x, s)| sign(&horner(p, x)) == *s && *s != 0)
        && cert.left.sign_lo != cert.left.sign_hi
        && cert.right.sign_lo != cert.right.sign_hi
        && cert.left.hi <= cert.right.lo;
    let bound = &cert.right.hi - &cert.left.lo;
    let recomputed =
        -polysep::numfmt::ln_rational(&bound) / polysep::numfmt::ln_bigint(&p.height().unwrap());
    let ok = (1.45..=1.52).contains(&cert.e_certified)
        && cert.e_certified <= measured
        && signs_ok
        && (recomputed - cert.e_certified).abs() < 1e-12;
    outcome(
        ok,
        format!(
            "e_certified {:.6} <= measured {:.6}; endpoint signs re-evaluated exactly: {signs_ok}",
            cert.e_certified, measured
        ),
    )
}

fn criterion_8(reports: &mut Vec<SepReport>) -> Outcome {
    let mut monic = true;
    for d in 3..=12 {
        for a in 1..=20 {
            monic &= construct_compact(d, a)
                .unwrap()
                .reciprocal()
                .leading()
                .unwrap()
                .is_one();
        }
    }
    let p100 = analyze(&FamilyInstance::new(7, 100).unwrap()).unwrap();
    let q100 = analyze_reciprocal(&FamilyInstance::new(7, 100).unwrap()).unwrap();
    let q1000 = analyze_reciprocal(&FamilyInstance::new(7, 1000).unwrap()).unwrap();
    monic &= [&q100, &q1000]
        .iter()
        .all(|q| q.monic_variant && q.disc_nonzero);
    let gap = q100.e - (p100.e - 1.0);
    let target = 65.0 / 24.0;
    let trend = q100.e < q1000.e && q1000.e < target;
    let ok = monic && gap.abs() <= 0.02 && trend;
    let detail = format!(
        "monic {monic}; e(Q_7,100) - (e(P_7,100) - 1) = {gap:.2e}; e(Q_7,a) {:.5} -> {:.5} (65/24 = {target:.5})",
        q100.e, q1000.e
    );
    reports.extend([p100, q100, q1000]);
    outcome(ok, detail)
}

fn criterion_9(mahler_extra: &mut Vec<(u32, f64)>) -> Outcome {
    let rows = mignotte_scan(4, &[100, 1000], serial()).unwrap();
    let slope = slope_fit(&rows).unwrap();
    let heights_ok = (2..=1000u64).all(|a| {
        mignotte_family(4, a).unwrap().height().unwrap() == BigInt::from(2) * big_pow(a, 2)
    });
    mahler_extra.extend(rows.iter().map(|r| (4, r.e.unwrap())));
    outcome(
        (slope + 3.0).abs() <= 0.1 && heights_ok,
        format!("slope {slope:.5}; height 2a^2 for a in 2..=1000: {heights_ok}"),
    )
}

fn criterion_10(reports: &[SepReport], extra: &[(u32, f64)]) -> Outcome {
    let bad = reports
        .iter()
        .filter(|r| !(r.e <= (r.d - 1) as f64 && r.mahler_ok))
        .count()
        + extra.iter().filter(|(d, e)| *e > (*d - 1) as f64).count();
    outcome(
        bad == 0,
        format!("{} reports, violations: {bad}", reports.len() + extra.len()),
    )
}

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut done = 0;
    let mut worst_rel: f64 = 0.0;
    let mut worst_rec = f64::NEG_INFINITY;
    let mut bad = Vec::new();
    let hint = BigFloat::one().mul_pow2(-20);
    while done < 200 {
        let deg = rng.gen_range(2..=6usize);
        let mut c: Vec<BigInt> = (0..=deg)
            .map(|_| BigInt::from(rng.gen_range(-50i64..=50)))
            .collect();
        while c[deg].is_zero() {
            c[deg] = BigInt::from(rng.gen_range(-50i64..=50));
        }
        let p = IntPolynomial::new(c);
        if p.discriminant().unwrap().is_zero() {
            continue;
        }
        done += 1;
        let rs = match adaptive_roots(&p, &hint) {
            Ok(rs) => rs,
            Err(e) => {
                bad.push(format!("{p}: {e}"));
                continue;
            }
        };
        let rec = reconstruction_error(&p, &rs.roots, rs.prec_bits) + rs.prec_bits as f64 / 2.0;
        worst_rec = worst_rec.max(rec);
        let (sep, _) = separation(&rs).unwrap();
        let oracle = match durand_kerner(&p, 2 * rs.prec_bits) {
            Some(z) => min_distance(&z),
            None => {
                bad.push(format!("{p}: oracle did not settle"));
                continue;
            }
        };
        let rel = (sep.to_f64() - oracle).abs() / oracle;
        worst_rel = worst_rel.max(rel);
        if rec > 0.0 || rel > 1e-6 {
            bad.push(format!("{p}: reconstruction {rec:.1} rel {rel:.2e}"));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "200 polynomials, worst sep relative difference {worst_rel:.2e}, worst reconstruction error 2^({worst_rec:.1}) x 2^(-prec/2) {}",
            bad.join(" ")
        ),
    )
}

fn main() -> ExitCode {
    let mut reports = Vec::new();
    let mut extra = Vec::new();
    let mut failed = Vec::new();
    let mut report = |id: &str, title: &str, budget: f64, start: Instant, o: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        let pass = o.pass && secs <= budget;
        println!(
            "criterion {id}: {} {title} | {} | {secs:.2}s of {budget}s",
            if pass { "PASS" } else { "FAIL" },
            o.detail
        );
        if !pass {
            failed.push(id.to_string());
        }
    };

    let t = Instant::now();
    report("1", "construction identities", 10.0, t, criterion_1());
    let t = Instant::now();
    report("2", "printed families", 1.0, t, criterion_2());
    let t = Instant::now();
    report("3", "Eisenstein certificates", 30.0, t, criterion_3());
    let t = Instant::now();
    let (c4, c4b) = criterion_4();
    report("4", "close-pair location", 60.0, t, c4);
    report(
        "4b",
        "close-pair location, full printed center",
        60.0,
        t,
        c4b,
    );
    let t = Instant::now();
    report(
        "5",
        "separation constant",
        300.0,
        t,
        criterion_5(&mut reports),
    );
    let t = Instant::now();
    report(
        "6",
        "exponent convergence",
        300.0,
        t,
        criterion_6(&mut reports),
    );
    let t = Instant::now();
    report("7", "rigorous certificate", 10.0, t, criterion_7());
    let t = Instant::now();
    report(
        "8",
        "reciprocal polynomials",
        300.0,
        t,
        criterion_8(&mut reports),
    );
    let t = Instant::now();
    report("9", "comparison family", 60.0, t, criterion_9(&mut extra));
    let t = Instant::now();
    report("10", "Mahler bound", 1.0, t, criterion_10(&reports, &extra));
    let t = Instant::now();
    report("11", "root-finder oracle", 120.0, t, criterion_11());

    // The two-term reading of criterion 4 cannot hold at d = 5: the third
    // center term (3/25000) a^-14 exceeds the tolerance 10 a^-21.5.
    let expected: &[&str] = &["4"];
    let unexpected: Vec<&String> = failed
        .iter()
        .filter(|id| !expected.contains(&id.as_str()))
        .collect();
    println!(
        "summary: {} failing ({}), unexpected: {}",
        failed.len(),
        failed.join(", "),
        unexpected.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
