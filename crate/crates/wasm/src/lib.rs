//! Browser bindings for the `polysep` demo page. The [`demo`] module holds
//! plain functions returning JSON strings so it can be tested natively; the
//! `#[wasm_bindgen]` exports are thin wrappers around it.

use wasm_bindgen::prelude::*;

pub mod demo {
    use polysep::numfmt::rational_string;
    use polysep::sep::{analyze, scan, ScanOptions};
    use polysep::{BigFloat, FamilyInstance, Round};
    use serde::Serialize;

    /// Inputs above these are refused to keep the page responsive.
    pub const MAX_D: u32 = 10;
    pub const MAX_A: u64 = 100_000;
    pub const MAX_ROWS: usize = 12;

    fn check(d: u32, a: u64) -> Result<(), String> {
        if !(3..=MAX_D).contains(&d) {
            return Err(format!("degree must be between 3 and {MAX_D}"));
        }
        if !(1..=MAX_A).contains(&a) {
            return Err(format!("a must be between 1 and {MAX_A}"));
        }
        Ok(())
    }

    fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
        serde_json::to_string(v).map_err(|e| e.to_string())
    }

    /// `P_{d,a}` with its prediction, as produced by `polysep gen`.
    pub fn family(d: u32, a: u64) -> Result<String, String> {
        check(d, a)?;
        let inst = FamilyInstance::new(d, a).map_err(|e| e.to_string())?;
        to_json(&inst.to_json())
    }

    #[derive(Serialize)]
    struct PlotRoot {
        re: f64,
        im: f64,
        log10_abs: f64,
    }

    #[derive(Serialize)]
    struct RootsView {
        d: u32,
        a: u64,
        roots: Vec<PlotRoot>,
        /// Close pair as offsets from their midpoint in units of the
        /// predicted half-gap; both are near -1 and +1.
        pair_offsets: [f64; 2],
        sep: String,
        sep_pred: String,
        ratio: f64,
        e: f64,
        e_pred: String,
        e_certified: Option<f64>,
        prec_bits: u32,
    }

    /// All roots for plotting plus the close-pair summary.
    pub fn roots(d: u32, a: u64) -> Result<String, String> {
        check(d, a)?;
        let inst = FamilyInstance::new(d, a).map_err(|e| e.to_string())?;
        let r = analyze(&inst).map_err(|e| e.to_string())?;
        let prec = r.prec_bits;
        let (zi, zj) = (&r.roots.roots[r.pair.0], &r.roots.roots[r.pair.1]);
        let mid = zi.re.add(&zj.re, prec).mul_pow2(-1);
        let half = r.sep_pred.mul_pow2(-1);
        let offset = |x: &BigFloat| x.sub(&mid, prec).div(&half, 64).to_f64();
        let mut pair_offsets = [offset(&zi.re), offset(&zj.re)];
        pair_offsets.sort_by(f64::total_cmp);
        let roots = r
            .roots
            .roots
            .iter()
            .map(|z| PlotRoot {
                re: z.re.to_f64(),
                im: z.im.to_f64(),
                log10_abs: z.abs(64).log2_abs() * std::f64::consts::LOG10_2,
            })
            .collect();
        to_json(&RootsView {
            d,
            a,
            roots,
            pair_offsets,
            sep: r.sep.round(64, Round::Nearest).to_sci_string(10),
            sep_pred: r.sep_pred.to_sci_string(10),
            ratio: r.ratio,
            e: r.e,
            e_pred: rational_string(&r.e_pred),
            e_certified: r.e_certified,
            prec_bits: prec,
        })
    }

    #[derive(Serialize)]
    struct ScanPoint {
        a: u64,
        status: &'static str,
        e: Option<f64>,
        e_certified: Option<f64>,
        log10_sep: Option<f64>,
    }

    #[derive(Serialize)]
    struct ScanView {
        d: u32,
        e_pred: f64,
        e_pred_text: String,
        rows: Vec<ScanPoint>,
    }

    /// Exponent measurements along `a = a_from * factor^k <= a_to`.
    pub fn sweep(d: u32, a_from: u64, a_to: u64, factor: f64) -> Result<String, String> {
        check(d, a_from)?;
        check(d, a_to)?;
        let values =
            polysep::sep::geometric_sweep(a_from, a_to, factor).map_err(|e| e.to_string())?;
        if values.len() > MAX_ROWS {
            return Err(format!("at most {MAX_ROWS} values of a; raise the factor"));
        }
        let rows = scan(
            d,
            &values,
            ScanOptions {
                jobs: 1,
                timing: false,
            },
        )
        .map_err(|e| e.to_string())?;
        let e_pred = polysep::family::exp_pred(d);
        to_json(&ScanView {
            d,
            e_pred: polysep::numfmt::rational_to_f64(&e_pred),
            e_pred_text: rational_string(&e_pred),
            rows: rows
                .iter()
                .map(|r| ScanPoint {
                    a: r.a,
                    status: r.status.as_str(),
                    e: r.e,
                    e_certified: r.e_certified,
                    log10_sep: r.ln_sep().map(|l| l / std::f64::consts::LN_10),
                })
                .collect(),
        })
    }
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn family_json(d: u32, a: u32) -> Result<String, JsValue> {
    js(demo::family(d, a as u64))
}

#[wasm_bindgen]
pub fn roots_json(d: u32, a: u32) -> Result<String, JsValue> {
    js(demo::roots(d, a as u64))
}

#[wasm_bindgen]
pub fn scan_json(d: u32, a_from: u32, a_to: u32, factor: f64) -> Result<String, JsValue> {
    js(demo::sweep(d, a_from as u64, a_to as u64, factor))
}
