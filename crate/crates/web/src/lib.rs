//! Browser bindings for the demo page in `www/`.
//!
//! Each operation exists twice: a plain function returning JSON text (used by
//! the native tests) and a `wasm_bindgen` export that turns errors into JS
//! exceptions.

use serde_json::{json, Value};
use toricreg::formats::{parse_ideal, parse_variety};
use toricreg::{
    enumerate_saturated_ideals_with, graded_total_order, is_b_saturated, nice_strategy, quotient_hilbert_polynomial,
    reg_bound_from_filtration, stanley_decompose, verify_stanley, DefaultChoice, EnumerateOptions, Error, GradedOrder, MultiPoly,
    RegularityAssumption, ScriptedChoice, StanleyPair, VerifyMode,
};
use wasm_bindgen::prelude::*;

fn err(e: Error) -> String {
    format!("{}: {e}", e.name())
}

fn pairs_json(pairs: &[StanleyPair]) -> Vec<String> {
    pairs.iter().map(|p| p.to_string()).collect()
}

/// Hilbert polynomial of `S/I` together with a Stanley filtration and the regularity
/// region it certifies under the default baseline.
pub fn hilbert_report(variety: &str, ideal: &str) -> Result<String, String> {
    let x = parse_variety(variety, false).map_err(err)?;
    let i = parse_ideal(ideal, x.n()).map_err(err)?;
    let poly = quotient_hilbert_polynomial(&x, &i).map_err(err)?;
    let order = graded_total_order(&x, &GradedOrder::glex(x.r())).map_err(err)?;
    let pairs = stanley_decompose(&i, &mut nice_strategy(order.faces())).map_err(err)?.filtration();
    let region = reg_bound_from_filtration(&x, &i, &pairs, &RegularityAssumption::default_k());
    let region = match region {
        Ok(r) => Value::String(r.to_string()),
        Err(e) => Value::String(format!("unavailable ({})", e.name())),
    };
    let out = json!({
        "ideal": i.to_string(),
        "polynomial": poly.to_string(),
        "saturated": is_b_saturated(&i, &x).map_err(err)?,
        "filtration": pairs_json(&pairs),
        "regularity": region,
    });
    Ok(out.to_string())
}

/// The splitting tree of `S/I` in `n` variables; `choices` is an optional
/// comma-separated list of 1-based variables.
pub fn stanley_report(n: usize, ideal: &str, choices: &str) -> Result<String, String> {
    let i = parse_ideal(ideal, n).map_err(err)?;
    let script: Vec<usize> = choices
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| format!("Parse: {e}")))
        .collect::<Result<_, _>>()?;
    if script.iter().any(|&c| c == 0 || c > n) {
        return Err(format!("Parse: choices must lie in 1..={n}"));
    }
    let tree = if script.is_empty() {
        stanley_decompose(&i, &mut DefaultChoice)
    } else {
        stanley_decompose(&i, &mut ScriptedChoice::from_one_based(&script))
    }
    .map_err(err)?;
    let pairs = tree.filtration();
    let out = json!({
        "tree": tree.to_string(),
        "filtration": pairs_json(&pairs),
        "choices": tree.choices().iter().map(|c| c + 1).collect::<Vec<_>>(),
        "verified": verify_stanley(&i, &pairs, VerifyMode::Filtration, None).ok,
    });
    Ok(out.to_string())
}

/// Largest search the page will run before giving up.
pub const NODE_BUDGET: usize = 2_000_000;

/// All `B`-saturated monomial ideals with Hilbert polynomial `poly`.
pub fn enumerate_report(variety: &str, poly: &str) -> Result<String, String> {
    let x = parse_variety(variety, false).map_err(err)?;
    let p = MultiPoly::parse(poly, x.r()).map_err(err)?;
    let opts = EnumerateOptions { node_budget: NODE_BUDGET, ..EnumerateOptions::default() };
    let e = enumerate_saturated_ideals_with(&x, &p, &opts).map_err(err)?;
    let ideals: Vec<Value> = e.ideals.iter().map(|f| json!({ "ideal": f.ideal.to_string(), "witness": pairs_json(&f.witness) })).collect();
    let out = json!({
        "polynomial": p.to_string(),
        "count": ideals.len(),
        "gotzmann": e.gotzmann_number,
        "ideals": ideals,
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn hilbert(variety: &str, ideal: &str) -> Result<String, JsError> {
    hilbert_report(variety, ideal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn stanley(n: usize, ideal: &str, choices: &str) -> Result<String, JsError> {
    stanley_report(n, ideal, choices).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn enumerate(variety: &str, poly: &str) -> Result<String, JsError> {
    enumerate_report(variety, poly).map_err(|e| JsError::new(&e))
}
