//! Browser bindings: knot table listing, invariant evaluation and the Alexander polynomial of
//! a braid closure. Every export returns a string, or an error message on failure.

use wasm_bindgen::prelude::*;

use knotpoly::invariants::{compute_ado, compute_colored_jones, compute_lambda, compute_vn, Family, KnotInput};
use knotpoly::knotdiag::{builtin_knot_table, parse_braid_word};

/// Names of the built-in knots, one per line; prefix `m` for a mirror image.
#[wasm_bindgen]
pub fn knot_names() -> String {
    builtin_knot_table().into_iter().map(|e| e.name).collect::<Vec<_>>().join("\n")
}

fn input(knot: &str) -> Result<KnotInput, String> {
    let knot = knot.trim();
    if knot.chars().next().is_some_and(|c| c == '-' || c == 's' || c == 'σ') || knot.contains(' ') {
        let b = parse_braid_word(knot, None).map_err(|e| e.to_string())?;
        Ok(KnotInput::from_braid(&b))
    } else {
        KnotInput::named(knot).map_err(|e| e.to_string())
    }
}

/// Evaluate `invariant` ("ado", "jones", "lambda" or "vn") with parameter `param` on a table
/// knot or a braid word. Returns JSON with the polynomial and, for Lambda at N = 2 and V_2,
/// the canonical form.
#[wasm_bindgen]
pub fn compute(knot: &str, invariant: &str, param: u32) -> Result<String, String> {
    let k = input(knot)?;
    let r = match invariant {
        "ado" => compute_ado(&k, param),
        "jones" => compute_colored_jones(&k, param),
        "lambda" => compute_lambda(&k, param),
        "vn" => compute_vn(&k, param),
        other => return Err(format!("unknown invariant {}", other)),
    }
    .map_err(|e| e.to_string())?;
    let form = match (r.family, &r.form) {
        (Family::Lambda(_), Some(f)) => Some(f.to_string_collected("v")),
        (Family::Vn(_), Some(f)) => Some(f.to_string_collected("u")),
        _ => None,
    }
    .transpose()
    .map_err(|e| e.to_string())?;
    let j = serde_json::json!({
        "knot": r.knot,
        "invariant": invariant,
        "param": param,
        "polynomial": r.polynomial.to_string(),
        "form": form,
        "runtime_ms": r.runtime_ms,
    });
    Ok(j.to_string())
}

/// Alexander polynomial of the closure of a braid word such as "1 1 1" or "s1 s2^-1 s1 s2^-1".
#[wasm_bindgen]
pub fn alexander(braid: &str) -> Result<String, String> {
    let b = parse_braid_word(braid, None).map_err(|e| e.to_string())?;
    let r = compute_ado(&KnotInput::from_braid(&b), 2).map_err(|e| e.to_string())?;
    Ok(r.polynomial.to_string())
}
