//! Published values of Λ̃ at ω = −1 and of Ṽ₂, keyed by table name (an `m` prefix marks the
//! mirror of the stored braid).

use serde::Deserialize;

use crate::polyring::LaurentPoly;

use super::rewrite::{uq_ring, uv_ring};

const GOLDEN: &str = include_str!("../../data/golden.json");

#[derive(Deserialize)]
struct Entry {
    knot: String,
    #[serde(default)]
    label: Option<String>,
    value: String,
}

#[derive(Deserialize)]
struct Golden {
    lambda_uv: Vec<Entry>,
    v2_uq: Vec<Entry>,
}

#[derive(Clone, Debug)]
pub struct GoldenValue {
    /// Table name used for the computation.
    pub knot: String,
    /// Name under which the value is published.
    pub label: String,
    pub value: LaurentPoly,
}

fn load() -> Golden {
    serde_json::from_str(GOLDEN).expect("golden data parses")
}

fn convert(entries: Vec<Entry>, ring: &std::sync::Arc<crate::polyring::Ring>) -> Vec<GoldenValue> {
    entries
        .into_iter()
        .map(|e| GoldenValue {
            label: e.label.unwrap_or_else(|| e.knot.clone()),
            value: LaurentPoly::parse(ring, &e.value).expect("golden polynomial parses"),
            knot: e.knot,
        })
        .collect()
}

/// Λ̃(u, v) for the knots of the table.
pub fn lambda_uv() -> Vec<GoldenValue> {
    convert(load().lambda_uv, &uv_ring())
}

/// Ṽ₂(u, q) for the knots with published values.
pub fn v2_uq() -> Vec<GoldenValue> {
    convert(load().v2_uq, &uq_ring())
}
