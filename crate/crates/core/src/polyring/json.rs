use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::laurent::{LaurentPoly, Term};
use super::ring::{CoeffRing, Monomial, Ring};
use super::text::serial_order;
use super::PolyError;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PolyJson {
    pub ring: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermJson {
    pub coeff: Value,
    pub exps: BTreeMap<String, i32>,
}

fn parse_ring_tag(tag: &str) -> Result<CoeffRing, PolyError> {
    if tag == "Z" {
        return Ok(CoeffRing::Integer);
    }
    tag.strip_prefix("Z[w,")
        .and_then(|r| r.strip_suffix(']'))
        .and_then(|n| n.trim().parse::<u32>().ok())
        .map(CoeffRing::Cyclotomic)
        .ok_or_else(|| PolyError::Parse(format!("unknown ring tag {}", tag)))
}

impl LaurentPoly {
    pub fn to_json(&self) -> PolyJson {
        let ring = self.ring();
        let terms = serial_order(self)
            .into_iter()
            .map(|(m, c)| {
                let exps = (0..ring.vars().len())
                    .filter(|&s| m.exp(s) != 0)
                    .map(|s| (ring.vars()[s].clone(), m.exp(s)))
                    .collect();
                let coeff = match ring.coeff_ring() {
                    CoeffRing::Integer => Value::from(c.to_int().unwrap()),
                    CoeffRing::Cyclotomic(_) => Value::from(c.coeffs().to_vec()),
                };
                TermJson { coeff, exps }
            })
            .collect();
        PolyJson { ring: ring.coeff_ring().to_string(), vars: Some(ring.vars().to_vec()), terms }
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self.to_json()).expect("serializable")
    }

    /// Decode; without an explicit variable list the ring uses the sorted exponent keys.
    pub fn from_json(j: &PolyJson) -> Result<LaurentPoly, PolyError> {
        let coeff = parse_ring_tag(&j.ring)?;
        let names: Vec<String> = match &j.vars {
            Some(v) => v.clone(),
            None => {
                let mut all: Vec<String> = j.terms.iter().flat_map(|t| t.exps.keys().cloned()).collect();
                all.sort();
                all.dedup();
                all
            }
        };
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring: Arc<Ring> = Ring::new(&refs, coeff)?;
        let mut raw: Vec<Term> = Vec::new();
        for t in &j.terms {
            let mut m = Monomial::ONE;
            for (name, &e) in &t.exps {
                let slot = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
                m = m.mul(Monomial::var(slot, e));
            }
            match (&t.coeff, ring.w_slot()) {
                (Value::Number(n), _) => {
                    raw.push((m, n.as_i64().ok_or_else(|| PolyError::Parse("non-integer coefficient".into()))?))
                }
                (Value::Array(a), Some(ws)) => {
                    for (k, v) in a.iter().enumerate() {
                        let c = v.as_i64().ok_or_else(|| PolyError::Parse("non-integer coefficient".into()))?;
                        raw.push((m.with_slot(ws, k as i32), c));
                    }
                }
                _ => return Err(PolyError::Parse("coefficient does not match ring".into())),
            }
        }
        Ok(LaurentPoly::from_terms(&ring, raw))
    }

    pub fn from_json_str(s: &str) -> Result<LaurentPoly, PolyError> {
        let j: PolyJson = serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))?;
        Self::from_json(&j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = Ring::integer(&["t", "q"]);
        let p = LaurentPoly::parse(&r, "3 t^-1 q^2 - q + 7").unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(LaurentPoly::from_json_str(&s).unwrap(), p);
    }

    #[test]
    fn json_cyclotomic() {
        let r = Ring::cyclotomic(4, &["t"]);
        let p = LaurentPoly::parse(&r, "w t + 2 - w").unwrap();
        let j = p.to_json();
        assert_eq!(j.ring, "Z[w,4]");
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn json_without_vars() {
        let s = r#"{"ring":"Z","terms":[{"coeff":1,"exps":{"t":-1}},{"coeff":-1,"exps":{}}]}"#;
        let p = LaurentPoly::from_json_str(s).unwrap();
        assert_eq!(p.to_string(), "t^-1 - 1");
    }
}
