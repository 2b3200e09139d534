use std::collections::BTreeMap;

use super::laurent::{LaurentPoly, Term};
use super::ring::Monomial;
use super::PolyError;

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn galois(p: &LaurentPoly, k: u32) -> Result<LaurentPoly, PolyError> {
    let ring = p.ring();
    let wk = LaurentPoly::omega(ring)?.pow(k);
    p.substitute(ring, &[(super::ring::ROOT_NAME, wk)])
}

/// Exact division over Z[w]: multiply through by the Galois conjugates of the divisor
/// so that the divisor becomes an integer polynomial, then divide term by term.
pub(crate) fn div_exact_cyclotomic(p: &LaurentPoly, d: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let ring = p.ring().clone();
    let n = ring.order().unwrap();
    let ws = ring.w_slot().unwrap();
    let mut conj = LaurentPoly::one(&ring);
    for k in 2..n {
        if gcd(k, n) == 1 {
            conj = &conj * &galois(d, k)?;
        }
    }
    let norm = d * &conj;
    if norm.terms().iter().any(|t| t.0.exp(ws) != 0) {
        return Err(PolyError::NotDivisible);
    }
    let num = p * &conj;
    let phi = ring.phi_deg().max(1);
    let strip = |m: Monomial| m.with_slot(ws, 0);
    let mut rem: BTreeMap<Monomial, Vec<i64>> = BTreeMap::new();
    for &(m, c) in num.terms() {
        rem.entry(strip(m)).or_insert_with(|| vec![0; phi])[m.exp(ws) as usize] += c;
    }
    let nterms = norm.terms();
    let (dlm, dlc) = *nterms.last().unwrap();
    let floor = strip(num.terms()[0].0).mul(nterms[0].0.inv());
    let mut quot: Vec<Term> = Vec::new();
    while let Some((&rm, rv)) = rem.iter().next_back() {
        let rv = rv.clone();
        if rv.iter().all(|&c| c == 0) {
            rem.remove(&rm);
            continue;
        }
        if rv.iter().any(|&c| c % dlc != 0) {
            return Err(PolyError::NotDivisible);
        }
        let qm = rm.mul(dlm.inv());
        if qm < floor {
            return Err(PolyError::NotDivisible);
        }
        let qv: Vec<i64> = rv.iter().map(|&c| c / dlc).collect();
        for (j, &c) in qv.iter().enumerate() {
            if c != 0 {
                quot.push((qm.with_slot(ws, j as i32), c));
            }
        }
        for &(m, c) in nterms {
            let e = rem.entry(m.mul(qm)).or_insert_with(|| vec![0; phi]);
            for (j, &q) in qv.iter().enumerate() {
                e[j] -= c * q;
            }
        }
    }
    Ok(LaurentPoly::from_terms(&ring, quot))
}
