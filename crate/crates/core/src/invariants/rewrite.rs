//! Canonical rewritings of symmetric Laurent polynomials: Λ at ω = −1 in the invariants
//! u, v of the order-12 group, and V₂ in u = t + t⁻¹ − q − q⁻¹.

use std::sync::Arc;

use thiserror::Error;

use crate::polyring::{LaurentPoly, Monomial, PolyError, Ring};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RewriteError {
    #[error("input is not invariant under {0}")]
    NotInvariant(String),
    #[error("reduction left a residue: {0}")]
    Residue(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

const MAX_STEPS: usize = 1 << 16;

/// Integer ring Z[t1^{±1}, t2^{±1}] holding Λ at ω = ±1.
pub fn lambda_ring() -> Arc<Ring> {
    Ring::integer(&["t1", "t2"])
}

pub fn uv_ring() -> Arc<Ring> {
    Ring::integer(&["u", "v"])
}

/// Integer ring Z[q^{±1}, t^{±1}] holding V₂.
pub fn qt_ring() -> Arc<Ring> {
    Ring::integer(&["q", "t"])
}

pub fn uq_ring() -> Arc<Ring> {
    Ring::integer(&["q", "u"])
}

fn parse(ring: &Arc<Ring>, s: &str) -> LaurentPoly {
    LaurentPoly::parse(ring, s).expect("fixed expression")
}

/// u and v as polynomials in s = t1, t = t2.
pub fn u_expansion(ring: &Arc<Ring>) -> LaurentPoly {
    parse(ring, "t1 + t1^-1 + t2 + t2^-1 - t1 t2 - t1^-1 t2^-1 - 2")
}

pub fn v_expansion(ring: &Arc<Ring>) -> LaurentPoly {
    parse(ring, "t1^2 t2 + t1^-2 t2^-1 + t1 t2^2 + t1^-1 t2^-2 - t1 t2^-1 - t1^-1 t2 - 2")
}

/// The three generating involutions of the order-12 group, as substitutions of (t1, t2).
pub fn symmetry_generators(ring: &Arc<Ring>) -> [(&'static str, [(&'static str, LaurentPoly); 2]); 3] {
    [
        ("t1 <-> t2", [("t1", parse(ring, "t2")), ("t2", parse(ring, "t1"))]),
        ("t2 -> -1/(t1 t2)", [("t1", parse(ring, "t1")), ("t2", parse(ring, "-t1^-1 t2^-1"))]),
        ("(t1, t2) -> (1/t1, 1/t2)", [("t1", parse(ring, "t1^-1")), ("t2", parse(ring, "t2^-1"))]),
    ]
}

fn with_bindings(p: &LaurentPoly, bindings: &[(&str, LaurentPoly)]) -> Result<LaurentPoly, PolyError> {
    p.substitute(p.ring(), bindings)
}

/// First generator of the order-12 group that does not fix `p`, if any.
pub fn order12_violation(p: &LaurentPoly) -> Result<Option<&'static str>, RewriteError> {
    let p = p.embed(&lambda_ring())?;
    for (name, b) in symmetry_generators(p.ring()) {
        if with_bindings(&p, &b)? != p {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

/// Λ(t1, t2) as a polynomial in u, v. The leading term under the order "weight 2i + j,
/// then i" of s^i t^j is matched by ±u^a v^b with b = i − j, a = 2j − i.
pub fn rewrite_uv(p: &LaurentPoly) -> Result<LaurentPoly, RewriteError> {
    let ring = lambda_ring();
    let p = p.embed(&ring)?;
    if let Some(g) = order12_violation(&p)? {
        return Err(RewriteError::NotInvariant(g.to_string()));
    }
    let out_ring = uv_ring();
    let (u, v) = (u_expansion(&ring), v_expansion(&ring));
    let key = |m: &Monomial| (2 * m.exp(0) + m.exp(1), m.exp(0));
    let mut rem = p;
    let mut terms = Vec::new();
    for _ in 0..MAX_STEPS {
        let Some(&(m, c)) = rem.terms().iter().max_by_key(|(m, _)| key(m)) else {
            return Ok(LaurentPoly::from_terms(&out_ring, terms));
        };
        let (i, j) = (m.exp(0), m.exp(1));
        let (a, b) = (2 * j - i, i - j);
        if a < 0 || b < 0 {
            return Err(RewriteError::Residue(rem.to_string()));
        }
        let sign = if a % 2 == 0 { c } else { -c };
        terms.push((Monomial::from_slots(&[a, b]), sign));
        let sub = (&u.pow(a as u32) * &v.pow(b as u32)).scale(sign);
        rem = &rem - &sub;
    }
    Err(RewriteError::Residue("reduction did not terminate".into()))
}

/// Substitute the expansions of u and v.
pub fn expand_uv(p: &LaurentPoly) -> Result<LaurentPoly, RewriteError> {
    let ring = lambda_ring();
    let p = p.embed(&uv_ring())?;
    Ok(p.substitute(&ring, &[("u", u_expansion(&ring)), ("v", v_expansion(&ring))])?)
}

pub fn u_of_tq(ring: &Arc<Ring>) -> LaurentPoly {
    parse(ring, "t + t^-1 - q - q^-1")
}

/// V₂(t, q) as a polynomial in u, q: peel off the top t-degree with powers of u.
pub fn rewrite_uq(p: &LaurentPoly) -> Result<LaurentPoly, RewriteError> {
    let ring = qt_ring();
    let p = p.embed(&ring)?;
    if with_bindings(&p, &[("t", parse(&ring, "t^-1"))])? != p {
        return Err(RewriteError::NotInvariant("t -> 1/t".into()));
    }
    let out_ring = uq_ring();
    let u = u_of_tq(&ring);
    let mut rem = p;
    let mut out = LaurentPoly::zero(&out_ring);
    for _ in 0..MAX_STEPS {
        let Some(k) = rem.terms().iter().map(|(m, _)| m.exp(1)).max() else {
            return Ok(out);
        };
        if k < 0 {
            return Err(RewriteError::Residue(rem.to_string()));
        }
        let coeff: Vec<_> = rem.terms().iter().filter(|(m, _)| m.exp(1) == k).map(|&(m, c)| (Monomial::var(0, m.exp(0)), c)).collect();
        let c_qt = LaurentPoly::from_terms(&ring, coeff.clone());
        rem = &rem - &(&c_qt * &u.pow(k as u32));
        let c_uq: Vec<_> = coeff.into_iter().map(|(m, c)| (Monomial::from_slots(&[m.exp(0), k]), c)).collect();
        out = &out + &LaurentPoly::from_terms(&out_ring, c_uq);
    }
    Err(RewriteError::Residue("reduction did not terminate".into()))
}

pub fn expand_uq(p: &LaurentPoly) -> Result<LaurentPoly, RewriteError> {
    let ring = qt_ring();
    let p = p.embed(&uq_ring())?;
    Ok(p.substitute(&ring, &[("u", u_of_tq(&ring))])?)
}
