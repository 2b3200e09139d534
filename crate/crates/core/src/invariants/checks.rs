//! Identities relating the invariant families of one knot, and comparisons across knots.

use std::sync::Arc;

use crate::polyring::{LaurentPoly, PolyError, Ring};
use crate::report::Report;

use super::rewrite::{lambda_ring, order12_violation};
use super::{Family, InvariantResult};

fn poly(ring: &Arc<Ring>, s: &str) -> LaurentPoly {
    LaurentPoly::parse(ring, s).expect("fixed expression")
}

fn eq_check(rep: &mut Report, name: impl Into<String>, lhs: Result<LaurentPoly, PolyError>, rhs: Result<LaurentPoly, PolyError>) {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) => {
            let detail = if a == b { String::new() } else { format!("{} != {}", a, b) };
            rep.push(name, a == b, detail);
        }
        (Err(e), _) | (_, Err(e)) => rep.push(name, false, e.to_string()),
    }
}

/// Λ(t1, t2) = Λ(t2, t1).
pub fn swap_symmetric(p: &LaurentPoly) -> Result<bool, PolyError> {
    let r = p.ring();
    Ok(p.substitute(r, &[("t1", LaurentPoly::var(r, "t2")?), ("t2", LaurentPoly::var(r, "t1")?)])? == *p)
}

/// V(t, q) = V(1/t, q).
pub fn t_inversion_symmetric(p: &LaurentPoly) -> Result<bool, PolyError> {
    let r = p.ring();
    Ok(p.substitute(r, &[("t", LaurentPoly::var_pow(r, "t", -1)?)])? == *p)
}

/// Δ(t1) Δ(t2) from Δ(t).
pub fn alexander_product(delta: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let r = lambda_ring();
    let a = delta.substitute(&r, &[("t", LaurentPoly::var(&r, "t1")?)])?;
    let b = delta.substitute(&r, &[("t", LaurentPoly::var(&r, "t2")?)])?;
    Ok(&a * &b)
}

/// V₂(q, q).
pub fn v2_diagonal(v2: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let r = Ring::integer(&["q"]);
    v2.substitute(&r, &[("t", LaurentPoly::var(&r, "q")?)])
}

/// V(t, q0) for a constant q0 = ±1.
pub fn v_at_q(v: &LaurentPoly, q0: i64) -> Result<LaurentPoly, PolyError> {
    let r = Ring::integer(&["t"]);
    v.substitute(&r, &[("q", LaurentPoly::constant(&r, q0))])
}

/// Λ(−t, −1/t), the left side of the duality with V₂(t, −1).
pub fn lambda_duality_side(lambda: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let r = Ring::integer(&["t"]);
    lambda.substitute(&r, &[("t1", poly(&r, "-t")), ("t2", poly(&r, "-t^-1"))])
}

/// ADO_ω(ω^{1−n}) and J_n(ω) as elements of Z[ω], ω of order N.
pub fn ado_jones_sides(ado: &LaurentPoly, n_root: u32, jones: &LaurentPoly, n_color: u32) -> Result<(LaurentPoly, LaurentPoly), PolyError> {
    let r = Ring::cyclotomic(n_root, &["t"]);
    let w = LaurentPoly::omega(&r)?;
    let lhs = ado.substitute(&r, &[("t", w.powi(1 - n_color as i32)?)])?;
    let rhs = jones.substitute(&r, &[("q", w)])?;
    Ok((lhs, rhs))
}

/// V(t, 1/q): the mirror image rule checked against a computed mirror.
pub fn q_inverted(v: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let r = v.ring();
    v.substitute(r, &[("q", LaurentPoly::var_pow(r, "q", -1)?)])
}

fn find(results: &[&InvariantResult], f: Family) -> Option<LaurentPoly> {
    results.iter().find(|r| r.family == f).map(|r| r.polynomial.clone())
}

/// All identities applicable to the results computed for one knot.
pub fn run_checks(genus: Option<u32>, results: &[&InvariantResult]) -> Report {
    let mut rep = Report::new();
    for r in results {
        if let Family::Lambda(n) = r.family {
            let ok = swap_symmetric(&r.polynomial);
            rep.push(format!("Lambda_{} symmetric under t1 <-> t2", n), ok == Ok(true), "");
        }
    }
    let delta = find(results, Family::Ado(2));
    let lm1 = find(results, Family::Lambda(2));
    let v2 = find(results, Family::Vn(2));
    if let Some(l) = &lm1 {
        match order12_violation(l) {
            Ok(None) => rep.push("Lambda_-1 invariant under the order-12 group", true, ""),
            Ok(Some(g)) => rep.push("Lambda_-1 invariant under the order-12 group", false, g),
            Err(e) => rep.push("Lambda_-1 invariant under the order-12 group", false, e.to_string()),
        }
    }
    if let (Some(l1), Some(d)) = (find(results, Family::Lambda(1)), &delta) {
        eq_check(&mut rep, "Lambda_1 = Delta(t1) Delta(t2)", Ok(l1), alexander_product(d));
    }
    if let Some(v) = &v2 {
        let q_t = v.ring().var_index("q").is_some();
        rep.push("V_2 in Z[q, t]", q_t, if q_t { "" } else { "half powers of q" });
        if q_t {
            rep.push("V_2 symmetric under t -> 1/t", t_inversion_symmetric(v) == Ok(true), "");
            eq_check(&mut rep, "V_2(q, q) = 1", v2_diagonal(v), Ok(LaurentPoly::one(&Ring::integer(&["q"]))));
            if let Some(d) = &delta {
                eq_check(&mut rep, "V_2(t, 1) = Delta(t)^2", v_at_q(v, 1), d.embed(&Ring::integer(&["t"])).map(|d| &d * &d));
            }
            if let Some(l) = &lm1 {
                eq_check(&mut rep, "Lambda_-1(-t, -1/t) = V_2(t, -1)", lambda_duality_side(l), v_at_q(v, -1));
            }
            if let Some(g) = genus {
                match v.degree_span("t") {
                    Ok(d) => rep.push("deg_t V_2 = 4 g", d == 4 * g, format!("deg {} genus {}", d, g)),
                    Err(e) => rep.push("deg_t V_2 = 4 g", false, e.to_string()),
                }
            }
        }
    }
    for a in results {
        let Family::Ado(nr) = a.family else { continue };
        for j in results {
            let Family::ColoredJones(nc) = j.family else { continue };
            let name = format!("ADO_{}(w^(1-{})) = J_{}(w)", nr, nc, nc);
            match ado_jones_sides(&a.polynomial, nr, &j.polynomial, nc) {
                Ok((l, r)) => eq_check(&mut rep, name, Ok(l), Ok(r)),
                Err(e) => rep.push(name, false, e.to_string()),
            }
        }
    }
    rep
}
