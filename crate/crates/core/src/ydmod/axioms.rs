use crate::lincomb::LinComb;
use crate::polyring::LaurentPoly;
use crate::report::Report;

use super::{Side, YDModule};

type T2 = LinComb<(usize, usize)>;
type T3 = LinComb<(usize, usize, usize)>;

fn first<I: Iterator<Item = Option<String>>>(mut it: I) -> Option<String> {
    it.find_map(|w| w)
}

/// Exhaustive check of the module, comodule, compatibility and automorphism identities
/// over module basis x host basis (bounded by the host truncation).
pub fn verify_yd_axioms(m: &YDModule) -> Report {
    match m.side() {
        Side::Left => verify_left(m),
        Side::Right => verify_right(m),
    }
}

fn act_lin(m: &YDModule, v: &LinComb<usize>, w: usize) -> LinComb<usize> {
    let mut out = LinComb::new();
    for (&k, c) in v.iter() {
        out.add_scaled(m.act(k, w), c);
    }
    out
}

fn equivariance(m: &YDModule, rep: &mut Report) {
    let h = m.host();
    let bound = m.degree_bound();
    let w = first((0..m.dim()).map(|i| {
        for (&(a, k), _) in m.coaction(i).iter() {
            let (da, dk, di) = (h.degree(a), m.degree(k), m.degree(i));
            if [da[0] + dk[0], da[1] + dk[1]] != di {
                return Some(format!("coaction of {}", m.name(i)));
            }
        }
        for a in 0..h.dim() {
            if m.total_degree(i) + h.total_degree(a) > bound {
                continue;
            }
            for (&k, _) in m.act(i, a).iter() {
                let (da, dk, di) = (h.degree(a), m.degree(k), m.degree(i));
                if [da[0] + di[0], da[1] + di[1]] != dk {
                    return Some(format!("action of {} on {}", h.word_name(a), m.name(i)));
                }
            }
        }
        (m.phi(i) != h.phi_degree(m.degree(i))).then(|| format!("phi on {}", m.name(i)))
    }));
    rep.record("structure maps graded and phi-equivariant", w);
}

fn verify_left(m: &YDModule) -> Report {
    let h = m.host();
    let ring = h.ring().clone();
    let bound = m.degree_bound();
    let e = |i: usize| LinComb::single(i, LaurentPoly::one(&ring));
    let mut rep = Report::new();
    equivariance(m, &mut rep);

    let w = first((0..m.dim()).map(|i| {
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                if m.total_degree(i) + h.total_degree(a) + h.total_degree(b) > bound {
                    continue;
                }
                let lhs = act_lin(m, m.act(i, b), a);
                let mut rhs = LinComb::new();
                if let Some((ab, u)) = h.mul_basis(a, b) {
                    rhs.add_scaled(m.act(i, ab), &h.unit_poly(u));
                }
                if lhs != rhs {
                    return Some(format!("{} . ({} . {})", h.word_name(a), h.word_name(b), m.name(i)));
                }
            }
        }
        None
    }));
    rep.record("left action", w);

    let w = first((0..m.dim()).map(|i| (*m.act(i, 0) != e(i)).then(|| m.name(i).to_string())));
    rep.record("left action of unit", w);

    let w = first((0..m.dim()).map(|i| {
        let mut lhs = T3::new();
        let mut rhs = T3::new();
        for (&(a, k), c) in m.coaction(i).iter() {
            for (&(b, k2), c2) in m.coaction(k).iter() {
                lhs.add_term((a, b, k2), c * c2);
            }
            for (&(a1, a2), c2) in h.coproduct_basis(a).iter() {
                rhs.add_term((a1, a2, k), c * c2);
            }
        }
        (lhs != rhs).then(|| m.name(i).to_string())
    }));
    rep.record("left coaction", w);

    let w = first((0..m.dim()).map(|i| {
        let mut out = LinComb::new();
        for (&(a, k), c) in m.coaction(i).iter() {
            if a == 0 {
                out.add_term(k, c.clone());
            }
        }
        (out != e(i)).then(|| m.name(i).to_string())
    }));
    rep.record("left coaction of counit", w);

    let w = first((0..m.dim()).map(|i| {
        for a in 0..h.dim() {
            if m.total_degree(i) + h.total_degree(a) > bound {
                continue;
            }
            let mut lhs = T2::new();
            let mut rhs = T2::new();
            for (&(h1, h2), c) in h.coproduct_basis(a).iter() {
                let q0 = h.bichar(h.degree(h2), m.degree(i)).mul(h.phi(h2));
                for (&m1, c1) in m.act(i, h1).iter() {
                    for (&(k, mp), c2) in m.coaction(m1).iter() {
                        let Some((kh, u)) = h.mul_basis(k, h2) else { continue };
                        let u = u.mul(q0).mul(h.bichar(m.degree(mp), h.degree(h2)));
                        lhs.add_term((kh, mp), (&(c * c1) * c2).mul_unit(u));
                    }
                }
                for (&(n, mpp), c3) in m.coaction(i).iter() {
                    let Some((hn, u)) = h.mul_basis(h1, n) else { continue };
                    let u = u.mul(h.bichar(h.degree(h2), h.degree(n)));
                    for (&m3, c4) in m.act(mpp, h2).iter() {
                        rhs.add_term((hn, m3), (&(c * c3) * c4).mul_unit(u));
                    }
                }
            }
            if lhs != rhs {
                return Some(format!("{} (x) {}", h.word_name(a), m.name(i)));
            }
        }
        None
    }));
    rep.record("Yetter-Drinfel'd compatibility (left)", w);
    rep
}

fn verify_right(m: &YDModule) -> Report {
    let h = m.host();
    let ring = h.ring().clone();
    let bound = m.degree_bound();
    let e = |i: usize| LinComb::single(i, LaurentPoly::one(&ring));
    let mut rep = Report::new();
    equivariance(m, &mut rep);

    let w = first((0..m.dim()).map(|i| {
        let mut lhs = T3::new();
        let mut rhs = T3::new();
        for (&(a, k), c) in m.coaction(i).iter() {
            for (&(b, k2), c2) in m.coaction(k).iter() {
                lhs.add_term((k2, b, a), c * c2);
            }
            for (&(a1, a2), c2) in h.coproduct_basis(a).iter() {
                rhs.add_term((k, a1, a2), c * c2);
            }
        }
        (lhs != rhs).then(|| m.name(i).to_string())
    }));
    rep.record("right coaction", w);

    let w = first((0..m.dim()).map(|i| {
        let mut out = LinComb::new();
        for (&(a, k), c) in m.coaction(i).iter() {
            if a == 0 {
                out.add_term(k, c.clone());
            }
        }
        (out != e(i)).then(|| m.name(i).to_string())
    }));
    rep.record("right coaction of counit", w);

    let w = first((0..m.dim()).map(|i| {
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                if m.total_degree(i) + h.total_degree(a) + h.total_degree(b) > bound {
                    continue;
                }
                let lhs = act_lin(m, m.act(i, a), b);
                let mut rhs = LinComb::new();
                if let Some((ab, u)) = h.mul_basis(a, b) {
                    rhs.add_scaled(m.act(i, ab), &h.unit_poly(u));
                }
                if lhs != rhs {
                    return Some(format!("({} . {}) . {}", m.name(i), h.word_name(a), h.word_name(b)));
                }
            }
        }
        None
    }));
    rep.record("right action", w);

    let w = first((0..m.dim()).map(|i| (*m.act(i, 0) != e(i)).then(|| m.name(i).to_string())));
    rep.record("right action of unit", w);

    let w = first((0..m.dim()).map(|i| {
        for a in 0..h.dim() {
            if m.total_degree(i) + h.total_degree(a) > bound {
                continue;
            }
            let mut lhs = T2::new();
            let mut rhs = T2::new();
            for (&(h1, h2), c) in h.coproduct_basis(a).iter() {
                let q0 = h.bichar(m.degree(i), h.degree(h1)).mul(h.phi(h1));
                for (&m1, c1) in m.act(i, h2).iter() {
                    for (&(k, mp), c2) in m.coaction(m1).iter() {
                        let Some((hk, u)) = h.mul_basis(h1, k) else { continue };
                        let u = u.mul(q0).mul(h.bichar(h.degree(h1), m.degree(mp)));
                        lhs.add_term((mp, hk), (&(c * c1) * c2).mul_unit(u));
                    }
                }
                for (&(n, mpp), c3) in m.coaction(i).iter() {
                    let Some((nh, u)) = h.mul_basis(n, h2) else { continue };
                    let u = u.mul(h.bichar(h.degree(n), h.degree(h1)));
                    for (&m3, c4) in m.act(mpp, h1).iter() {
                        rhs.add_term((m3, nh), (&(c * c3) * c4).mul_unit(u));
                    }
                }
            }
            if lhs != rhs {
                return Some(format!("{} (x) {}", m.name(i), h.word_name(a)));
            }
        }
        None
    }));
    rep.record("Yetter-Drinfel'd compatibility (right)", w);
    rep
}
