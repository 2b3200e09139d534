use crate::lincomb::LinComb;
use crate::polyring::LaurentPoly;
use crate::report::Report;

use super::{AlgebraKind, NicholsAlgebra, TensorElement};

fn first<I: Iterator<Item = Option<String>>>(mut it: I) -> Option<String> {
    it.find_map(|w| w)
}

/// Exhaustive check of the braided Hopf algebra axioms and of the compatibility of
/// the scaling automorphism. On a truncated algebra only tuples whose total degree
/// stays within the truncation are checked.
pub fn verify_hopf_axioms(h: &NicholsAlgebra) -> Report {
    let d = h.dim();
    let ring = h.ring().clone();
    let bound = match h.kind() {
        AlgebraKind::Rank1Generic { truncation } | AlgebraKind::Rank2Generic { truncation } => truncation as i32,
        _ => i32::MAX,
    };
    let deg = |i: usize| h.total_degree(i);
    let e = |i: usize| LinComb::single(i, LaurentPoly::one(&ring));
    let name = |i: usize| h.word_name(i);
    let mut rep = Report::new();

    let graded = first((0..d).map(|i| {
        let di = h.degree(i);
        for j in 0..d {
            if let Some((k, _)) = h.mul_basis(i, j) {
                let dj = h.degree(j);
                if h.degree(k) != [di[0] + dj[0], di[1] + dj[1]] {
                    return Some(format!("product {}*{}", name(i), name(j)));
                }
            }
        }
        for (&(a, b), _) in h.coproduct_basis(i).iter() {
            let (da, db) = (h.degree(a), h.degree(b));
            if [da[0] + db[0], da[1] + db[1]] != di {
                return Some(format!("coproduct of {}", name(i)));
            }
        }
        for (&a, _) in h.antipode_basis(i).iter() {
            if h.degree(a) != di {
                return Some(format!("antipode of {}", name(i)));
            }
        }
        None
    }));
    rep.record("multidegree preserved", graded);

    let assoc = first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
        for k in 0..d {
            if deg(i) + deg(j) + deg(k) > bound {
                continue;
            }
            let l = h.mul_lin(&h.mul_lin(&e(i), &e(j)), &e(k));
            let r = h.mul_lin(&e(i), &h.mul_lin(&e(j), &e(k)));
            if l != r {
                return Some(format!("({} {}) {}", name(i), name(j), name(k)));
            }
        }
        None
    }));
    rep.record("associativity", assoc);

    let unit = first((0..d).map(|i| {
        (h.mul_lin(&e(0), &e(i)) != e(i) || h.mul_lin(&e(i), &e(0)) != e(i)).then(|| name(i))
    }));
    rep.record("unit", unit);

    let coassoc = first((0..d).map(|i| {
        (h.iterated_coproduct_basis(i) != h.iterated_coproduct_right(i)).then(|| name(i))
    }));
    rep.record("coassociativity", coassoc);

    let counit = first((0..d).map(|i| {
        let mut left = LinComb::new();
        let mut right = LinComb::new();
        for (&(a, b), c) in h.coproduct_basis(i).iter() {
            if a == 0 {
                left.add_term(b, c.clone());
            }
            if b == 0 {
                right.add_term(a, c.clone());
            }
        }
        (left != e(i) || right != e(i)).then(|| name(i))
    }));
    rep.record("counit", counit);

    let antipode = first((0..d).map(|i| {
        let expected = if i == 0 { e(0) } else { LinComb::new() };
        let mut l = LinComb::new();
        let mut r = LinComb::new();
        for (&(a, b), c) in h.coproduct_basis(i).iter() {
            l.add_scaled(&h.mul_lin(h.antipode_basis(a), &e(b)), c);
            r.add_scaled(&h.mul_lin(&e(a), h.antipode_basis(b)), c);
        }
        (l != expected || r != expected).then(|| name(i))
    }));
    rep.record("antipode", antipode);

    let delta_mult = first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
        if deg(i) + deg(j) > bound {
            return None;
        }
        let lhs = h.coproduct_lin(&h.mul_lin(&e(i), &e(j)));
        let rhs = h.tensor_mul(h.coproduct_basis(i), h.coproduct_basis(j));
        (lhs != rhs).then(|| format!("{} * {}", name(i), name(j)))
    }));
    rep.record("coproduct is a braided algebra map", delta_mult);

    let eps_mult = first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
        if deg(i) + deg(j) > bound {
            return None;
        }
        let lhs = h.counit_lin(&h.mul_lin(&e(i), &e(j)));
        let rhs = &h.counit_lin(&e(i)) * &h.counit_lin(&e(j));
        (lhs != rhs).then(|| format!("{} * {}", name(i), name(j)))
    }));
    rep.record("counit is an algebra map", eps_mult);

    let s_anti = first((0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| {
        if deg(i) + deg(j) > bound {
            return None;
        }
        let lhs = h.antipode_lin(&h.mul_lin(&e(i), &e(j)));
        let q = h.unit_poly(h.bichar(h.degree(i), h.degree(j)));
        let rhs = h.mul_lin(h.antipode_basis(j), h.antipode_basis(i)).scaled(&q);
        (lhs != rhs).then(|| format!("S({} {})", name(i), name(j)))
    }));
    rep.record("antipode is braided anti-multiplicative", s_anti);

    let s_coanti = first((0..d).map(|i| {
        let lhs = h.coproduct_lin(h.antipode_basis(i));
        let mut rhs = TensorElement::new();
        for (&(a, b), c) in h.coproduct_basis(i).iter() {
            let q = h.unit_poly(h.bichar(h.degree(a), h.degree(b)));
            let c = c * &q;
            for (&sb, cb) in h.antipode_basis(b).iter() {
                for (&sa, ca) in h.antipode_basis(a).iter() {
                    rhs.add_term((sb, sa), &(&c * cb) * ca);
                }
            }
        }
        (lhs != rhs).then(|| name(i))
    }));
    rep.record("antipode is braided anti-comultiplicative", s_coanti);

    let phi_ok = first((0..d).map(|i| {
        for j in 0..d {
            if deg(i) + deg(j) > bound {
                continue;
            }
            let l = h.automorphism_lin(&h.mul_lin(&e(i), &e(j)));
            let r = h.mul_lin(&h.automorphism_lin(&e(i)), &h.automorphism_lin(&e(j)));
            if l != r {
                return Some(format!("phi({} {})", name(i), name(j)));
            }
        }
        let mut lhs = TensorElement::new();
        lhs.add_scaled(h.coproduct_basis(i), &h.unit_poly(h.phi(i)));
        let mut rhs = TensorElement::new();
        for (&(a, b), c) in h.coproduct_basis(i).iter() {
            rhs.add_term((a, b), c.mul_unit(h.phi(a).mul(h.phi(b))));
        }
        if lhs != rhs {
            return Some(format!("Delta phi on {}", name(i)));
        }
        if h.counit_lin(&h.automorphism_lin(&e(i))) != h.counit_lin(&e(i)) {
            return Some(format!("counit phi on {}", name(i)));
        }
        if h.antipode_lin(&h.automorphism_lin(&e(i))) != h.automorphism_lin(h.antipode_basis(i)) {
            return Some(format!("S phi on {}", name(i)));
        }
        None
    }));
    rep.record("scaling automorphism is a Hopf automorphism", phi_ok);
    rep
}
