use super::*;
use crate::nichols::{build_rank1, build_rank2_root_of_unity};
use crate::polyring::{q_binomial, q_pochhammer};

fn generic_rank1(trunc: u32) -> Arc<NicholsAlgebra> {
    let ring = Ring::integer(&["q", "t"]);
    let q = UnitMonomial::mono(Monomial::var(0, 1));
    let t = UnitMonomial::mono(Monomial::var(1, 1));
    Arc::new(build_rank1_generic(&ring, q, t, trunc).unwrap())
}

fn p(h: &NicholsAlgebra, s: &str) -> LaurentPoly {
    LaurentPoly::parse(h.ring(), s).unwrap()
}

#[test]
fn left_coaction_of_generator() {
    let h = generic_rank1(6);
    let mut expected = TensorElement::new();
    expected.add_term((1, 0), p(&h, "1 - t"));
    expected.add_term((0, 1), p(&h, "1"));
    assert_eq!(left_coaction_basis(&h, 1), expected);
    assert_eq!(left_coaction_basis(&h, 0), LinComb::single((0, 0), p(&h, "1")));
}

#[test]
fn left_coaction_closed_form() {
    let h = generic_rank1(8);
    let r = h.ring().clone();
    let (q, t) = (p(&h, "q"), p(&h, "t"));
    for k in 0..=6usize {
        let mut expected = TensorElement::new();
        for m in 0..=k {
            let c = &q_binomial(&r, k as u32, m as u32, "q").unwrap()
                * &q_pochhammer(&(&t * &q.pow(m as u32)), &q, (k - m) as u32);
            expected.add_term((k - m, m), c);
        }
        assert_eq!(left_coaction_basis(&h, k), expected, "k = {}", k);
    }
}

#[test]
fn right_action_closed_form() {
    let h = generic_rank1(8);
    let (q, t) = (p(&h, "q"), p(&h, "t"));
    for k in 0..=6usize {
        assert_eq!(right_action_basis(&h, k, 0), LinComb::single(k, p(&h, "1")));
        let expected = LinComb::single(k + 1, &p(&h, "1") - &(&t * &q.pow(k as u32)));
        if k < 6 {
            assert_eq!(right_action_basis(&h, k, 1), expected);
        }
        for l in 0..=(6 - k) {
            let c = q_pochhammer(&(&t * &q.pow(k as u32)), &q, l as u32);
            assert_eq!(right_action_basis(&h, k, l), LinComb::single(k + l, c), "k={} l={}", k, l);
        }
    }
}

#[test]
fn regular_modules_have_host_dimension() {
    let m = regular_left_module(Arc::new(build_rank2_root_of_unity(2).unwrap())).unwrap();
    assert_eq!(m.dim(), 8);
    let m1 = regular_left_module(Arc::new(build_rank2_root_of_unity(1).unwrap())).unwrap();
    assert_eq!(m1.dim(), 4);
    let r = regular_left_module(Arc::new(build_rank1(2).unwrap())).unwrap();
    assert_eq!(r.dim(), 2);
    let h = r.host();
    let mut expected = LinComb::new();
    expected.add_term((1, 0), p(h, "1 - t"));
    expected.add_term((0, 1), p(h, "1"));
    assert_eq!(r.coaction(1), &expected);
}

#[test]
fn coinvariant_scan() {
    let ring = Ring::integer(&["q"]);
    let q = UnitMonomial::mono(Monomial::var(0, 1));
    for n in 1..=4u32 {
        let h = Arc::new(build_rank1_generic(&ring, q, q.pow(1 - n as i32), 2 * n + 2).unwrap());
        let m = regular_left_module(h).unwrap();
        assert_eq!(find_coinvariants(&m), vec![n as usize], "n = {}", n);
    }
    let free = regular_left_module(generic_rank1(8)).unwrap();
    assert!(find_coinvariants(&free).is_empty());
    let r2 = regular_left_module(Arc::new(build_rank2_root_of_unity(2).unwrap())).unwrap();
    assert!(find_coinvariants(&r2).is_empty());
}

#[test]
fn jones_quotients() {
    for n in 1..=3u32 {
        let m = build_jones_module(n).unwrap();
        assert_eq!(m.dim(), n as usize);
        let rep = verify_yd_axioms(&m);
        assert!(rep.all_passed(), "n = {}\n{}", n, rep);
    }
}

#[test]
fn quotient_requires_coinvariant_generators() {
    let m = regular_left_module(generic_rank1(6)).unwrap();
    assert!(matches!(quotient_by_coinvariants(&m, &[2]), Err(YdError::NotWellDefined(_))));
}

#[test]
fn yn_basis_and_action() {
    let y1 = build_yn(1).unwrap();
    assert_eq!(y1.names(), &["1", "x1", "x2", "v"]);
    for n in 1..=3 {
        assert_eq!(build_yn(n).unwrap().dim(), 4 * n as usize);
    }
    let y2 = build_yn(2).unwrap();
    let h = y2.host().clone();
    for (i, tname) in [(1usize, "s^-2 t^-1"), (2, "s^-2 t")] {
        let x = y2.index_of_name(&h.word_name(i)).unwrap();
        let expected = LinComb::single(x, &p(&h, "1") - &p(&h, tname));
        assert_eq!(y2.act(0, i), &expected);
        let v = y2.index_of_name("v").unwrap();
        assert!(y2.act(v, i).is_zero());
    }
}

#[test]
fn yn_closure_needs_binding() {
    let ring = Ring::integer(&["s", "g", "t1", "t2"]);
    let t1 = UnitMonomial::mono(Monomial::var(2, 1));
    let t2 = UnitMonomial::mono(Monomial::var(3, 1));
    assert!(matches!(build_yn_with(&ring, 1, t1, t2), Err(YdError::Closure(_))));
}

#[test]
fn yd_axioms_hold() {
    for n in 1..=4 {
        let h = Arc::new(build_rank1(n).unwrap());
        let rep = verify_yd_axioms(&regular_left_module(h.clone()).unwrap());
        assert!(rep.all_passed(), "left rank 1 N={}\n{}", n, rep);
        let rep = verify_yd_axioms(&regular_right_module(h).unwrap());
        assert!(rep.all_passed(), "right rank 1 N={}\n{}", n, rep);
    }
    for n in 1..=3 {
        let h = Arc::new(build_rank2_root_of_unity(n).unwrap());
        let rep = verify_yd_axioms(&regular_left_module(h.clone()).unwrap());
        assert!(rep.all_passed(), "left rank 2 N={}\n{}", n, rep);
        let rep = verify_yd_axioms(&regular_right_module(h).unwrap());
        assert!(rep.all_passed(), "right rank 2 N={}\n{}", n, rep);
    }
    for n in 1..=2 {
        let rep = verify_yd_axioms(&build_yn(n).unwrap());
        assert!(rep.all_passed(), "Y_{}\n{}", n, rep);
    }
}

#[test]
fn broken_module_is_detected() {
    let h = Arc::new(build_rank1(3).unwrap());
    let mut m = regular_left_module(h.clone()).unwrap();
    m.coaction[1] = LinComb::single((0, 1), LaurentPoly::one(h.ring()));
    let rep = verify_yd_axioms(&m);
    assert!(!rep.all_passed());
}
