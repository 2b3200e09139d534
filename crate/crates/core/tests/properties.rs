use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use knotpoly::invariants::checks::{alexander_product, q_inverted, swap_symmetric, t_inversion_symmetric};
use knotpoly::invariants::rewrite::{expand_uq, expand_uv, order12_violation, rewrite_uq, rewrite_uv, uq_ring, uv_ring};
use knotpoly::invariants::{Engine, Family, KnotInput};
use knotpoly::knotdiag::{parse_braid_word, BraidWord};
use knotpoly::polyring::{LaurentPoly, Ring};

fn engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(Engine::new)
}

/// Sum of c * var1^a * var2^b over random small terms.
fn poly2(ring: Arc<Ring>, v1: &'static str, v2: &'static str, lo: i32, hi: i32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((lo..=hi, lo..=hi, -5i64..=5), 0..6).prop_map(move |terms| {
        let mut p = LaurentPoly::zero(&ring);
        for (a, b, c) in terms {
            p = &p + &LaurentPoly::monomial(&ring, &[(v1, a), (v2, b)], c).unwrap();
        }
        p
    })
}

/// Polynomial in t with coefficients in Z[w], w a primitive N-th root of unity.
fn cyc_poly(n: u32) -> impl Strategy<Value = LaurentPoly> {
    let ring = Ring::cyclotomic(n, &["t"]);
    prop::collection::vec((-3i32..=3, 0i32..(n as i32), -4i64..=4), 0..6).prop_map(move |terms| {
        let w = LaurentPoly::omega(&ring).unwrap();
        let mut p = LaurentPoly::zero(&ring);
        for (e, k, c) in terms {
            let m = LaurentPoly::monomial(&ring, &[("t", e)], c).unwrap();
            p = &p + &(&m * &w.pow(k as u32));
        }
        p
    })
}

/// Braid words on 2 or 3 strands whose closure is a knot.
fn knot_braid() -> impl Strategy<Value = BraidWord> {
    (2usize..=3)
        .prop_flat_map(|w| {
            let gens: Vec<i32> = (1..w as i32).flat_map(|g| [g, -g]).collect();
            (Just(w), prop::collection::vec(prop::sample::select(gens), 1..=7))
        })
        .prop_filter_map("closure is a knot", |(w, letters)| BraidWord::new(w, letters).ok().filter(|b| b.components() == 1))
}

fn uv_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((0i32..=3, 0i32..=2, -5i64..=5), 0..5).prop_map(|terms| {
        let ring = uv_ring();
        let mut p = LaurentPoly::zero(&ring);
        for (a, b, c) in terms {
            p = &p + &LaurentPoly::monomial(&ring, &[("u", a), ("v", b)], c).unwrap();
        }
        p
    })
}

fn uq_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, 0i32..=3, -5i64..=5), 0..6).prop_map(|terms| {
        let ring = uq_ring();
        let mut p = LaurentPoly::zero(&ring);
        for (a, b, c) in terms {
            p = &p + &LaurentPoly::monomial(&ring, &[("q", a), ("u", b)], c).unwrap();
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn integer_ring_axioms(
        a in poly2(Ring::integer(&["q", "t"]), "q", "t", -3, 3),
        b in poly2(Ring::integer(&["q", "t"]), "q", "t", -3, 3),
        c in poly2(Ring::integer(&["q", "t"]), "q", "t", -3, 3),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(a.ring()), a.clone());
    }

    #[test]
    fn cyclotomic_ring_axioms((n, a, b, c) in (3u32..=6).prop_flat_map(|n| (Just(n), cyc_poly(n), cyc_poly(n), cyc_poly(n)))) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!(LaurentPoly::omega(a.ring()).unwrap().pow(n).is_one());
    }

    #[test]
    fn display_parse_round_trip(a in poly2(Ring::integer(&["q", "t"]), "q", "t", -4, 4)) {
        prop_assert_eq!(LaurentPoly::parse(a.ring(), &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(LaurentPoly::parse(a.ring(), &a.to_string_collected("t").unwrap()).unwrap(), a);
    }

    #[test]
    fn cyclotomic_display_parse_round_trip(a in cyc_poly(5)) {
        prop_assert_eq!(LaurentPoly::parse(a.ring(), &a.to_string()).unwrap(), a);
    }

    #[test]
    fn braid_display_parse_round_trip(b in knot_braid()) {
        prop_assert_eq!(parse_braid_word(&b.to_string(), Some(b.width)).unwrap(), b);
    }

    #[test]
    fn uv_rewriting_round_trip(f in uv_poly()) {
        let lam = expand_uv(&f).unwrap();
        prop_assert_eq!(order12_violation(&lam).unwrap(), None);
        prop_assert!(swap_symmetric(&lam).unwrap());
        prop_assert_eq!(rewrite_uv(&lam).unwrap(), f);
    }

    #[test]
    fn uq_rewriting_round_trip(f in uq_poly()) {
        let v = expand_uq(&f).unwrap();
        prop_assert!(t_inversion_symmetric(&v).unwrap());
        prop_assert_eq!(rewrite_uq(&v).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_symmetries_and_factorization(b in knot_braid()) {
        let k = KnotInput::from_braid(&b);
        let l2 = engine().compute(&k, Family::Lambda(2), true).unwrap();
        prop_assert!(l2.checks.all_passed(), "{}", l2.checks);
        prop_assert!(swap_symmetric(&l2.polynomial).unwrap());
        prop_assert_eq!(order12_violation(&l2.polynomial).unwrap(), None);
        let l1 = engine().compute(&k, Family::Lambda(1), false).unwrap().polynomial;
        let delta = engine().compute(&k, Family::Ado(2), false).unwrap().polynomial;
        prop_assert_eq!(l1, alexander_product(&delta).unwrap());
    }

    #[test]
    fn conjugation_and_stabilization_invariance(b in knot_braid(), r in 0usize..7, positive in any::<bool>()) {
        let base = engine().compute(&KnotInput::from_braid(&b), Family::Ado(3), false).unwrap().polynomial;
        let rotated = b.rotate(r % b.letters.len());
        prop_assert_eq!(&engine().compute(&KnotInput::from_braid(&rotated), Family::Ado(3), false).unwrap().polynomial, &base);
        let mut letters = b.letters.clone();
        letters.push(if positive { b.width as i32 } else { -(b.width as i32) });
        let stabilized = BraidWord::new(b.width + 1, letters).unwrap();
        prop_assert_eq!(&engine().compute(&KnotInput::from_braid(&stabilized), Family::Ado(3), false).unwrap().polynomial, &base);
    }

    #[test]
    fn v2_identities_and_mirror_rule(b in knot_braid()) {
        let v = engine().compute(&KnotInput::from_braid(&b), Family::Vn(2), true).unwrap();
        prop_assert!(v.checks.all_passed(), "{}", v.checks);
        prop_assert!(t_inversion_symmetric(&v.polynomial).unwrap());
        let m = engine().compute(&KnotInput::from_braid(&b.mirror()), Family::Vn(2), false).unwrap().polynomial;
        prop_assert_eq!(q_inverted(&v.polynomial).unwrap(), m);
        let f = v.form.clone().unwrap();
        let at0 = f.substitute(&Ring::integer(&["q"]), &[("u", LaurentPoly::zero(&Ring::integer(&["q"])))]).unwrap();
        prop_assert!(at0.is_one());
    }
}
