use super::*;
use crate::nichols::{build_rank1, build_rank1_generic, build_rank2_root_of_unity, NicholsAlgebra};
use crate::polyring::{q_binomial, q_pochhammer, Monomial, UnitMonomial};
use crate::ydmod::{build_yn, regular_left_module, regular_right_module};

fn generic_rank1(trunc: u32) -> Arc<NicholsAlgebra> {
    let ring = Ring::integer(&["q", "t"]);
    let q = UnitMonomial::mono(Monomial::var(0, 1));
    let t = UnitMonomial::mono(Monomial::var(1, 1));
    Arc::new(build_rank1_generic(&ring, q, t, trunc).unwrap())
}

fn p(ring: &Arc<Ring>, s: &str) -> LaurentPoly {
    LaurentPoly::parse(ring, s).unwrap()
}

fn rho_l(h: Arc<NicholsAlgebra>) -> RMatrix {
    build_rho_left(&regular_left_module(h).unwrap()).unwrap()
}

fn rho_r(h: Arc<NicholsAlgebra>) -> RMatrix {
    build_rho_right(&regular_right_module(h).unwrap()).unwrap()
}

fn row_of(r: &RMatrix, a: usize, b: usize) -> Vec<((usize, usize), LaurentPoly)> {
    r.op().row(a, b).iter().map(|(o, v)| (r.op().pair(*o as usize), v.clone())).collect()
}

#[test]
fn rank1_left_generator_and_unit() {
    let r = rho_l(generic_rank1(4));
    let ring = r.ring().clone();
    assert_eq!(row_of(&r, 1, 0), vec![((0, 1), p(&ring, "1")), ((1, 0), p(&ring, "1 - t"))]);
    assert_eq!(row_of(&r, 0, 0), vec![((0, 0), p(&ring, "1"))]);
}

#[test]
fn rank1_left_closed_form() {
    let r = rho_l(generic_rank1(8));
    let ring = r.ring().clone();
    let (q, t) = (p(&ring, "q"), p(&ring, "t"));
    for k in 0..=6usize {
        for l in 0..=(6 - k) {
            let mut expected = Vec::new();
            for m in (0..=k).rev() {
                let tq = &t * &q.pow((k - m) as u32);
                let c = &(&q_binomial(&ring, k as u32, m as u32, "q").unwrap() * &q_pochhammer(&tq, &q, m as u32))
                    * &tq.pow(l as u32);
                expected.push(((l + m, k - m), c));
            }
            expected.sort_by_key(|e| e.0);
            assert_eq!(row_of(&r, k, l), expected, "k={} l={}", k, l);
        }
    }
}

#[test]
fn rank1_right_closed_form() {
    let r = rho_r(generic_rank1(8));
    let ring = r.ring().clone();
    let (q, t) = (p(&ring, "q"), p(&ring, "t"));
    for k in 0..=6usize {
        for l in 0..=(6 - k) {
            let tq = &t * &q.pow(k as u32);
            let mut expected = Vec::new();
            for m in 0..=l {
                let c = &(&q_binomial(&ring, l as u32, m as u32, "q").unwrap() * &tq.pow((l - m) as u32))
                    * &q_pochhammer(&tq, &q, m as u32);
                expected.push(((l - m, k + m), c));
            }
            expected.sort_by_key(|e| e.0);
            assert_eq!(row_of(&r, k, l), expected, "k={} l={}", k, l);
        }
    }
    assert_eq!(row_of(&r, 0, 0), vec![((0, 0), p(&ring, "1"))]);
}

#[test]
fn rank2_sample_column_and_sparsity() {
    // Coefficients of x1x2x1x2 (x) x2x1 in the images of four basis pairs, with t1 and t2 exchanged.
    let h = Arc::new(build_rank2_root_of_unity(2).unwrap());
    let r = rho_l(h.clone());
    let ring = r.ring().clone();
    let swap = |v: LaurentPoly| {
        let (t1, t2) = (LaurentPoly::var(&ring, "t1").unwrap(), LaurentPoly::var(&ring, "t2").unwrap());
        v.substitute(&ring, &[("t1", t2), ("t2", t1)]).unwrap()
    };
    let w = |s: &str| h.parse_word(s).unwrap();
    let target = (w("x1x2x1x2"), w("x2x1"));
    let cases = [
        (("x2x1", "x1x2x1x2"), "t1^2 t2^2"),
        (("x1x2x1", "x2x1x2"), "-q21^-1 t1^2 t2 - q21^-1 t1^2 t2^2"),
        (("x2x1x2", "x1x2x1"), "q21^2 t1^2 t2^2 - q21^2 t1 t2^2"),
        (("x1x2x1x2", "x1x2"), "q21^-1 t1^2 t2 - q21^-1 t1 t2"),
    ];
    for ((a, b), expected) in cases {
        assert_eq!(swap(r.get((w(a), w(b)), target)), p(&ring, expected), "{} (x) {}", a, b);
    }
    assert_eq!(r.op().row_index(0).len(), 1);
    let column: usize = r.op().entries().filter(|e| e.1 == target).count();
    assert_eq!(column, 5);
    // Diagonal entries never involve q21.
    for (i, o, v) in r.op().entries() {
        if i == o {
            assert!(v.is_free_of("q21"), "{:?}", i);
        }
    }
    assert_eq!(r.nnz(), 157);
}

#[test]
fn rank2_determinants_are_unit_monomials() {
    let h = Arc::new(build_rank2_root_of_unity(2).unwrap());
    let r = rho_l(h);
    let ring = r.ring().clone();
    let st64 = p(&ring, "t1^64 t2^64");
    assert_eq!(r.op().determinant().unwrap(), st64);
    let rigid = build_rigid(&r).unwrap();
    let inv64 = p(&ring, "t1^-64 t2^-64");
    assert_eq!(rigid.r_neg.determinant().unwrap(), inv64);
    assert_eq!(r.op().partial_transpose().determinant().unwrap(), st64);
    assert_eq!(rigid.r_neg.partial_transpose().determinant().unwrap(), inv64);
}

#[test]
fn yang_baxter_holds() {
    for n in 2..=4 {
        let h = Arc::new(build_rank1(n).unwrap());
        assert!(check_yang_baxter(rho_l(h.clone()).op()).all_passed(), "left N={}", n);
        assert!(check_yang_baxter(rho_r(h).op()).all_passed(), "right N={}", n);
    }
    let h = Arc::new(build_rank2_root_of_unity(2).unwrap());
    assert!(check_yang_baxter(rho_l(h.clone()).op()).all_passed());
    assert!(check_yang_baxter(rho_r(h).op()).all_passed());
    let y1 = build_rho_right(&build_yn(1).unwrap()).unwrap();
    assert_eq!(y1.dim() * y1.dim(), 16);
    assert!(check_yang_baxter(y1.op()).all_passed());
    let y2 = build_rho_right(&build_yn(2).unwrap()).unwrap();
    assert!(check_yang_baxter(y2.op()).all_passed());
}

#[test]
fn yang_baxter_negative_controls() {
    let ring = Ring::integer(&["t"]);
    assert!(check_yang_baxter(&SparseOp::identity(&ring, 3)).all_passed());
    let r = rho_l(Arc::new(build_rank1(3).unwrap()));
    let bad = r.op().with_added((1, 1), (1, 1), LaurentPoly::one(r.ring()));
    let rep = check_yang_baxter(&bad);
    assert!(!rep.all_passed());
    assert!(rep.failures().next().unwrap().detail.contains("basis triple"));
}

#[test]
fn wrong_side_is_rejected() {
    let h = Arc::new(build_rank1(2).unwrap());
    assert_eq!(build_rho_left(&regular_right_module(h.clone()).unwrap()).unwrap_err(), RError::WrongSide);
    assert_eq!(build_rho_right(&regular_left_module(h).unwrap()).unwrap_err(), RError::WrongSide);
}

#[test]
fn partial_transpose_of_identity_and_involution() {
    let ring = Ring::integer(&["t"]);
    let id = SparseOp::identity(&ring, 3);
    let pt = partial_transpose(&id);
    let mut expected = Vec::new();
    for a in 0..3 {
        for c in 0..3 {
            expected.push(((a, a), (c, c), LaurentPoly::one(&ring)));
        }
    }
    assert_eq!(pt, SparseOp::from_entries(&ring, 3, expected));
    let r = rho_l(Arc::new(build_rank2_root_of_unity(2).unwrap()));
    assert_eq!(&r.op().partial_transpose().partial_transpose_inverse(), r.op());
}

#[test]
fn inverse_of_diagonal_units() {
    let ring = Ring::integer(&["s", "t"]);
    let entries = (0..4).map(|i| ((i / 2, i % 2), (i / 2, i % 2), p(&ring, &format!("-s^{} t^-1", i))));
    let m = SparseOp::from_entries(&ring, 2, entries.collect::<Vec<_>>());
    let inv = invert(&m).unwrap();
    for i in 0..4 {
        let x = (i / 2, i % 2);
        assert_eq!(inv.get(x, x), p(&ring, &format!("-s^{} t", -(i as i32))));
    }
    assert_eq!(invert(&inv).unwrap(), m);
}

#[test]
fn singular_and_non_laurent_inputs_fail() {
    let ring = Ring::integer(&["t"]);
    let mut entries = vec![((0, 0), (0, 0), p(&ring, "1 + t"))];
    entries.extend([((0, 1), (0, 1), p(&ring, "1")), ((1, 0), (1, 0), p(&ring, "1")), ((1, 1), (1, 1), p(&ring, "1"))]);
    let m = SparseOp::from_entries(&ring, 2, entries);
    assert!(matches!(invert(&m), Err(RError::RingEscape(_))));
    let z = SparseOp::from_entries(&ring, 2, vec![((0, 0), (0, 1), p(&ring, "1"))]);
    assert!(matches!(invert(&z), Err(RError::NotRigid(_))));
}

#[test]
fn rigid_quadruples() {
    let rank1 = rho_l(Arc::new(build_rank1(2).unwrap()));
    let rigid = build_rigid(&rank1).unwrap();
    assert!(rank1.op().then(&rigid.r_neg).is_identity());
    assert!(rank1.op().partial_transpose().then(&rigid.rt_inv).is_identity());
    assert!(rigid.r_neg.partial_transpose().then(&rigid.rtinv_inv).is_identity());
    assert_eq!(&invert(&rigid.r_neg).unwrap(), rank1.op());
    let y2 = build_rho_right(&build_yn(2).unwrap()).unwrap();
    assert_eq!(y2.dim(), 8);
    build_rigid(&y2).unwrap();
}

#[test]
fn json_dump_is_row_major() {
    let r = rho_l(Arc::new(build_rank1(2).unwrap()));
    let j = r.to_json();
    assert_eq!(j["dim"], 2);
    let entries = j["entries"].as_array().unwrap();
    assert_eq!(entries.len(), r.nnz());
    assert_eq!(entries[0]["in"], serde_json::json!([0, 0]));
}
