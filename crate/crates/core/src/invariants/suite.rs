//! Verification suites: published values with cross-family identities (`--suite paper`),
//! and algebraic axioms with state-sum sanity checks (`--suite axioms`).

use std::collections::HashMap;
use std::sync::Arc;

use crate::knotdiag::{
    balance_writhe_at, balanced_diagram, braid_to_long_diagram, builtin_knot_table, normalize_extrema, BraidWord, KinkPlacement,
    LongDiagram,
};
use crate::lincomb::LinComb;
use crate::nichols::{build_rank1, build_rank1_generic, build_rank2_root_of_unity, verify_hopf_axioms, NicholsAlgebra, TensorElement};
use crate::polyring::{q_binomial, q_pochhammer, LaurentPoly, Monomial, Ring, UnitMonomial};
use crate::report::Report;
use crate::rmatrix::{build_rho_left, build_rho_right, build_rigid, check_yang_baxter, RMatrix};
use crate::statesum::{brute_force, contract, Columns, ContractOptions};
use crate::ydmod::{build_yn, left_coaction_basis, regular_left_module, regular_right_module, right_action_basis, verify_yd_axioms};

use super::checks::{ado_jones_sides, alexander_product, lambda_duality_side, q_inverted, v_at_q};
use super::golden;
use super::rewrite::uq_ring;
use super::{Engine, Family, InvariantError, InvariantResult, KnotInput};

/// Published values known to be misprinted: (label, computed minus published in (q, u)).
pub const KNOWN_MISPRINTS: &[(&str, &str)] = &[("11n42", "-2 q^-10 u")];

#[derive(Clone, Debug)]
pub struct Section {
    pub criterion: u8,
    pub title: &'static str,
    pub report: Report,
    /// Failing checks explained by [`KNOWN_MISPRINTS`].
    pub known: Vec<String>,
}

impl Section {
    fn new(criterion: u8, title: &'static str) -> Self {
        Section { criterion, title, report: Report::new(), known: Vec::new() }
    }

    /// Passed, or failed only on known misprints.
    pub fn acceptable(&self) -> bool {
        self.report.failures().all(|c| self.known.contains(&c.name))
    }
}

/// Memoized invariant results for the knots of the suites.
pub struct Context {
    pub engine: Engine,
    results: HashMap<(String, Family), Arc<InvariantResult>>,
}

impl Default for Context {
    fn default() -> Self {
        Self::new()
    }
}

impl Context {
    pub fn new() -> Self {
        Context { engine: Engine::new(), results: HashMap::new() }
    }

    pub fn get(&mut self, knot: &str, f: Family) -> Result<Arc<InvariantResult>, InvariantError> {
        let key = (knot.to_string(), f);
        if let Some(r) = self.results.get(&key) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.engine.compute(&KnotInput::named(knot)?, f, false)?);
        self.results.insert(key, r.clone());
        Ok(r)
    }
}

/// Crossing number read from a table name such as `7_4` or `11n34`.
pub fn crossing_number(name: &str) -> u32 {
    let name = name.strip_prefix('m').unwrap_or(name);
    name.chars().take_while(|c| c.is_ascii_digit()).collect::<String>().parse().unwrap_or(0)
}

fn push_eq(rep: &mut Report, name: String, got: Result<LaurentPoly, InvariantError>, want: &LaurentPoly) {
    match got {
        Ok(g) if &g == want => rep.push(name, true, ""),
        Ok(g) => rep.push(name, false, format!("got {}, expected {}", g, want)),
        Err(e) => rep.push(name, false, e.to_string()),
    }
}

fn form_of(ctx: &mut Context, knot: &str, f: Family) -> Result<LaurentPoly, InvariantError> {
    let r = ctx.get(knot, f)?;
    r.form.clone().ok_or_else(|| InvariantError::BadParameter(format!("{} has no canonical form", f)))
}

fn poly_of(ctx: &mut Context, knot: &str, f: Family) -> Result<LaurentPoly, InvariantError> {
    Ok(ctx.get(knot, f)?.polynomial.clone())
}

pub fn table_lambda(ctx: &mut Context) -> Section {
    let mut s = Section::new(1, "Lambda~(u, v) at omega = -1 for the knot table");
    for g in golden::lambda_uv() {
        let got = form_of(ctx, &g.knot, Family::Lambda(2));
        push_eq(&mut s.report, format!("Lambda~ of {}", g.label), got, &g.value);
    }
    s
}

pub fn rank2_operator(_: &mut Context) -> Section {
    let mut s = Section::new(2, "rank-2 R-matrix at N = 2: sparsity, sample entries, determinants");
    let rep = &mut s.report;
    let built = build_rank2_root_of_unity(2)
        .map_err(InvariantError::from)
        .and_then(|h| {
            let h = Arc::new(h);
            let r = build_rho_left(&regular_left_module(h.clone())?)?;
            Ok((h, r))
        })
        .and_then(|(h, r)| Ok((h, build_rigid(&r)?, r)));
    let (h, rigid, r) = match built {
        Ok(x) => x,
        Err(e) => {
            rep.push("build rank-2 R-matrix", false, e.to_string());
            return s;
        }
    };
    let d = r.dim().pow(4);
    rep.push("nonzero entries 157 of 4096", r.nnz() == 157 && d == 4096, format!("{} of {}", r.nnz(), d));
    let ring = r.ring().clone();
    let p = |e: &str| LaurentPoly::parse(&ring, e).expect("fixed expression");
    // Published with t1 and t2 exchanged relative to the regular left module.
    let swap = |v: LaurentPoly| v.substitute(&ring, &[("t1", p("t2")), ("t2", p("t1"))]).expect("substitution");
    let w = |name: &str| h.parse_word(name).expect("basis word");
    let target = (w("x1x2x1x2"), w("x2x1"));
    let samples = [
        (("x2x1", "x1x2x1x2"), "t1^2 t2^2"),
        (("x1x2x1", "x2x1x2"), "-q21^-1 t1^2 t2 - q21^-1 t1^2 t2^2"),
        (("x2x1x2", "x1x2x1"), "q21^2 t1^2 t2^2 - q21^2 t1 t2^2"),
        (("x1x2x1x2", "x1x2"), "q21^-1 t1^2 t2 - q21^-1 t1 t2"),
    ];
    for ((a, b), want) in samples {
        let got = swap(r.get((w(a), w(b)), target));
        push_eq(rep, format!("entry {} (x) {} -> x1x2x1x2 (x) x2x1", a, b), Ok(got), &p(want));
    }
    let ops = [("rho", r.op(), "t1^64 t2^64"), ("rho^-1", &rigid.r_neg, "t1^-64 t2^-64"), ("(rho^T2)^-1", &rigid.rt_inv, "t1^-64 t2^-64"), ("((rho^-1)^T2)^-1", &rigid.rtinv_inv, "t1^64 t2^64")];
    for (name, op, want) in ops {
        push_eq(rep, format!("det {} = {}", name, want), op.determinant().map_err(InvariantError::from), &p(want));
    }
    s
}

pub fn lambda1_factorization(ctx: &mut Context) -> Section {
    let mut s = Section::new(3, "Lambda_1 = Delta(t1) Delta(t2) up to 7 crossings");
    for e in builtin_knot_table().into_iter().filter(|e| crossing_number(&e.name) <= 7) {
        let want = poly_of(ctx, &e.name, Family::Ado(2)).and_then(|d| Ok(alexander_product(&d)?));
        let got = poly_of(ctx, &e.name, Family::Lambda(1));
        match want {
            Ok(w) => push_eq(&mut s.report, format!("Lambda_1 of {}", e.name), got, &w),
            Err(err) => s.report.push(format!("Lambda_1 of {}", e.name), false, err.to_string()),
        }
    }
    s
}

pub fn v2_listings(ctx: &mut Context) -> Section {
    let mut s = Section::new(4, "V~_2(u, q) listings");
    for g in golden::v2_uq() {
        let name = format!("V~_2 of {} (computed on {})", g.label, g.knot);
        match form_of(ctx, &g.knot, Family::Vn(2)) {
            Ok(f) if f == g.value => s.report.push(name, true, ""),
            Ok(f) => {
                let diff = &f - &g.value;
                let known = KNOWN_MISPRINTS.iter().any(|(l, d)| *l == g.label && LaurentPoly::parse(&uq_ring(), d).ok() == Some(diff.clone()));
                let detail = format!("computed - listed = {}", diff);
                if known {
                    s.known.push(name.clone());
                    s.report.push(name, false, format!("{} (known misprint: the listed value violates V_2(t, 1) = Delta(t)^2)", detail));
                } else {
                    s.report.push(name, false, detail);
                }
            }
            Err(e) => s.report.push(name, false, e.to_string()),
        }
    }
    s
}

fn v2_knots() -> Vec<String> {
    golden::v2_uq().into_iter().map(|g| g.knot).collect()
}

pub fn specializations(ctx: &mut Context) -> Section {
    let mut s = Section::new(5, "V~_2(0, q) = 1 and V_2(t, 1) = Delta(t)^2");
    let one = LaurentPoly::one(&Ring::integer(&["q"]));
    for k in v2_knots() {
        let at0 = form_of(ctx, &k, Family::Vn(2)).and_then(|f| Ok(f.substitute(one.ring(), &[("u", LaurentPoly::zero(one.ring()))])?));
        push_eq(&mut s.report, format!("V~_2(0, q) of {}", k), at0, &one);
        let t_ring = Ring::integer(&["t"]);
        match poly_of(ctx, &k, Family::Ado(2)).and_then(|d| Ok(d.embed(&t_ring)?)) {
            Ok(d) => {
                let got = poly_of(ctx, &k, Family::Vn(2)).and_then(|v| Ok(v_at_q(&v, 1)?));
                push_eq(&mut s.report, format!("V_2(t, 1) of {}", k), got, &(&d * &d));
            }
            Err(e) => s.report.push(format!("V_2(t, 1) of {}", k), false, e.to_string()),
        }
    }
    s
}

/// (colored Jones index n, root order N) pairs for the ADO comparison.
pub const ADO_JONES_PAIRS: [(u32, u32); 3] = [(2, 2), (2, 3), (3, 2)];

pub fn dualities(ctx: &mut Context) -> Section {
    let mut s = Section::new(6, "Lambda_-1(-t, -1/t) = V_2(t, -1) and ADO_N(w^(1-n)) = J_n(w)");
    for k in v2_knots() {
        let name = format!("Lambda_-1(-t, -1/t) = V_2(t, -1) for {}", k);
        let lhs = poly_of(ctx, &k, Family::Lambda(2)).and_then(|l| Ok(lambda_duality_side(&l)?));
        match poly_of(ctx, &k, Family::Vn(2)).and_then(|v| Ok(v_at_q(&v, -1)?)) {
            Ok(rhs) => push_eq(&mut s.report, name, lhs, &rhs),
            Err(e) => s.report.push(name, false, e.to_string()),
        }
    }
    for k in ["3_1", "4_1"] {
        for (n, big_n) in ADO_JONES_PAIRS {
            let name = format!("ADO_{}(w^(1-{})) = J_{}(w) for {}", big_n, n, n, k);
            let sides = poly_of(ctx, k, Family::Ado(big_n))
                .and_then(|a| Ok((a, poly_of(ctx, k, Family::ColoredJones(n))?)))
                .and_then(|(a, j)| Ok(ado_jones_sides(&a, big_n, &j, n)?));
            match sides {
                Ok((l, r)) => push_eq(&mut s.report, name, Ok(l), &r),
                Err(e) => s.report.push(name, false, e.to_string()),
            }
        }
    }
    s
}

pub fn genus_bound(ctx: &mut Context) -> Section {
    let mut s = Section::new(7, "deg_t V_2 = 4 g");
    for k in v2_knots() {
        let genus = KnotInput::named(&k).ok().and_then(|i| i.genus);
        let got = poly_of(ctx, &k, Family::Vn(2)).and_then(|v| Ok(v.degree_span("t")?));
        match (got, genus) {
            (Ok(d), Some(g)) => s.report.push(format!("deg_t V_2 of {}", k), d == 4 * g, format!("degree {}, genus {}", d, g)),
            (Err(e), _) => s.report.push(format!("deg_t V_2 of {}", k), false, e.to_string()),
            (_, None) => s.report.push(format!("deg_t V_2 of {}", k), false, "genus unknown"),
        }
    }
    s
}

pub fn separations(ctx: &mut Context) -> Section {
    let mut s = Section::new(8, "separations");
    let pairs: [(&str, &str, Family, bool); 5] = [
        ("11n34", "11n42", Family::Vn(2), false),
        ("11n34", "11n42", Family::Lambda(2), false),
        ("11n73", "11n74", Family::Vn(2), false),
        ("11n73", "11n74", Family::Lambda(2), true),
        ("3_1", "m3_1", Family::Vn(2), false),
    ];
    for (a, b, f, equal) in pairs {
        let name = format!("{} {} {} {}", f, a, if equal { "=" } else { "!=" }, b);
        match (poly_of(ctx, a, f), poly_of(ctx, b, f)) {
            (Ok(x), Ok(y)) => s.report.push(name, (x == y) == equal, ""),
            (Err(e), _) | (_, Err(e)) => s.report.push(name, false, e.to_string()),
        }
    }
    let mirrored = poly_of(ctx, "3_1", Family::Vn(2)).and_then(|v| Ok(q_inverted(&v)?));
    match poly_of(ctx, "m3_1", Family::Vn(2)) {
        Ok(m) => push_eq(&mut s.report, "V_2(m3_1)(t, q) = V_2(3_1)(t, 1/q)".into(), mirrored, &m),
        Err(e) => s.report.push("V_2(m3_1)(t, q) = V_2(3_1)(t, 1/q)", false, e.to_string()),
    }
    s
}

/// Sections for criteria 1 to 8 in order.
pub const GOLDEN_SECTIONS: [fn(&mut Context) -> Section; 8] =
    [table_lambda, rank2_operator, lambda1_factorization, v2_listings, specializations, dualities, genus_bound, separations];

fn generic_rank1(trunc: u32) -> Result<Arc<NicholsAlgebra>, InvariantError> {
    let ring = Ring::integer(&["q", "t"]);
    let q = UnitMonomial::mono(Monomial::var(0, 1));
    let t = UnitMonomial::mono(Monomial::var(1, 1));
    Ok(Arc::new(build_rank1_generic(&ring, q, t, trunc)?))
}

fn row_of(r: &RMatrix, a: usize, b: usize) -> Vec<((usize, usize), LaurentPoly)> {
    let mut row: Vec<_> = r.op().row(a, b).iter().map(|(o, v)| (r.op().pair(*o as usize), v.clone())).collect();
    row.sort_by_key(|e| e.0);
    row
}

/// Rank-1 closed forms over Z[q, t], for degrees k + l <= `max`:
/// Δ(x^k) = Σ_m [k m]_q x^m ⊗ x^{k−m}, S(x^k) = (−1)^k q^{k(k−1)/2} x^k,
/// δ_L(x^k) = Σ_m [k m]_q (tq^m; q)_{k−m} x^{k−m} ⊗ x^m, x^k ◁ x^l = (tq^k; q)_l x^{k+l},
/// ρ_L(x^k ⊗ x^l) = Σ_m [k m]_q (tq^{k−m}; q)_m (tq^{k−m})^l x^{l+m} ⊗ x^{k−m} and
/// ρ_R(x^k ⊗ x^l) = Σ_m [l m]_q (tq^k)^{l−m} (tq^k; q)_m x^{l−m} ⊗ x^{k+m}.
fn rank1_closed_forms(max: usize) -> Result<Report, InvariantError> {
    let h = generic_rank1(max as u32 + 2)?;
    let left = build_rho_left(&regular_left_module(h.clone())?)?;
    let right = build_rho_right(&regular_right_module(h.clone())?)?;
    let ring = left.ring().clone();
    let q = LaurentPoly::var(&ring, "q")?;
    let t = LaurentPoly::var(&ring, "t")?;
    let qb = |k: usize, m: usize| q_binomial(&ring, k as u32, m as u32, "q");
    let mut bad = [None, None, None, None, None, None];
    let mut flag = |i: usize, ok: bool, at: String| {
        if !ok && bad[i].is_none() {
            bad[i] = Some(at);
        }
    };
    for k in 0..=max {
        let mut delta = TensorElement::new();
        let mut coaction = TensorElement::new();
        for m in 0..=k {
            delta.add_term((m, k - m), qb(k, m)?);
            coaction.add_term((k - m, m), &qb(k, m)? * &q_pochhammer(&(&t * &q.pow(m as u32)), &q, (k - m) as u32));
        }
        flag(0, h.coproduct_basis(k) == &delta, format!("k = {}", k));
        let s = q.pow((k * k.saturating_sub(1) / 2) as u32).scale(if k % 2 == 0 { 1 } else { -1 });
        flag(1, h.antipode_basis(k) == &LinComb::single(k, s), format!("k = {}", k));
        flag(2, left_coaction_basis(&h, k) == coaction, format!("k = {}", k));
        for l in 0..=(max - k) {
            let at = format!("k = {}, l = {}", k, l);
            let tqk = &t * &q.pow(k as u32);
            flag(3, right_action_basis(&h, k, l) == LinComb::single(k + l, q_pochhammer(&tqk, &q, l as u32)), at.clone());
            let mut want = Vec::new();
            for m in 0..=k {
                let tq = &t * &q.pow((k - m) as u32);
                want.push(((l + m, k - m), &(&qb(k, m)? * &q_pochhammer(&tq, &q, m as u32)) * &tq.pow(l as u32)));
            }
            want.sort_by_key(|e| e.0);
            flag(4, row_of(&left, k, l) == want, at.clone());
            let mut want = Vec::new();
            for m in 0..=l {
                want.push(((l - m, k + m), &(&qb(l, m)? * &tqk.pow((l - m) as u32)) * &q_pochhammer(&tqk, &q, m as u32)));
            }
            want.sort_by_key(|e| e.0);
            flag(5, row_of(&right, k, l) == want, at);
        }
    }
    let names = ["coproduct", "antipode", "left coaction", "right action", "rho_L", "rho_R"];
    let mut rep = Report::new();
    for (name, b) in names.into_iter().zip(bad) {
        rep.record(format!("rank-1 closed form: {}, degree <= {}", name, max), b);
    }
    Ok(rep)
}

fn prefixed(rep: &mut Report, prefix: &str, inner: Report) {
    let ok = inner.all_passed();
    let detail = inner.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ");
    rep.push(prefix, ok, detail);
}

fn algebra_axioms(rep: &mut Report) -> Result<(), InvariantError> {
    let mut algebras = Vec::new();
    for n in 1..=4 {
        algebras.push((format!("rank 1, N = {}", n), Arc::new(build_rank1(n)?)));
    }
    for n in 1..=3 {
        algebras.push((format!("rank 2, N = {}", n), Arc::new(build_rank2_root_of_unity(n)?)));
    }
    for (name, h) in algebras {
        prefixed(rep, &format!("Hopf and automorphism axioms, {}", name), verify_hopf_axioms(&h));
        let left = regular_left_module(h.clone())?;
        let right = regular_right_module(h)?;
        prefixed(rep, &format!("YD axioms, left regular module, {}", name), verify_yd_axioms(&left));
        prefixed(rep, &format!("YD axioms, right regular module, {}", name), verify_yd_axioms(&right));
        prefixed(rep, &format!("Yang-Baxter, rho_L, {}", name), check_yang_baxter(build_rho_left(&left)?.op()));
        prefixed(rep, &format!("Yang-Baxter, rho_R, {}", name), check_yang_baxter(build_rho_right(&right)?.op()));
    }
    for n in 1..=2 {
        let y = build_yn(n)?;
        prefixed(rep, &format!("YD axioms, Y_{}", n), verify_yd_axioms(&y));
        prefixed(rep, &format!("Yang-Baxter, Y_{}", n), check_yang_baxter(build_rho_right(&y)?.op()));
    }
    Ok(())
}

fn braid_diagram(width: usize, word: &[i32]) -> Result<LongDiagram, InvariantError> {
    Ok(balanced_diagram(&BraidWord::new(width, word.to_vec())?))
}

fn state_sum_checks(rep: &mut Report) -> Result<(), InvariantError> {
    let all = ContractOptions { columns: Columns::All, ..Default::default() };
    let r2 = build_rigid(&build_rho_left(&regular_left_module(Arc::new(build_rank1(2)?))?)?)?;
    let words: [(usize, &[i32]); 7] =
        [(2, &[1]), (2, &[-1]), (3, &[1, -2]), (2, &[1, 1, 1]), (2, &[-1, -1, -1]), (3, &[1, -2, 1, -2]), (3, &[1, 1, -2, 1, -2, -2])];
    let mut bad = None;
    for (w, word) in words {
        let d = braid_diagram(w, word)?;
        if bad.is_none() && contract(&d, &r2, &all)?.columns != brute_force(&d, &r2) {
            bad = Some(format!("braid {:?}", word));
        }
    }
    rep.record("contraction equals brute-force enumeration (rank 1, N = 2)", bad);

    let r3 = build_rigid(&build_rho_left(&regular_left_module(Arc::new(build_rank1(3)?))?)?)?;
    let b = BraidWord::new(3, vec![1, 1, 1, 2, -1, 2])?;
    let base = contract(&balanced_diagram(&b), &r3, &all)?.columns;
    let mut bad = None;
    for k in 1..b.letters.len() {
        if contract(&balanced_diagram(&b.rotate(k)), &r3, &all)?.columns != base {
            bad = Some(format!("rotation {}", k));
        }
    }
    let bottom = balance_writhe_at(&normalize_extrema(&braid_to_long_diagram(&b)), KinkPlacement::Bottom)?;
    if contract(&bottom, &r3, &all)?.columns != base {
        bad = Some("kinks at the bottom".into());
    }
    let e = crate::knotdiag::find_knot("9_2")?;
    let via_plat = contract(&e.diagram(), &r3, &Default::default())?.scalar;
    if via_plat != contract(&balanced_diagram(&e.braid()), &r3, &Default::default())?.scalar {
        bad = Some("9_2 plat closure against braid closure".into());
    }
    rep.record("full matrix independent of the diagram (rank 1, N = 3)", bad);

    // Each table knot through its stored diagram and through a rotated braid closure.
    let engine = Engine::new();
    for e in builtin_knot_table() {
        let a = KnotInput::from_entry(&e);
        let b = KnotInput { diagram: balanced_diagram(&e.braid().rotate(1)), ..a.clone() };
        let mut families = vec![Family::Ado(3)];
        if crossing_number(&e.name) <= 6 {
            families.extend([Family::Lambda(2), Family::Vn(2)]);
        }
        for f in families {
            let name = format!("{} of {} agrees on two diagrams", f, e.name);
            match (engine.compute(&a, f, false), engine.compute(&b, f, false)) {
                (Ok(x), Ok(y)) => rep.push(name, x.polynomial == y.polynomial, ""),
                (Err(err), _) | (_, Err(err)) => rep.push(name, false, err.to_string()),
            }
        }
    }
    Ok(())
}

fn normalization_checks(rep: &mut Report) -> Result<(), InvariantError> {
    let e = Engine::new();
    let families = [Family::Ado(2), Family::Ado(3), Family::ColoredJones(2), Family::Lambda(2), Family::Lambda(3), Family::Vn(1), Family::Vn(2)];
    let unknot = KnotInput::named("unknot")?;
    for f in families {
        let r = e.compute(&unknot, f, true)?;
        rep.push(format!("unknot gives the identity matrix, {}", f), r.polynomial.is_one() && r.checks.all_passed(), r.polynomial.to_string());
    }
    for k in ["3_1", "4_1", "5_2"] {
        let knot = KnotInput::named(k)?;
        for f in [Family::Lambda(2), Family::Lambda(3), Family::Vn(1), Family::Vn(2)] {
            let name = format!("{} of {} is gauge-free with a scalar matrix", f, k);
            match e.compute(&knot, f, true) {
                Ok(r) => prefixed(rep, &name, r.checks),
                Err(err) => rep.push(name, false, err.to_string()),
            }
        }
    }
    Ok(())
}

pub fn axioms(_: &mut Context) -> Section {
    let mut s = Section::new(9, "axioms, closed forms and state-sum properties");
    let rep = &mut s.report;
    let steps: [(&str, fn(&mut Report) -> Result<(), InvariantError>); 4] = [
        ("algebraic axioms", algebra_axioms),
        ("rank-1 closed forms", |rep| Ok(rep.extend(rank1_closed_forms(6)?))),
        ("state sum", state_sum_checks),
        ("normalization", normalization_checks),
    ];
    for (name, step) in steps {
        if let Err(e) = step(rep) {
            rep.push(name, false, e.to_string());
        }
    }
    s
}
