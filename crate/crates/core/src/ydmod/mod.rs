//! Yetter–Drinfel'd modules with automorphism over the algebras of [`crate::nichols`].

mod axioms;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::lincomb::LinComb;
use crate::nichols::{
    build_rank1_generic, build_rank2_generic_with, AlgebraKind, Degree, NicholsAlgebra, NicholsError,
    TensorElement,
};
use crate::polyring::{LaurentPoly, Monomial, PolyError, Ring, UnitMonomial};

pub use axioms::verify_yd_axioms;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum YdError {
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("vector leaves the submodule: {0}")]
    Closure(String),
    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),
    #[error(transparent)]
    Nichols(#[from] NicholsError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A finite Yetter–Drinfel'd module. The coaction of basis vector `m` is stored as a
/// combination keyed by (host word, module index) on both sides.
pub struct YDModule {
    side: Side,
    host: Arc<NicholsAlgebra>,
    vectors: Vec<LinComb<usize>>,
    names: Vec<String>,
    degrees: Vec<Degree>,
    action: Vec<Vec<LinComb<usize>>>,
    coaction: Vec<LinComb<(usize, usize)>>,
    phi: Vec<UnitMonomial>,
}

impl std::fmt::Debug for YDModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "YDModule({:?}, dim {}, basis {:?})", self.side, self.dim(), self.names)
    }
}

/// delta_L(a) = sum q^{(deg a2, deg a3)} a1 S(phi(a3)) (x) a2 on a basis word.
pub fn left_coaction_basis(h: &NicholsAlgebra, a: usize) -> TensorElement {
    let mut out = TensorElement::new();
    for (&(a1, a2, a3), c) in h.iterated_coproduct_basis(a).iter() {
        let u = h.bichar(h.degree(a2), h.degree(a3)).mul(h.phi(a3));
        for (&s, sc) in h.antipode_basis(a3).iter() {
            if let Some((k, u2)) = h.mul_basis(a1, s) {
                out.add_term((k, a2), (c * sc).mul_unit(u.mul(u2)));
            }
        }
    }
    out
}

pub fn left_coaction(h: &NicholsAlgebra, a: &LinComb<usize>) -> TensorElement {
    let mut out = TensorElement::new();
    for (&i, c) in a.iter() {
        out.add_scaled(&left_coaction_basis(h, i), c);
    }
    out
}

/// lambda_R(a (x) b) = sum q^{(deg a, deg b1)} S(phi(b1)) a b2 on basis words.
pub fn right_action_basis(h: &NicholsAlgebra, a: usize, b: usize) -> LinComb<usize> {
    let mut out = LinComb::new();
    for (&(b1, b2), c) in h.coproduct_basis(b).iter() {
        let u = h.bichar(h.degree(a), h.degree(b1)).mul(h.phi(b1));
        for (&s, sc) in h.antipode_basis(b1).iter() {
            let Some((sa, u1)) = h.mul_basis(s, a) else { continue };
            let Some((k, u2)) = h.mul_basis(sa, b2) else { continue };
            out.add_term(k, (c * sc).mul_unit(u.mul(u1).mul(u2)));
        }
    }
    out
}

pub fn right_action(h: &NicholsAlgebra, a: &LinComb<usize>, b: &LinComb<usize>) -> LinComb<usize> {
    let mut out = LinComb::new();
    for (&i, ci) in a.iter() {
        for (&j, cj) in b.iter() {
            out.add_scaled(&right_action_basis(h, i, j), &(ci * cj));
        }
    }
    out
}

fn host_bound(h: &NicholsAlgebra) -> i32 {
    match h.kind() {
        AlgebraKind::Rank1Generic { truncation } | AlgebraKind::Rank2Generic { truncation } => truncation as i32,
        _ => i32::MAX,
    }
}

impl YDModule {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn host(&self) -> &Arc<NicholsAlgebra> {
        &self.host
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.host.ring()
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vector(&self, m: usize) -> &LinComb<usize> {
        &self.vectors[m]
    }

    pub fn degree(&self, m: usize) -> Degree {
        self.degrees[m]
    }

    pub fn total_degree(&self, m: usize) -> i32 {
        self.degrees[m][0] + self.degrees[m][1]
    }

    /// Action of host word `h` on module vector `m` (h.m on the left, m.h on the right).
    pub fn act(&self, m: usize, h: usize) -> &LinComb<usize> {
        &self.action[m][h]
    }

    /// Coaction of `m` keyed by (host word, module index).
    pub fn coaction(&self, m: usize) -> &LinComb<(usize, usize)> {
        &self.coaction[m]
    }

    pub fn phi(&self, m: usize) -> UnitMonomial {
        self.phi[m]
    }

    /// Largest total degree for which host products are exact.
    pub fn degree_bound(&self) -> i32 {
        host_bound(&self.host)
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn to_json(&self) -> Value {
        let h = &self.host;
        let mut action = Vec::new();
        for m in 0..self.dim() {
            for w in 0..h.dim() {
                for (&k, c) in self.action[m][w].iter() {
                    action.push(json!({"vector": self.names[m], "word": h.word_name(w),
                        "out": self.names[k], "coeff": c.to_json_value()}));
                }
            }
        }
        let coaction: Vec<Value> = (0..self.dim())
            .map(|m| {
                let terms: Vec<Value> = self.coaction[m]
                    .iter()
                    .map(|(&(w, k), c)| json!({"word": h.word_name(w), "vector": self.names[k], "coeff": c.to_json_value()}))
                    .collect();
                json!({"vector": self.names[m], "terms": terms})
            })
            .collect();
        json!({
            "side": format!("{:?}", self.side),
            "basis": self.names,
            "action": action,
            "coaction": coaction,
        })
    }
}

/// H as a left module over itself by multiplication, with coaction delta_L.
pub fn regular_left_module(h: Arc<NicholsAlgebra>) -> Result<YDModule, YdError> {
    let d = h.dim();
    let one = LaurentPoly::one(h.ring());
    let bound = host_bound(&h);
    let action = (0..d)
        .map(|m| {
            (0..d)
                .map(|w| match h.mul_basis(w, m) {
                    Some((k, u)) if h.total_degree(w) + h.total_degree(m) <= bound => {
                        LinComb::single(k, one.mul_unit(u))
                    }
                    _ => LinComb::new(),
                })
                .collect()
        })
        .collect();
    let coaction = (0..d).map(|m| left_coaction_basis(&h, m)).collect();
    Ok(YDModule {
        side: Side::Left,
        vectors: (0..d).map(|m| LinComb::single(m, one.clone())).collect(),
        names: (0..d).map(|m| h.word_name(m)).collect(),
        degrees: (0..d).map(|m| h.degree(m)).collect(),
        phi: (0..d).map(|m| h.phi(m)).collect(),
        action,
        coaction,
        host: h,
    })
}

/// H as a right module over itself by lambda_R, with coaction Delta.
pub fn regular_right_module(h: Arc<NicholsAlgebra>) -> Result<YDModule, YdError> {
    let d = h.dim();
    let one = LaurentPoly::one(h.ring());
    let bound = host_bound(&h);
    let action = (0..d)
        .map(|m| {
            (0..d)
                .map(|w| {
                    if h.total_degree(w) + h.total_degree(m) <= bound {
                        right_action_basis(&h, m, w)
                    } else {
                        LinComb::new()
                    }
                })
                .collect()
        })
        .collect();
    let coaction = (0..d).map(|m| h.coproduct_basis(m).map_keys(|(a, b)| (b, a))).collect();
    Ok(YDModule {
        side: Side::Right,
        vectors: (0..d).map(|m| LinComb::single(m, one.clone())).collect(),
        names: (0..d).map(|m| h.word_name(m)).collect(),
        degrees: (0..d).map(|m| h.degree(m)).collect(),
        phi: (0..d).map(|m| h.phi(m)).collect(),
        action,
        coaction,
        host: h,
    })
}

/// Basis words of positive degree with delta_L w = 1 (x) w.
pub fn find_coinvariants(m: &YDModule) -> Vec<usize> {
    let h = &m.host;
    let mut out = Vec::new();
    for i in 1..m.dim() {
        if m.vectors[i].len() != 1 || m.total_degree(i) > host_bound(h) {
            continue;
        }
        let expected = LinComb::single((0usize, i), LaurentPoly::one(h.ring()));
        if m.coaction[i] == expected {
            out.push(i);
        }
    }
    out
}

/// Quotient of a regular left module by the left ideal generated by coinvariant words.
pub fn quotient_by_coinvariants(m: &YDModule, generators: &[usize]) -> Result<YDModule, YdError> {
    if m.side != Side::Left {
        return Err(YdError::Construction("quotients are formed from left modules".into()));
    }
    let h = &m.host;
    let mut ideal: BTreeSet<usize> = BTreeSet::new();
    for &g in generators {
        for w in 0..h.dim() {
            ideal.extend(m.action[g][w].keys().copied());
        }
        ideal.insert(g);
    }
    for &k in &ideal {
        for (&(_, k2), _) in m.coaction[k].iter() {
            if !ideal.contains(&k2) {
                return Err(YdError::NotWellDefined(format!(
                    "coaction of {} leaves the ideal through {}",
                    m.names[k], m.names[k2]
                )));
            }
        }
    }
    let keep: Vec<usize> = (0..m.dim()).filter(|i| !ideal.contains(i)).collect();
    let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let project = |c: &LinComb<usize>| {
        let mut out = LinComb::new();
        for (k, v) in c.iter() {
            if let Some(&p) = pos.get(k) {
                out.add_term(p, v.clone());
            }
        }
        out
    };
    let action = keep.iter().map(|&i| (0..h.dim()).map(|w| project(&m.action[i][w])).collect()).collect();
    let coaction = keep
        .iter()
        .map(|&i| {
            let mut out = LinComb::new();
            for (&(w, k), v) in m.coaction[i].iter() {
                if let Some(&p) = pos.get(&k) {
                    out.add_term((w, p), v.clone());
                }
            }
            out
        })
        .collect();
    Ok(YDModule {
        side: Side::Left,
        host: h.clone(),
        vectors: keep.iter().map(|&i| m.vectors[i].clone()).collect(),
        names: keep.iter().map(|&i| m.names[i].clone()).collect(),
        degrees: keep.iter().map(|&i| m.degrees[i]).collect(),
        phi: keep.iter().map(|&i| m.phi[i]).collect(),
        action,
        coaction,
    })
}

/// The n-dimensional colored-Jones module: F[x]/(x^n) over generic rank 1 with
/// t = q^{1-n}, in the ring Z[q^{+-1}].
pub fn build_jones_module(n: u32) -> Result<YDModule, YdError> {
    if n == 0 {
        return Err(YdError::Construction("n must be positive".into()));
    }
    let ring = Ring::integer(&["q"]);
    let q = UnitMonomial::mono(Monomial::var(0, 1));
    let t = q.pow(1 - n as i32);
    let h = Arc::new(build_rank1_generic(&ring, q, t, 2 * n)?);
    let reg = regular_left_module(h)?;
    let gens = find_coinvariants(&reg);
    if gens != [n as usize] {
        return Err(YdError::Construction(format!("unexpected coinvariants {:?}", gens)));
    }
    quotient_by_coinvariants(&reg, &gens)
}

/// Y_n over generic rank 2 in Z[s^{+-1}, g^{+-1}, t^{+-1}] with t1 = s^{-n} t^{-1}, t2 = s^{-n} t.
pub fn build_yn(n: u32) -> Result<YDModule, YdError> {
    let ring = Ring::integer(&["s", "g", "t"]);
    let s = UnitMonomial::mono(Monomial::var(0, 1));
    let t = UnitMonomial::mono(Monomial::var(2, 1));
    let t1 = s.pow(-(n as i32)).mul(t.inv());
    let t2 = s.pow(-(n as i32)).mul(t);
    build_yn_with(&ring, n, t1, t2)
}

/// Y_n for arbitrary scaling scalars; closure fails unless t1 t2 q^n = 1.
pub fn build_yn_with(ring: &Arc<Ring>, n: u32, t1: UnitMonomial, t2: UnitMonomial) -> Result<YDModule, YdError> {
    if n == 0 {
        return Err(YdError::Construction("n must be positive".into()));
    }
    let h = Arc::new(build_rank2_generic_with(ring, 4 * n, t1, t2)?);
    let one = LaurentPoly::one(ring);
    let ni = n as i32;
    let top1 = h.index_of(&alternating(1, 2 * n as usize)).unwrap();
    let top2 = h.index_of(&alternating(2, 2 * n as usize)).unwrap();
    let q12 = h.braiding().q[0][1];
    let alpha = t2.mul(q12.negate().pow(ni));
    let mut words: Vec<usize> = (0..h.dim()).filter(|&i| h.total_degree(i) < 2 * ni).collect();
    words.sort_by_key(|&i| (h.total_degree(i), h.word(i).first().copied()));
    let mut vectors: Vec<LinComb<usize>> = words.iter().map(|&i| LinComb::single(i, one.clone())).collect();
    let mut names: Vec<String> = words.iter().map(|&i| h.word_name(i)).collect();
    let mut v = LinComb::single(top1, one.clone());
    v.add_term(top2, LaurentPoly::from_unit(ring, alpha));
    vectors.push(v);
    names.push("v".into());
    let vi = vectors.len() - 1;
    let pos: HashMap<usize, usize> = words.iter().enumerate().map(|(a, &b)| (b, a)).collect();

    let coords = |x: &LinComb<usize>, what: &str| -> Result<LinComb<usize>, YdError> {
        let mut out = LinComb::new();
        let c1 = x.get(&top1).cloned().unwrap_or_else(|| LaurentPoly::zero(ring));
        let c2 = x.get(&top2).cloned().unwrap_or_else(|| LaurentPoly::zero(ring));
        if c2 != c1.mul_unit(alpha) {
            return Err(YdError::Closure(format!("{}: top-degree part is not a multiple of v", what)));
        }
        out.add_term(vi, c1);
        for (k, c) in x.iter() {
            if *k == top1 || *k == top2 {
                continue;
            }
            match pos.get(k) {
                Some(&p) => out.add_term(p, c.clone()),
                None => return Err(YdError::Closure(format!("{}: component {}", what, h.word_name(*k)))),
            }
        }
        Ok(out)
    };

    let bound = 4 * ni;
    let vdeg = |m: usize| if m == vi { 2 * ni } else { h.total_degree(words[m]) };
    let mut action = Vec::with_capacity(vectors.len());
    for m in 0..vectors.len() {
        let mut row = Vec::with_capacity(h.dim());
        for w in 0..h.dim() {
            if vdeg(m) + h.total_degree(w) > bound {
                row.push(LinComb::new());
                continue;
            }
            let y = right_action(&h, &vectors[m], &LinComb::single(w, one.clone()));
            row.push(coords(&y, &format!("{} . {}", names[m], h.word_name(w)))?);
        }
        action.push(row);
    }
    let mut coaction = Vec::with_capacity(vectors.len());
    for m in 0..vectors.len() {
        let delta = h.coproduct_lin(&vectors[m]);
        let mut by_second: HashMap<usize, LinComb<usize>> = HashMap::new();
        for (&(a, b), c) in delta.iter() {
            by_second.entry(b).or_default().add_term(a, c.clone());
        }
        let mut out = LinComb::new();
        for (b, first) in by_second {
            let co = coords(&first, &format!("first leg of Delta {}", names[m]))?;
            for (&k, c) in co.iter() {
                out.add_term((b, k), c.clone());
            }
        }
        coaction.push(out);
    }
    let mut degrees: Vec<Degree> = words.iter().map(|&i| h.degree(i)).collect();
    degrees.push([ni, ni]);
    let phi = degrees.iter().map(|&d| h.phi_degree(d)).collect();
    Ok(YDModule { side: Side::Right, host: h, vectors, names, degrees, action, coaction, phi })
}

fn alternating(start: u8, len: usize) -> Vec<u8> {
    (0..len).map(|k| if k % 2 == 0 { start } else { 3 - start }).collect()
}

#[cfg(test)]
mod tests;
