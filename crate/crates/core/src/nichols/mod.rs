//! Diagonal-type Nichols algebras of rank 1 and 2 with a scaling automorphism.
//!
//! Structure maps are tabulated on the basis at build time: the product of two basis
//! words is always zero or a unit multiple of a basis word, the coproduct comes from
//! the recursive braided-product formula and the antipode from the recursion on degree.

mod axioms;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::lincomb::LinComb;
use crate::polyring::{LaurentPoly, Monomial, PolyError, Ring, UnitMonomial};

pub use axioms::verify_hopf_axioms;

pub type Degree = [i32; 2];
pub type TensorElement = LinComb<(usize, usize)>;
pub type Tensor3 = LinComb<(usize, usize, usize)>;

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NicholsError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("word {0} is not a basis word")]
    NotBasisWord(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    /// F[x]/(x^N).
    Rank1RootOfUnity(u32),
    /// F[x] truncated above the given degree.
    Rank1Generic { truncation: u32 },
    /// The 4N-dimensional rank-2 algebra with q_ii = -1.
    Rank2RootOfUnity(u32),
    /// Alternating words with q_ii = -1 and generic q, truncated above the given degree.
    Rank2Generic { truncation: u32 },
}

impl AlgebraKind {
    pub fn rank(&self) -> usize {
        match self {
            AlgebraKind::Rank1RootOfUnity(_) | AlgebraKind::Rank1Generic { .. } => 1,
            _ => 2,
        }
    }

    /// True when the algebra is the whole Nichols algebra rather than a degree truncation.
    pub fn is_finite(&self) -> bool {
        matches!(self, AlgebraKind::Rank1RootOfUnity(_) | AlgebraKind::Rank2RootOfUnity(_))
    }
}

/// Parameters of a diagonal braiding with scaling automorphism.
#[derive(Clone, Debug)]
pub struct DiagonalBraiding {
    pub rank: usize,
    pub q: [[UnitMonomial; 2]; 2],
    pub t: [UnitMonomial; 2],
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    algebra: u64,
    pub terms: LinComb<usize>,
}

impl AlgebraElement {
    pub fn terms(&self) -> &LinComb<usize> {
        &self.terms
    }
}

pub struct NicholsAlgebra {
    id: u64,
    kind: AlgebraKind,
    ring: Arc<Ring>,
    braiding: DiagonalBraiding,
    words: Vec<Vec<u8>>,
    degrees: Vec<Degree>,
    index: HashMap<Vec<u8>, usize>,
    // coefficient c in (x2x1)^N = c (x1x2)^N
    top_relation: UnitMonomial,
    prod: Vec<Option<(usize, UnitMonomial)>>,
    coprod: Vec<TensorElement>,
    antipode: Vec<LinComb<usize>>,
}

impl fmt::Debug for NicholsAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NicholsAlgebra({:?}, dim {})", self.kind, self.dim())
    }
}

fn alternating(start: u8, len: usize) -> Vec<u8> {
    (0..len).map(|k| if k % 2 == 0 { start } else { 3 - start }).collect()
}

impl NicholsAlgebra {
    pub fn build(kind: AlgebraKind, ring: Arc<Ring>, braiding: DiagonalBraiding) -> Result<Self, NicholsError> {
        if braiding.rank != kind.rank() {
            return Err(NicholsError::BadParameter("braiding rank does not match algebra kind".into()));
        }
        let mut words: Vec<Vec<u8>> = Vec::new();
        match kind {
            AlgebraKind::Rank1RootOfUnity(n) => {
                if n == 0 {
                    return Err(NicholsError::BadParameter("N must be positive".into()));
                }
                (0..n as usize).for_each(|k| words.push(vec![1; k]));
            }
            AlgebraKind::Rank1Generic { truncation } => (0..=truncation as usize).for_each(|k| words.push(vec![1; k])),
            AlgebraKind::Rank2RootOfUnity(n) => {
                if n == 0 {
                    return Err(NicholsError::BadParameter("N must be positive".into()));
                }
                words.push(Vec::new());
                for len in 1..=2 * n as usize {
                    words.push(alternating(1, len));
                    if len < 2 * n as usize {
                        words.push(alternating(2, len));
                    }
                }
            }
            AlgebraKind::Rank2Generic { truncation } => {
                words.push(Vec::new());
                for len in 1..=truncation as usize {
                    words.push(alternating(1, len));
                    words.push(alternating(2, len));
                }
            }
        }
        let degrees = words
            .iter()
            .map(|w| {
                let a = w.iter().filter(|&&l| l == 1).count() as i32;
                [a, w.len() as i32 - a]
            })
            .collect();
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let top_relation = match kind {
            AlgebraKind::Rank2RootOfUnity(n) => braiding.q[1][0].negate().pow(n as i32).negate(),
            _ => UnitMonomial::ONE,
        };
        let mut alg = NicholsAlgebra {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            kind,
            ring,
            braiding,
            words,
            degrees,
            index,
            top_relation,
            prod: Vec::new(),
            coprod: Vec::new(),
            antipode: Vec::new(),
        };
        alg.fill_products();
        alg.fill_coproducts();
        alg.fill_antipodes();
        Ok(alg)
    }

    fn concat(&self, u: &[u8], v: &[u8]) -> Option<(usize, UnitMonomial)> {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        match self.kind {
            AlgebraKind::Rank1RootOfUnity(n) => (w.len() < n as usize).then(|| (w.len(), UnitMonomial::ONE)),
            AlgebraKind::Rank1Generic { truncation } => {
                (w.len() <= truncation as usize).then(|| (w.len(), UnitMonomial::ONE))
            }
            AlgebraKind::Rank2RootOfUnity(n) => {
                if w.windows(2).any(|p| p[0] == p[1]) || w.len() > 2 * n as usize {
                    None
                } else if w.len() == 2 * n as usize && w[0] == 2 {
                    Some((self.index[&alternating(1, w.len())], self.top_relation))
                } else {
                    Some((self.index[&w], UnitMonomial::ONE))
                }
            }
            AlgebraKind::Rank2Generic { truncation } => {
                if w.windows(2).any(|p| p[0] == p[1]) || w.len() > truncation as usize {
                    None
                } else {
                    Some((self.index[&w], UnitMonomial::ONE))
                }
            }
        }
    }

    fn fill_products(&mut self) {
        let d = self.dim();
        let mut prod = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                prod.push(self.concat(&self.words[i], &self.words[j]));
            }
        }
        self.prod = prod;
    }

    fn fill_coproducts(&mut self) {
        let ring = self.ring.clone();
        let d = self.dim();
        let mut coprod: Vec<TensorElement> = Vec::with_capacity(d);
        for i in 0..d {
            let w = &self.words[i];
            if w.is_empty() {
                coprod.push(LinComb::single((0, 0), LaurentPoly::one(&ring)));
                continue;
            }
            let letter = self.index[&w[..1].to_vec()];
            let suffix = self.index[&w[1..].to_vec()];
            let mut out = TensorElement::new();
            for (&(c, dd), coef) in coprod[suffix].iter() {
                if let Some((xc, u)) = self.mul_basis(letter, c) {
                    out.add_term((xc, dd), coef.mul_unit(u));
                }
                if let Some((xd, u)) = self.mul_basis(letter, dd) {
                    let b = self.bichar(self.degrees[letter], self.degrees[c]);
                    out.add_term((c, xd), coef.mul_unit(u.mul(b)));
                }
            }
            coprod.push(out);
        }
        self.coprod = coprod;
    }

    fn fill_antipodes(&mut self) {
        let ring = self.ring.clone();
        let d = self.dim();
        let mut s: Vec<LinComb<usize>> = Vec::with_capacity(d);
        for i in 0..d {
            if i == 0 {
                s.push(LinComb::single(0, LaurentPoly::one(&ring)));
                continue;
            }
            let mut out = LinComb::single(i, LaurentPoly::constant(&ring, -1));
            for (&(a, b), coef) in self.coprod[i].iter() {
                if (a == i && b == 0) || (a == 0 && b == i) {
                    debug_assert!(coef.is_one());
                    continue;
                }
                for (&sa, sc) in s[a].iter() {
                    if let Some((k, u)) = self.mul_basis(sa, b) {
                        out.add_term(k, -&(sc * coef).mul_unit(u));
                    }
                }
            }
            s.push(out);
        }
        self.antipode = s;
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.kind.rank()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn braiding(&self) -> &DiagonalBraiding {
        &self.braiding
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.degrees[i]
    }

    pub fn total_degree(&self, i: usize) -> i32 {
        self.degrees[i][0] + self.degrees[i][1]
    }

    pub fn index_of(&self, letters: &[u8]) -> Option<usize> {
        self.index.get(letters).copied()
    }

    pub fn word_name(&self, i: usize) -> String {
        word_name(self.rank(), &self.words[i])
    }

    /// Basis index from a display name such as `x1x2x1` or `x^3`.
    pub fn parse_word(&self, name: &str) -> Result<usize, NicholsError> {
        let letters = parse_word_letters(name).ok_or_else(|| NicholsError::NotBasisWord(name.to_string()))?;
        self.index_of(&letters).ok_or_else(|| NicholsError::NotBasisWord(name.to_string()))
    }

    /// q^{(a,b)} = prod q_ij^{a_i b_j}.
    pub fn bichar(&self, a: Degree, b: Degree) -> UnitMonomial {
        let mut u = UnitMonomial::ONE;
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                let e = a[i] * b[j];
                if e != 0 {
                    u = u.mul(self.braiding.q[i][j].pow(e));
                }
            }
        }
        u
    }

    /// prod t_i^{a_i}.
    pub fn phi_degree(&self, a: Degree) -> UnitMonomial {
        let mut u = UnitMonomial::ONE;
        for i in 0..self.rank() {
            if a[i] != 0 {
                u = u.mul(self.braiding.t[i].pow(a[i]));
            }
        }
        u
    }

    pub fn phi(&self, i: usize) -> UnitMonomial {
        self.phi_degree(self.degrees[i])
    }

    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(usize, UnitMonomial)> {
        self.prod[i * self.dim() + j]
    }

    pub fn coproduct_basis(&self, i: usize) -> &TensorElement {
        &self.coprod[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &LinComb<usize> {
        &self.antipode[i]
    }

    pub fn unit_poly(&self, u: UnitMonomial) -> LaurentPoly {
        LaurentPoly::from_unit(&self.ring, u)
    }

    pub fn element(&self, terms: LinComb<usize>) -> AlgebraElement {
        AlgebraElement { algebra: self.id, terms }
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        self.element(LinComb::single(i, LaurentPoly::one(&self.ring)))
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    fn own(&self, a: &AlgebraElement) -> Result<(), NicholsError> {
        if a.algebra == self.id {
            Ok(())
        } else {
            Err(NicholsError::AlgebraMismatch)
        }
    }

    pub fn mul_lin(&self, a: &LinComb<usize>, b: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (&i, ci) in a.iter() {
            for (&j, cj) in b.iter() {
                if let Some((k, u)) = self.mul_basis(i, j) {
                    out.add_term(k, (ci * cj).mul_unit(u));
                }
            }
        }
        out
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, NicholsError> {
        self.own(a)?;
        self.own(b)?;
        Ok(self.element(self.mul_lin(&a.terms, &b.terms)))
    }

    /// tau(a (x) b) = q^{(deg a, deg b)} b (x) a, termwise.
    pub fn braid_tensor(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<TensorElement, NicholsError> {
        self.own(a)?;
        self.own(b)?;
        let mut out = TensorElement::new();
        for (&i, ci) in a.terms.iter() {
            for (&j, cj) in b.terms.iter() {
                out.add_term((j, i), (ci * cj).mul_unit(self.bichar(self.degrees[i], self.degrees[j])));
            }
        }
        Ok(out)
    }

    pub fn coproduct_lin(&self, a: &LinComb<usize>) -> TensorElement {
        let mut out = TensorElement::new();
        for (&i, c) in a.iter() {
            out.add_scaled(&self.coprod[i], c);
        }
        out
    }

    pub fn coproduct(&self, a: &AlgebraElement) -> Result<TensorElement, NicholsError> {
        self.own(a)?;
        Ok(self.coproduct_lin(&a.terms))
    }

    /// (Delta (x) id) Delta on a basis word.
    pub fn iterated_coproduct_basis(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in self.coprod[i].iter() {
            for (&(a1, a2), c2) in self.coprod[a].iter() {
                out.add_term((a1, a2, b), c * c2);
            }
        }
        debug_assert_eq!(out, self.iterated_coproduct_right(i));
        out
    }

    /// (id (x) Delta) Delta on a basis word.
    pub fn iterated_coproduct_right(&self, i: usize) -> Tensor3 {
        let mut out = Tensor3::new();
        for (&(a, b), c) in self.coprod[i].iter() {
            for (&(b1, b2), c2) in self.coprod[b].iter() {
                out.add_term((a, b1, b2), c * c2);
            }
        }
        out
    }

    pub fn iterated_coproduct(&self, a: &AlgebraElement) -> Result<Tensor3, NicholsError> {
        self.own(a)?;
        let mut out = Tensor3::new();
        for (&i, c) in a.terms.iter() {
            out.add_scaled(&self.iterated_coproduct_basis(i), c);
        }
        Ok(out)
    }

    pub fn antipode_lin(&self, a: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (&i, c) in a.iter() {
            out.add_scaled(&self.antipode[i], c);
        }
        out
    }

    pub fn antipode(&self, a: &AlgebraElement) -> Result<AlgebraElement, NicholsError> {
        self.own(a)?;
        Ok(self.element(self.antipode_lin(&a.terms)))
    }

    pub fn automorphism_lin(&self, a: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::new();
        for (&i, c) in a.iter() {
            out.add_term(i, c.mul_unit(self.phi(i)));
        }
        out
    }

    pub fn apply_automorphism(&self, a: &AlgebraElement) -> Result<AlgebraElement, NicholsError> {
        self.own(a)?;
        Ok(self.element(self.automorphism_lin(&a.terms)))
    }

    pub fn counit_lin(&self, a: &LinComb<usize>) -> LaurentPoly {
        a.get(&0).cloned().unwrap_or_else(|| LaurentPoly::zero(&self.ring))
    }

    pub fn counit(&self, a: &AlgebraElement) -> Result<LaurentPoly, NicholsError> {
        self.own(a)?;
        Ok(self.counit_lin(&a.terms))
    }

    /// Braided product on H (x) H: (a (x) b)(c (x) d) = q^{(deg b, deg c)} ac (x) bd.
    pub fn tensor_mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        let mut out = TensorElement::new();
        for (&(a, b), c1) in x.iter() {
            for (&(c, d), c2) in y.iter() {
                let (Some((ac, u1)), Some((bd, u2))) = (self.mul_basis(a, c), self.mul_basis(b, d)) else {
                    continue;
                };
                let u = u1.mul(u2).mul(self.bichar(self.degrees[b], self.degrees[c]));
                out.add_term((ac, bd), (c1 * c2).mul_unit(u));
            }
        }
        out
    }

    /// Structure constants as JSON.
    pub fn structure_json(&self) -> Value {
        let name = |i: usize| self.word_name(i);
        let d = self.dim();
        let mut products = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if let Some((k, u)) = self.mul_basis(i, j) {
                    products.push(json!({"left": name(i), "right": name(j), "out": name(k),
                        "coeff": self.unit_poly(u).to_json_value()}));
                }
            }
        }
        let coproducts: Vec<Value> = (0..d)
            .map(|i| {
                let terms: Vec<Value> = self.coprod[i]
                    .iter()
                    .map(|(&(a, b), c)| json!({"left": name(a), "right": name(b), "coeff": c.to_json_value()}))
                    .collect();
                json!({"word": name(i), "terms": terms})
            })
            .collect();
        let antipodes: Vec<Value> = (0..d)
            .map(|i| {
                let terms: Vec<Value> = self.antipode[i]
                    .iter()
                    .map(|(&a, c)| json!({"word": name(a), "coeff": c.to_json_value()}))
                    .collect();
                json!({"word": name(i), "terms": terms})
            })
            .collect();
        json!({
            "kind": format!("{:?}", self.kind),
            "basis": (0..d).map(name).collect::<Vec<_>>(),
            "product": products,
            "coproduct": coproducts,
            "antipode": antipodes,
        })
    }
}

pub fn word_name(rank: usize, w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    if rank == 1 {
        return if w.len() == 1 { "x".into() } else { format!("x^{}", w.len()) };
    }
    w.iter().map(|l| format!("x{}", l)).collect()
}

/// Letters of a word written as `1`, `x`, `x^k` or a concatenation of `x1`/`x2`.
pub fn parse_word_letters(name: &str) -> Option<Vec<u8>> {
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "1" {
        return Some(Vec::new());
    }
    if s == "x" {
        return Some(vec![1]);
    }
    if let Some(k) = s.strip_prefix("x^") {
        return k.parse::<usize>().ok().map(|k| vec![1; k]);
    }
    let mut out = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let tail = rest.strip_prefix('x')?;
        let l = match tail.chars().next()? {
            '1' => 1,
            '2' => 2,
            _ => return None,
        };
        out.push(l);
        rest = &tail[1..];
    }
    Some(out)
}

fn unit_of(ring: &Arc<Ring>, name: &str) -> Result<UnitMonomial, NicholsError> {
    let slot = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
    Ok(UnitMonomial::mono(Monomial::var(slot, 1)))
}

/// Rank 1 at a primitive N-th root of unity w: F[x]/(x^N) over Z[w][t^{+-1}], q = w.
pub fn build_rank1(n: u32) -> Result<NicholsAlgebra, NicholsError> {
    if n == 0 {
        return Err(NicholsError::BadParameter("N must be positive".into()));
    }
    let ring = Ring::cyclotomic(n, &["t"]);
    let t = unit_of(&ring, "t")?;
    let braiding = DiagonalBraiding { rank: 1, q: [[UnitMonomial::omega(1); 2]; 2], t: [t, UnitMonomial::ONE] };
    NicholsAlgebra::build(AlgebraKind::Rank1RootOfUnity(n), ring, braiding)
}

/// Rank 1 with symbolic q and scaling scalar t, truncated above `truncation`.
pub fn build_rank1_generic(
    ring: &Arc<Ring>,
    q: UnitMonomial,
    t: UnitMonomial,
    truncation: u32,
) -> Result<NicholsAlgebra, NicholsError> {
    let braiding = DiagonalBraiding { rank: 1, q: [[q; 2]; 2], t: [t, UnitMonomial::ONE] };
    NicholsAlgebra::build(AlgebraKind::Rank1Generic { truncation }, ring.clone(), braiding)
}

/// Rank 2 at a primitive N-th root of unity over Z[w][q21^{+-1}, t1^{+-1}, t2^{+-1}]
/// with q11 = q22 = -1 and q12 = w q21^{-1}.
pub fn build_rank2_root_of_unity(n: u32) -> Result<NicholsAlgebra, NicholsError> {
    if n == 0 {
        return Err(NicholsError::BadParameter("N must be positive".into()));
    }
    let ring = Ring::cyclotomic(n, &["q21", "t1", "t2"]);
    let g = unit_of(&ring, "q21")?;
    let (t1, t2) = (unit_of(&ring, "t1")?, unit_of(&ring, "t2")?);
    build_rank2_root_of_unity_with(n, &ring, g, t1, t2)
}

pub fn build_rank2_root_of_unity_with(
    n: u32,
    ring: &Arc<Ring>,
    q21: UnitMonomial,
    t1: UnitMonomial,
    t2: UnitMonomial,
) -> Result<NicholsAlgebra, NicholsError> {
    let q12 = UnitMonomial::omega(1).mul(q21.inv());
    let m1 = UnitMonomial::MINUS_ONE;
    let braiding = DiagonalBraiding { rank: 2, q: [[m1, q12], [q21, m1]], t: [t1, t2] };
    NicholsAlgebra::build(AlgebraKind::Rank2RootOfUnity(n), ring.clone(), braiding)
}

/// Generic-q rank 2 over Z[s, g, t1, t2] (q = s^2, q21 = g, q12 = s^2 g^{-1}), truncated.
pub fn build_rank2_generic_truncated(max_degree: u32) -> Result<NicholsAlgebra, NicholsError> {
    let ring = Ring::integer(&["s", "g", "t1", "t2"]);
    let (t1, t2) = (unit_of(&ring, "t1")?, unit_of(&ring, "t2")?);
    build_rank2_generic_with(&ring, max_degree, t1, t2)
}

/// Generic-q rank 2 in a ring containing `s` and `g`, with given scaling scalars.
pub fn build_rank2_generic_with(
    ring: &Arc<Ring>,
    max_degree: u32,
    t1: UnitMonomial,
    t2: UnitMonomial,
) -> Result<NicholsAlgebra, NicholsError> {
    let s = unit_of(ring, "s")?;
    let g = unit_of(ring, "g")?;
    let q12 = s.pow(2).mul(g.inv());
    let m1 = UnitMonomial::MINUS_ONE;
    let braiding = DiagonalBraiding { rank: 2, q: [[m1, q12], [g, m1]], t: [t1, t2] };
    NicholsAlgebra::build(AlgebraKind::Rank2Generic { truncation: max_degree }, ring.clone(), braiding)
}
