//! Braidings on finite Yetter–Drinfel'd modules, their partial transposes and inverses.

mod sparse;
#[cfg(test)]
mod tests;

use std::sync::Arc;

use rayon::prelude::*;
use serde_json::Value;
use thiserror::Error;

use crate::lincomb::LinComb;
use crate::nichols::Degree;
use crate::polyring::{LaurentPoly, Ring};
use crate::report::Report;
use crate::ydmod::{Side, YDModule};

pub use sparse::SparseOp;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RError {
    #[error("module has the wrong side for this construction")]
    WrongSide,
    #[error("entry breaks the grading: {0}")]
    Grading(String),
    #[error("not rigid: {0}")]
    NotRigid(String),
    #[error("result leaves the Laurent ring: {0}")]
    RingEscape(String),
    #[error("computed inverse failed verification")]
    InverseCheck,
}

/// A graded operator on M ⊗ M.
#[derive(Clone, Debug)]
pub struct RMatrix {
    op: SparseOp,
    degrees: Vec<Degree>,
    names: Vec<String>,
}

impl RMatrix {
    /// Wrap an operator, checking that every entry preserves the total multidegree.
    pub fn new(op: SparseOp, degrees: Vec<Degree>, names: Vec<String>) -> Result<Self, RError> {
        assert_eq!(degrees.len(), op.dim());
        let add = |a: Degree, b: Degree| [a[0] + b[0], a[1] + b[1]];
        for ((i, j), (k, l), _) in op.entries() {
            if add(degrees[i], degrees[j]) != add(degrees[k], degrees[l]) {
                return Err(RError::Grading(format!("({},{}) -> ({},{})", names[i], names[j], names[k], names[l])));
            }
        }
        Ok(RMatrix { op, degrees, names })
    }

    pub fn op(&self) -> &SparseOp {
        &self.op
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.op.ring()
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, input: (usize, usize), output: (usize, usize)) -> LaurentPoly {
        self.op.get(input, output)
    }

    pub fn nnz(&self) -> usize {
        self.op.nnz()
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.op.to_json();
        v["basis"] = Value::from(self.names.clone());
        v
    }
}

/// ρ_L = (λ⊗id)(id⊗τ)(δ⊗φ) on a left module.
pub fn build_rho_left(m: &YDModule) -> Result<RMatrix, RError> {
    if m.side() != Side::Left {
        return Err(RError::WrongSide);
    }
    let h = m.host();
    let d = m.dim();
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for (&(hh, ap), c) in m.coaction(a).iter() {
                let u = m.phi(b).mul(h.bichar(m.degree(ap), m.degree(b)));
                let c = c.mul_unit(u);
                for (&hb, c2) in m.act(b, hh).iter() {
                    entries.push(((a, b), (hb, ap), &c * c2));
                }
            }
        }
    }
    wrap(m, SparseOp::from_entries(m.ring(), d, entries))
}

/// ρ_R = (φ⊗λ)(τ⊗id)(id⊗δ) on a right module.
pub fn build_rho_right(m: &YDModule) -> Result<RMatrix, RError> {
    if m.side() != Side::Right {
        return Err(RError::WrongSide);
    }
    let h = m.host();
    let d = m.dim();
    let mut entries = Vec::new();
    for a in 0..d {
        for b in 0..d {
            for (&(b2, b1), c) in m.coaction(b).iter() {
                let u = m.phi(b1).mul(h.bichar(m.degree(a), m.degree(b1)));
                let c = c.mul_unit(u);
                for (&ab, c2) in m.act(a, b2).iter() {
                    entries.push(((a, b), (b1, ab), &c * c2));
                }
            }
        }
    }
    wrap(m, SparseOp::from_entries(m.ring(), d, entries))
}

/// ρ_L or ρ_R according to the side of the module.
pub fn build_rho(m: &YDModule) -> Result<RMatrix, RError> {
    match m.side() {
        Side::Left => build_rho_left(m),
        Side::Right => build_rho_right(m),
    }
}

fn wrap(m: &YDModule, op: SparseOp) -> Result<RMatrix, RError> {
    let degrees = (0..m.dim()).map(|i| m.degree(i)).collect();
    RMatrix::new(op, degrees, m.names().to_vec())
}

type T3 = LinComb<(usize, usize, usize)>;

fn apply12(r: &SparseOp, v: &T3) -> T3 {
    let mut out = T3::new();
    for (&(a, b, c), x) in v.iter() {
        for (o, y) in r.row(a, b) {
            let (a2, b2) = r.pair(*o as usize);
            out.add_term((a2, b2, c), x * y);
        }
    }
    out
}

fn apply23(r: &SparseOp, v: &T3) -> T3 {
    let mut out = T3::new();
    for (&(a, b, c), x) in v.iter() {
        for (o, y) in r.row(b, c) {
            let (b2, c2) = r.pair(*o as usize);
            out.add_term((a, b2, c2), x * y);
        }
    }
    out
}

/// Exact braid relation on every basis triple; the witness is the first failing triple.
pub fn check_yang_baxter(r: &SparseOp) -> Report {
    let d = r.dim();
    let one = LaurentPoly::one(r.ring());
    let witness = (0..d * d * d).into_par_iter().find_first(|&n| {
        let e = T3::single((n / (d * d), (n / d) % d, n % d), one.clone());
        let lhs = apply12(r, &apply23(r, &apply12(r, &e)));
        let rhs = apply23(r, &apply12(r, &apply23(r, &e)));
        lhs != rhs
    });
    let mut rep = Report::new();
    rep.record(
        "Yang-Baxter relation",
        witness.map(|n| format!("basis triple ({}, {}, {})", n / (d * d), (n / d) % d, n % d)),
    );
    rep
}

/// The partial transpose as a sparse operator.
pub fn partial_transpose(f: &SparseOp) -> SparseOp {
    f.partial_transpose()
}

/// Exact inverse, block by block.
pub fn invert(m: &SparseOp) -> Result<SparseOp, RError> {
    m.inverse()
}

/// The four operators needed at the eight crossing types.
#[derive(Clone, Debug)]
pub struct RigidRMatrix {
    pub r_pos: RMatrix,
    pub r_neg: SparseOp,
    pub rt_inv: SparseOp,
    pub rtinv_inv: SparseOp,
}

impl RigidRMatrix {
    pub fn dim(&self) -> usize {
        self.r_pos.dim()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.r_pos.ring()
    }
}

pub fn build_rigid(r: &RMatrix) -> Result<RigidRMatrix, RError> {
    let r_neg = r.op().inverse()?;
    let rt_inv = r.op().partial_transpose().inverse()?;
    let rtinv_inv = r_neg.partial_transpose().inverse()?;
    Ok(RigidRMatrix { r_pos: r.clone(), r_neg, rt_inv, rtinv_inv })
}
