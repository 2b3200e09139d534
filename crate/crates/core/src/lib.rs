//! Exact R-matrices from Nichols algebras with scaling automorphisms, and the
//! state-sum knot polynomials they define.

pub mod invariants;
pub mod knotdiag;
pub mod lincomb;
pub mod nichols;
pub mod polyring;
pub mod report;
pub mod rmatrix;
pub mod statesum;
pub mod ydmod;
