use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::polyring::{LaurentPoly, Ring};

use super::RError;

/// Sparse operator on the d^2-dimensional space of basis pairs. Row `p = i*d + j`
/// holds the image of the pair (i, j) as a sorted list of (out pair, coefficient).
#[derive(Clone, Debug)]
pub struct SparseOp {
    ring: Arc<Ring>,
    dim: usize,
    rows: Vec<Vec<(u32, LaurentPoly)>>,
}

impl PartialEq for SparseOp {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.dim == other.dim && self.rows == other.rows
    }
}

impl SparseOp {
    pub fn zero(ring: &Arc<Ring>, dim: usize) -> Self {
        SparseOp { ring: ring.clone(), dim, rows: vec![Vec::new(); dim * dim] }
    }

    pub fn identity(ring: &Arc<Ring>, dim: usize) -> Self {
        let rows = (0..dim * dim).map(|p| vec![(p as u32, LaurentPoly::one(ring))]).collect();
        SparseOp { ring: ring.clone(), dim, rows }
    }

    /// Build from (in pair, out pair, coefficient) triples; repeated keys are summed.
    pub fn from_entries(
        ring: &Arc<Ring>,
        dim: usize,
        entries: impl IntoIterator<Item = ((usize, usize), (usize, usize), LaurentPoly)>,
    ) -> Self {
        let mut op = Self::zero(ring, dim);
        for ((a, b), (c, d), v) in entries {
            op.add_entry(a * dim + b, c * dim + d, v);
        }
        op
    }

    /// Copy with `v` added to one entry.
    pub fn with_added(&self, input: (usize, usize), output: (usize, usize), v: LaurentPoly) -> SparseOp {
        let mut out = self.clone();
        out.add_entry(input.0 * self.dim + input.1, output.0 * self.dim + output.1, v);
        out
    }

    fn add_entry(&mut self, input: usize, output: usize, v: LaurentPoly) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[input];
        match row.binary_search_by_key(&(output as u32), |e| e.0) {
            Ok(pos) => {
                row[pos].1.add_assign_ref(&v);
                if row[pos].1.is_zero() {
                    row.remove(pos);
                }
            }
            Err(pos) => row.insert(pos, (output as u32, v)),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pair(&self, p: usize) -> (usize, usize) {
        (p / self.dim, p % self.dim)
    }

    pub fn row(&self, a: usize, b: usize) -> &[(u32, LaurentPoly)] {
        &self.rows[a * self.dim + b]
    }

    pub fn row_index(&self, p: usize) -> &[(u32, LaurentPoly)] {
        &self.rows[p]
    }

    pub fn get(&self, input: (usize, usize), output: (usize, usize)) -> LaurentPoly {
        let o = (output.0 * self.dim + output.1) as u32;
        self.row(input.0, input.1)
            .binary_search_by_key(&o, |e| e.0)
            .map(|pos| self.row(input.0, input.1)[pos].1.clone())
            .unwrap_or_else(|_| LaurentPoly::zero(&self.ring))
    }

    /// All nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize), &LaurentPoly)> {
        self.rows.iter().enumerate().flat_map(move |(p, row)| {
            row.iter().map(move |(o, v)| (self.pair(p), self.pair(*o as usize), v))
        })
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &SparseOp) -> SparseOp {
        assert_eq!(self.dim, other.dim);
        let rows = self
            .rows
            .par_iter()
            .map(|row| {
                let mut acc: std::collections::BTreeMap<u32, LaurentPoly> = std::collections::BTreeMap::new();
                for (mid, v) in row {
                    for (o, w) in &other.rows[*mid as usize] {
                        let term = v * w;
                        match acc.get_mut(o) {
                            Some(x) => x.add_assign_ref(&term),
                            None => {
                                acc.insert(*o, term);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseOp { ring: self.ring.clone(), dim: self.dim, rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(p, row)| row.len() == 1 && row[0].0 as usize == p && row[0].1.is_one())
    }

    /// Partial transpose: the entry (a,b) -> (c,d) of the result is the entry (b,d) -> (a,c) of `self`.
    pub fn partial_transpose(&self) -> SparseOp {
        let d = self.dim;
        let entries = self.entries().map(|((b, dd), (a, c), v)| ((a, b), (c, dd), v.clone())).collect::<Vec<_>>();
        SparseOp::from_entries(&self.ring, d, entries)
    }

    /// Inverse of [`SparseOp::partial_transpose`].
    pub fn partial_transpose_inverse(&self) -> SparseOp {
        let d = self.dim;
        let entries = self.entries().map(|((a, b), (c, dd), v)| ((b, dd), (a, c), v.clone())).collect::<Vec<_>>();
        SparseOp::from_entries(&self.ring, d, entries)
    }

    /// Reindex by reversing both pairs: (a,b) -> (c,d) becomes (b,a) -> (d,c).
    pub fn flip(&self) -> SparseOp {
        let entries = self.entries().map(|((a, b), (c, d), v)| ((b, a), (d, c), v.clone())).collect::<Vec<_>>();
        SparseOp::from_entries(&self.ring, self.dim, entries)
    }

    /// Connected components of the sparsity pattern as (in pairs, out pairs).
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = self.dim * self.dim;
        let mut parent: Vec<usize> = (0..2 * n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (p, row) in self.rows.iter().enumerate() {
            for (o, _) in row {
                let (a, b) = (find(&mut parent, p), find(&mut parent, n + *o as usize));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
        for x in 0..2 * n {
            let r = find(&mut parent, x);
            let g = groups.entry(r).or_default();
            if x < n {
                g.0.push(x);
            } else {
                g.1.push(x - n);
            }
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort_by_key(|g| g.0.first().or(g.1.first()).copied());
        out
    }

    /// Exact inverse by fraction-free Gauss–Jordan elimination on each block; the result
    /// is verified on both sides.
    pub fn inverse(&self) -> Result<SparseOp, RError> {
        let (inv, _) = self.inverse_and_det()?;
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<LaurentPoly, RError> {
        Ok(self.inverse_and_det()?.1)
    }

    fn inverse_and_det(&self) -> Result<(SparseOp, LaurentPoly), RError> {
        let blocks = self.blocks();
        let results: Vec<Result<(Vec<(usize, usize, LaurentPoly)>, LaurentPoly), RError>> =
            blocks.par_iter().map(|(ins, outs)| invert_block(self, ins, outs)).collect();
        let mut inv = SparseOp::zero(&self.ring, self.dim);
        let mut det = LaurentPoly::one(&self.ring);
        for r in results {
            let (entries, bdet) = r?;
            for (o, i, v) in entries {
                inv.add_entry(o, i, v);
            }
            det = &det * &bdet;
        }
        let row_order: Vec<usize> = blocks.iter().flat_map(|b| b.0.iter().copied()).collect();
        let col_order: Vec<usize> = blocks.iter().flat_map(|b| b.1.iter().copied()).collect();
        if perm_sign(&row_order) * perm_sign(&col_order) < 0 {
            det = -&det;
        }
        if !self.then(&inv).is_identity() || !inv.then(self).is_identity() {
            return Err(RError::InverseCheck);
        }
        Ok((inv, det))
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries()
            .map(|(i, o, v)| json!({"in": [i.0, i.1], "out": [o.0, o.1], "coeff": v.to_json_value()}))
            .collect();
        json!({"dim": self.dim, "entries": entries})
    }
}

fn perm_sign(order: &[usize]) -> i32 {
    let mut seen = vec![false; order.len()];
    let mut sign = 1;
    for s in 0..order.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = order[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Returns the inverse entries as (out pair, in pair, value) and the block determinant
/// with rows ordered by `ins` and columns by `outs`.
fn invert_block(
    op: &SparseOp,
    ins: &[usize],
    outs: &[usize],
) -> Result<(Vec<(usize, usize, LaurentPoly)>, LaurentPoly), RError> {
    let n = ins.len();
    if outs.len() != n {
        return Err(RError::NotRigid(format!("non-square block {}x{}", n, outs.len())));
    }
    let ring = op.ring();
    let zero = LaurentPoly::zero(ring);
    let col_of: std::collections::HashMap<usize, usize> = outs.iter().enumerate().map(|(k, &o)| (o, k)).collect();
    let mut m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|r| {
            let mut row = vec![zero.clone(); 2 * n];
            for (o, v) in op.row_index(ins[r]) {
                row[col_of[&(*o as usize)]] = v.clone();
            }
            row[n + r] = LaurentPoly::one(ring);
            row
        })
        .collect();
    let mut prev = LaurentPoly::one(ring);
    let mut swaps = 0;
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&r| !m[r][k].is_zero())
            .min_by_key(|&r| (m[r][k].as_unit().is_none(), m[r][k].len()))
            .ok_or_else(|| RError::NotRigid(format!("singular block of size {}", n)))?;
        if pivot != k {
            m.swap(pivot, k);
            swaps += 1;
        }
        let pk = m[k][k].clone();
        let rowk = m[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let aik = row[k].clone();
            for j in 0..2 * n {
                let a = &pk * &row[j];
                let b = if aik.is_zero() || rowk[j].is_zero() { zero.clone() } else { &aik * &rowk[j] };
                let num = &a - &b;
                row[j] = num.div_exact(&prev).map_err(|_| RError::RingEscape("inexact elimination step".into()))?;
            }
        }
        prev = pk;
    }
    let dfinal = prev;
    if dfinal.as_unit().is_none() {
        return Err(RError::RingEscape(format!("block determinant {} is not a unit", dfinal)));
    }
    let mut out = Vec::new();
    for k in 0..n {
        for j in 0..n {
            let v = &m[k][n + j];
            if v.is_zero() {
                continue;
            }
            let q = v.div_exact(&dfinal).map_err(|_| RError::RingEscape("entry is not Laurent".into()))?;
            out.push((outs[k], ins[j], q));
        }
    }
    let det = if swaps % 2 == 1 { -&dfinal } else { dfinal };
    Ok((out, det))
}
