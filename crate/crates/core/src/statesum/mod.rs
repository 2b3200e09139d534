//! State sums of balanced normal long diagrams, evaluated by sweeping a frontier of edge
//! labels from the in-edge to the out-edge.


use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::knotdiag::{CrossingKind, DiagramError, LongDiagram, Orient, Sign, Slice, Turn};
use crate::polyring::LaurentPoly;
use crate::report::Report;
use crate::rmatrix::{RigidRMatrix, SparseOp};

pub const DEFAULT_WIDTH_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StateSumError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("frontier width {width} exceeds the cap {cap}")]
    WidthOverflow { width: usize, cap: usize },
    #[error("labels do not fit the packed key ({0} bits needed)")]
    KeyOverflow(usize),
}

/// Which operator supplies a crossing weight and how the four edge labels index it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightSource {
    RPos,
    RNeg,
    RtInv,
    RtInvInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arrangement {
    /// ⟨(y_i, y_{i+1}), f(x_i, x_{i+1})⟩
    Direct,
    /// ⟨(x_i, y_i), f(x_{i+1}, y_{i+1})⟩
    Transposed,
    /// ⟨(x_{i+1}, x_i), f(y_{i+1}, y_i)⟩
    Reversed,
}

/// Weights of one crossing kind as a map from bottom labels (x_i, x_{i+1}) to top labels
/// (y_i, y_{i+1}).
#[derive(Clone, Debug)]
pub struct CrossingWeights {
    pub kind: CrossingKind,
    pub source: WeightSource,
    pub arrangement: Arrangement,
    table: SparseOp,
}

impl CrossingWeights {
    pub fn get(&self, bottom: (usize, usize), top: (usize, usize)) -> LaurentPoly {
        self.table.get(bottom, top)
    }

    pub fn row(&self, x0: usize, x1: usize) -> impl Iterator<Item = ((usize, usize), &LaurentPoly)> {
        self.table.row(x0, x1).iter().map(move |(o, v)| (self.table.pair(*o as usize), v))
    }
}

pub fn crossing_weights(kind: CrossingKind, r: &RigidRMatrix) -> CrossingWeights {
    use Orient::*;
    let signed = |s: Sign| match s {
        Sign::Pos => (WeightSource::RPos, r.r_pos.op()),
        Sign::Neg => (WeightSource::RNeg, &r.r_neg),
    };
    let (source, arrangement, table) = match (kind.left, kind.right) {
        (Up, Up) => {
            let (src, op) = signed(kind.sign);
            (src, Arrangement::Direct, op.clone())
        }
        (Down, Up) => {
            let (src, op) = signed(kind.sign);
            (src, Arrangement::Transposed, op.partial_transpose())
        }
        (Down, Down) => {
            let (src, op) = signed(kind.sign);
            let d = op.dim();
            let entries: Vec<_> = op.entries().map(|((a, b), (c, dd), v)| ((dd, c), (b, a), v.clone())).collect();
            (src, Arrangement::Reversed, SparseOp::from_entries(op.ring(), d, entries))
        }
        (Up, Down) => match kind.sign {
            Sign::Pos => (WeightSource::RtInvInv, Arrangement::Direct, r.rtinv_inv.clone()),
            Sign::Neg => (WeightSource::RtInv, Arrangement::Direct, r.rt_inv.clone()),
        },
    };
    CrossingWeights { kind, source, arrangement, table }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Columns {
    First,
    All,
}

#[derive(Clone, Debug)]
pub struct ContractOptions {
    pub columns: Columns,
    pub width_cap: usize,
}

impl Default for ContractOptions {
    fn default() -> Self {
        ContractOptions { columns: Columns::First, width_cap: DEFAULT_WIDTH_CAP }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateSumResult {
    /// `columns[a][b]` is the coefficient of basis vector b in J(e_a).
    pub columns: Vec<Vec<LaurentPoly>>,
    pub scalar: LaurentPoly,
    pub full: bool,
}

impl StateSumResult {
    pub fn dim(&self) -> usize {
        self.columns[0].len()
    }

    /// Entry (b, a) of the d x d matrix, when the column was computed.
    pub fn entry(&self, b: usize, a: usize) -> Option<&LaurentPoly> {
        self.columns.get(a).map(|c| &c[b])
    }
}

#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x100000001b3);
        }
    }

    fn write_u64(&mut self, x: u64) {
        self.0 = (x ^ (x >> 29)).wrapping_mul(0xbf58476d1ce4e5b9);
        self.0 ^= self.0 >> 32;
    }
}

type Frontier = HashMap<u64, LaurentPoly, BuildHasherDefault<KeyHasher>>;

struct Packing {
    bits: u32,
    mask: u64,
}

impl Packing {
    fn get(&self, key: u64, pos: usize) -> usize {
        ((key >> (pos as u32 * self.bits)) & self.mask) as usize
    }

    fn set(&self, key: u64, pos: usize, v: usize) -> u64 {
        let sh = pos as u32 * self.bits;
        (key & !(self.mask << sh)) | ((v as u64) << sh)
    }

    /// Insert `v, v` at positions pos, pos+1.
    fn insert_pair(&self, key: u64, pos: usize, v: usize) -> u64 {
        let sh = pos as u32 * self.bits;
        let low = key & ((1u64 << sh) - 1);
        let high = (key >> sh) << (sh + 2 * self.bits);
        let vv = ((v as u64) | ((v as u64) << self.bits)) << sh;
        low | high | vv
    }

    fn remove_pair(&self, key: u64, pos: usize) -> u64 {
        let sh = pos as u32 * self.bits;
        let low = key & ((1u64 << sh) - 1);
        let high = (key >> (sh + 2 * self.bits)) << sh;
        low | high
    }
}

fn accumulate(fr: &mut Frontier, key: u64, v: LaurentPoly) {
    use std::collections::hash_map::Entry;
    match fr.entry(key) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign_ref(&v);
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            if !v.is_zero() {
                e.insert(v);
            }
        }
    }
}

/// Evaluate J(K) on the requested input columns.
pub fn contract(d: &LongDiagram, r: &RigidRMatrix, opts: &ContractOptions) -> Result<StateSumResult, StateSumError> {
    let st = d.validate()?;
    if !st.normal {
        return Err(DiagramError::NotNormal.into());
    }
    if !st.balanced() {
        return Err(DiagramError::NotBalanced(st.writhe()).into());
    }
    if st.max_width > opts.width_cap {
        return Err(StateSumError::WidthOverflow { width: st.max_width, cap: opts.width_cap });
    }
    let dim = r.dim();
    let bits = usize::BITS - (dim.max(2) - 1).leading_zeros();
    if bits as usize * st.max_width > 64 {
        return Err(StateSumError::KeyOverflow(bits as usize * st.max_width));
    }
    let pk = Packing { bits, mask: (1u64 << bits) - 1 };
    let mut tables: HashMap<CrossingKind, CrossingWeights> = HashMap::new();
    for k in st.kinds.iter().flatten() {
        tables.entry(*k).or_insert_with(|| crossing_weights(*k, r));
    }
    let inputs: Vec<usize> = match opts.columns {
        Columns::First => vec![0],
        Columns::All => (0..dim).collect(),
    };
    let columns: Vec<Vec<LaurentPoly>> =
        inputs.par_iter().map(|&a| sweep(d, &st.kinds, &tables, &pk, dim, a, r)).collect();
    let scalar = columns[0][0].clone();
    Ok(StateSumResult { columns, scalar, full: opts.columns == Columns::All })
}

fn sweep(
    d: &LongDiagram,
    kinds: &[Option<CrossingKind>],
    tables: &HashMap<CrossingKind, CrossingWeights>,
    pk: &Packing,
    dim: usize,
    a: usize,
    r: &RigidRMatrix,
) -> Vec<LaurentPoly> {
    let ring = r.ring();
    let mut fr = Frontier::default();
    fr.insert(a as u64, LaurentPoly::one(ring));
    for (s, kind) in d.slices().iter().zip(kinds) {
        let mut next = Frontier::with_capacity_and_hasher(fr.len(), Default::default());
        match *s {
            Slice::Crossing { pos, .. } => {
                let w = &tables[kind.as_ref().expect("crossing slices have kinds")];
                for (key, amp) in fr.drain() {
                    let (x0, x1) = (pk.get(key, pos), pk.get(key, pos + 1));
                    for ((y0, y1), c) in w.row(x0, x1) {
                        let k2 = pk.set(pk.set(key, pos, y0), pos + 1, y1);
                        accumulate(&mut next, k2, &amp * c);
                    }
                }
            }
            Slice::Cup { pos, turn } => {
                debug_assert_eq!(turn, Turn::Leftward);
                for (key, amp) in fr.drain() {
                    for b in 0..dim {
                        next.insert(pk.insert_pair(key, pos, b), amp.clone());
                    }
                }
            }
            Slice::Cap { pos, turn } => {
                debug_assert_eq!(turn, Turn::Leftward);
                for (key, amp) in fr.drain() {
                    if pk.get(key, pos) == pk.get(key, pos + 1) {
                        accumulate(&mut next, pk.remove_pair(key, pos), amp);
                    }
                }
            }
        }
        fr = next;
    }
    (0..dim).map(|b| fr.get(&(b as u64)).cloned().unwrap_or_else(|| LaurentPoly::zero(ring))).collect()
}

/// Reference evaluation of the state sum by enumerating all states: every edge class gets a label, and the weight of a
/// state is the product of crossing weights read straight from the four operators. Cost is
/// dim^(edge classes), so only tiny diagrams are feasible.
pub fn brute_force(d: &LongDiagram, r: &RigidRMatrix) -> Vec<Vec<LaurentPoly>> {
    let mut parent: Vec<usize> = vec![0];
    let mut fr: Vec<usize> = vec![0];
    let mut crossings = Vec::new();
    let fresh = |parent: &mut Vec<usize>| {
        parent.push(parent.len());
        parent.len() - 1
    };
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let kinds = d.stats().kinds;
    for (s, kind) in d.slices().iter().zip(kinds) {
        match *s {
            Slice::Crossing { pos, .. } => {
                let (tl, tr) = (fresh(&mut parent), fresh(&mut parent));
                crossings.push((kind.expect("crossing kind of a valid diagram"), fr[pos], fr[pos + 1], tl, tr));
                fr[pos] = tl;
                fr[pos + 1] = tr;
            }
            Slice::Cup { pos, .. } => {
                let e = fresh(&mut parent);
                fr.splice(pos..pos, [e, e]);
            }
            Slice::Cap { pos, .. } => {
                let (a, b) = (find(&mut parent, fr[pos]), find(&mut parent, fr[pos + 1]));
                if a != b {
                    parent[a] = b;
                }
                fr.drain(pos..pos + 2);
            }
        }
    }
    let out_edge = fr[0];
    let n = parent.len();
    let class: Vec<usize> = (0..n).map(|e| find(&mut parent, e)).collect();
    let mut classes: Vec<usize> = class.clone();
    classes.sort_unstable();
    classes.dedup();
    let idx = |e: usize| classes.binary_search(&class[e]).unwrap();
    let dim = r.dim();
    let ring = r.ring().clone();
    let weight = |k: CrossingKind, x0: usize, x1: usize, y0: usize, y1: usize| -> LaurentPoly {
        let signed = if k.sign == Sign::Pos { r.r_pos.op() } else { &r.r_neg };
        match (k.left, k.right) {
            (Orient::Up, Orient::Up) => signed.get((x0, x1), (y0, y1)),
            (Orient::Down, Orient::Up) => signed.get((x1, y1), (x0, y0)),
            (Orient::Down, Orient::Down) => signed.get((y1, y0), (x1, x0)),
            (Orient::Up, Orient::Down) => {
                let f = if k.sign == Sign::Pos { &r.rtinv_inv } else { &r.rt_inv };
                f.get((x0, x1), (y0, y1))
            }
        }
    };
    let nc = classes.len();
    let mut out = vec![vec![LaurentPoly::zero(&ring); dim]; dim];
    let total = dim.pow(nc as u32);
    for state in 0..total {
        let label = |c: usize| (state / dim.pow(c as u32)) % dim;
        let mut w = LaurentPoly::one(&ring);
        for &(k, bl, br, tl, tr) in &crossings {
            let x = weight(k, label(idx(bl)), label(idx(br)), label(idx(tl)), label(idx(tr)));
            if x.is_zero() {
                w = x;
                break;
            }
            w = &w * &x;
        }
        if !w.is_zero() {
            let (a, b) = (label(idx(0)), label(idx(out_edge)));
            out[a][b].add_assign_ref(&w);
        }
    }
    out
}

/// Whether J(K) is a multiple of the identity. Requires all columns.
pub fn check_scalar(result: &StateSumResult) -> Report {
    let mut rep = Report::new();
    if !result.full {
        rep.push("full matrix available", false, "only the first column was computed");
        return rep;
    }
    let d = result.dim();
    let mut off = None;
    let mut diag = None;
    for a in 0..d {
        for b in 0..d {
            let v = &result.columns[a][b];
            if a != b && !v.is_zero() && off.is_none() {
                off = Some(format!("entry ({}, {}) = {}", b, a, v));
            }
        }
        if result.columns[a][a] != result.scalar && diag.is_none() {
            diag = Some(format!("diagonal entry {} = {}", a, result.columns[a][a]));
        }
    }
    rep.record("off-diagonal entries vanish", off);
    rep.record("diagonal entries coincide", diag);
    rep
}

/// Result record for serialization.
pub fn result_json(knot: &str, invariant: &str, params: Value, result: &StateSumResult, runtime_ms: u128) -> Value {
    let check = check_scalar(result);
    let scalar_check = if result.full {
        json!({"off_diag_zero": check.checks[0].passed, "diag_constant": check.checks[1].passed})
    } else {
        Value::Null
    };
    json!({
        "knot": knot,
        "invariant": invariant,
        "params": params,
        "scalar": result.scalar.to_json_value(),
        "scalar_check": scalar_check,
        "runtime_ms": runtime_ms as u64,
    })
}
