//! Braid words, long knot diagrams as slice sequences, and the built-in knot table.


use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("cannot parse braid word: {0}")]
    Parse(String),
    #[error("generator {letter} out of range for width {width}")]
    OutOfRange { letter: i32, width: usize },
    #[error("closure has {0} components; only knots are supported")]
    NotAKnot(usize),
    #[error("malformed diagram at slice {index}: {reason}")]
    Malformed { index: usize, reason: String },
    #[error("diagram is not normal")]
    NotNormal,
    #[error("diagram is not balanced (writhe {0})")]
    NotBalanced(i64),
    #[error("unknown knot {0}")]
    UnknownKnot(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub width: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(width: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        let w = BraidWord { width, letters };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<(), DiagramError> {
        if self.width == 0 {
            return Err(DiagramError::Parse("width must be positive".into()));
        }
        for &l in &self.letters {
            if l == 0 || l.unsigned_abs() as usize >= self.width {
                return Err(DiagramError::OutOfRange { letter: l, width: self.width });
            }
        }
        let c = self.components();
        if c != 1 {
            return Err(DiagramError::NotAKnot(c));
        }
        Ok(())
    }

    /// Number of cycles of the closure permutation.
    pub fn components(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.width).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; self.width];
        let mut cycles = 0;
        for s in 0..self.width {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord { width: self.width, letters: self.letters.iter().map(|l| -l).collect() }
    }

    /// Cyclic rotation by `k` letters (a conjugate, so the same knot).
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { width: self.width, letters }
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parse a braid word. Tokens are separated by whitespace or commas; each is a signed
/// generator index (`-2`), optionally written `s2`/`σ2` with an integer power (`σ1^3`, `s2^-1`).
/// Without an explicit width, the smallest width containing all generators is used.
pub fn parse_braid_word(text: &str, width: Option<usize>) -> Result<BraidWord, DiagramError> {
    let mut letters = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
        let tok = tok.replace('\u{2212}', "-");
        let (base, power) = match tok.split_once('^') {
            Some((b, p)) => {
                let p = p.trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}');
                (b.to_string(), p.parse::<i32>().map_err(|_| DiagramError::Parse(tok.clone()))?)
            }
            None => (tok.clone(), 1),
        };
        let (neg, rest) = match base.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, base.as_str()),
        };
        let rest = rest.trim_start_matches(['s', 'σ']);
        let g: i32 = rest.parse().map_err(|_| DiagramError::Parse(tok.clone()))?;
        if g <= 0 {
            return Err(DiagramError::Parse(tok.clone()));
        }
        let g = if neg { -g } else { g };
        let sign = if power < 0 { -1 } else { 1 };
        for _ in 0..power.unsigned_abs() {
            letters.push(sign * g);
        }
    }
    let width = width.unwrap_or_else(|| letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1));
    BraidWord::new(width, letters)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orient {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// Horizontal direction in which an extremum is traversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Turn {
    Leftward,
    Rightward,
}

/// One of the eight oriented crossing types: a sign and the orientations of the two
/// strands at the bottom of the crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingKind {
    pub sign: Sign,
    pub left: Orient,
    pub right: Orient,
}

impl CrossingKind {
    pub const ALL: [CrossingKind; 8] = {
        use Orient::*;
        use Sign::*;
        [
            CrossingKind { sign: Pos, left: Up, right: Up },
            CrossingKind { sign: Pos, left: Up, right: Down },
            CrossingKind { sign: Pos, left: Down, right: Up },
            CrossingKind { sign: Pos, left: Down, right: Down },
            CrossingKind { sign: Neg, left: Up, right: Up },
            CrossingKind { sign: Neg, left: Up, right: Down },
            CrossingKind { sign: Neg, left: Down, right: Up },
            CrossingKind { sign: Neg, left: Down, right: Down },
        ]
    };
}

/// A horizontal slice. Positions index the frontier from the left; a cup inserts two strands
/// at `pos, pos+1`, a cap removes them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Slice {
    Crossing { pos: usize, sign: Sign },
    Cup { pos: usize, turn: Turn },
    Cap { pos: usize, turn: Turn },
}

/// A long knot diagram read from the in-edge (bottom) to the out-edge (top); both ends
/// point up and the frontier starts and ends with a single strand.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LongDiagram {
    slices: Vec<Slice>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramStats {
    pub positive: usize,
    pub negative: usize,
    pub max_width: usize,
    pub normal: bool,
    /// Crossing kind of each slice (None for extrema).
    pub kinds: Vec<Option<CrossingKind>>,
}

impl DiagramStats {
    pub fn writhe(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn balanced(&self) -> bool {
        self.positive == self.negative
    }

    pub fn crossings(&self) -> usize {
        self.positive + self.negative
    }
}

impl LongDiagram {
    pub fn new(slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let d = LongDiagram { slices };
        d.validate()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        LongDiagram::default()
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Check well-formedness and collect crossing kinds and counts.
    pub fn validate(&self) -> Result<DiagramStats, DiagramError> {
        let mut fr = vec![Orient::Up];
        let mut stats = DiagramStats { positive: 0, negative: 0, max_width: 1, normal: true, kinds: Vec::new() };
        for (index, s) in self.slices.iter().enumerate() {
            let bad = |reason: &str| DiagramError::Malformed { index, reason: reason.to_string() };
            match *s {
                Slice::Crossing { pos, sign } => {
                    if pos + 1 >= fr.len() {
                        return Err(bad("crossing outside the frontier"));
                    }
                    stats.kinds.push(Some(CrossingKind { sign, left: fr[pos], right: fr[pos + 1] }));
                    fr.swap(pos, pos + 1);
                    match sign {
                        Sign::Pos => stats.positive += 1,
                        Sign::Neg => stats.negative += 1,
                    }
                }
                Slice::Cup { pos, turn } => {
                    if pos > fr.len() {
                        return Err(bad("cup outside the frontier"));
                    }
                    let pair = match turn {
                        Turn::Leftward => [Orient::Up, Orient::Down],
                        Turn::Rightward => {
                            stats.normal = false;
                            [Orient::Down, Orient::Up]
                        }
                    };
                    fr.splice(pos..pos, pair);
                    stats.kinds.push(None);
                }
                Slice::Cap { pos, turn } => {
                    if pos + 1 >= fr.len() {
                        return Err(bad("cap outside the frontier"));
                    }
                    let want = match turn {
                        Turn::Leftward => [Orient::Down, Orient::Up],
                        Turn::Rightward => {
                            stats.normal = false;
                            [Orient::Up, Orient::Down]
                        }
                    };
                    if fr[pos..pos + 2] != want {
                        return Err(bad("cap joins strands with incompatible orientations"));
                    }
                    fr.drain(pos..pos + 2);
                    stats.kinds.push(None);
                }
            }
            stats.max_width = stats.max_width.max(fr.len());
        }
        if fr != [Orient::Up] {
            return Err(DiagramError::Malformed { index: self.slices.len(), reason: "does not end in a single upward strand".into() });
        }
        if self.components() != 1 {
            return Err(DiagramError::Malformed { index: self.slices.len(), reason: "closed components present".into() });
        }
        Ok(stats)
    }

    /// Number of connected pieces (1 for a long knot without extra closed loops).
    fn components(&self) -> usize {
        // Track strand ids through the frontier and merge at caps.
        let mut parent: Vec<usize> = vec![0];
        fn find(p: &mut Vec<usize>, mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut fr: Vec<usize> = vec![0];
        for s in &self.slices {
            match *s {
                Slice::Crossing { pos, .. } => fr.swap(pos, pos + 1),
                Slice::Cup { pos, .. } => {
                    let id = parent.len();
                    parent.push(id);
                    fr.splice(pos..pos, [id, id]);
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
        let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    pub fn stats(&self) -> DiagramStats {
        self.validate().expect("diagram was validated at construction")
    }

    /// Long-knot composition: `self` below `other` (the connected sum).
    pub fn compose(&self, other: &LongDiagram) -> LongDiagram {
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        LongDiagram { slices }
    }

    pub fn is_normal(&self) -> bool {
        self.stats().normal
    }

    pub fn is_balanced(&self) -> bool {
        self.stats().balanced()
    }
}

/// Close strands 2..n of the braid to the right, leaving strand 1 as the long strand.
/// The closing caps are rightward; see [`normalize_extrema`].
pub fn braid_to_long_diagram(b: &BraidWord) -> LongDiagram {
    let n = b.width;
    let mut slices = Vec::new();
    for k in 1..n {
        slices.push(Slice::Cup { pos: k, turn: Turn::Leftward });
    }
    for &l in &b.letters {
        let sign = if l > 0 { Sign::Pos } else { Sign::Neg };
        slices.push(Slice::Crossing { pos: l.unsigned_abs() as usize - 1, sign });
    }
    for k in (1..n).rev() {
        slices.push(Slice::Cap { pos: k, turn: Turn::Rightward });
    }
    LongDiagram::new(slices).expect("braid closure is well formed")
}

/// Replace rightward extrema: a rightward cap becomes a negative crossing followed by a
/// leftward cap, a rightward cup a leftward cup followed by a positive crossing.
pub fn normalize_extrema(d: &LongDiagram) -> LongDiagram {
    let mut slices = Vec::with_capacity(d.slices.len());
    for &s in &d.slices {
        match s {
            Slice::Cap { pos, turn: Turn::Rightward } => {
                slices.push(Slice::Crossing { pos, sign: Sign::Neg });
                slices.push(Slice::Cap { pos, turn: Turn::Leftward });
            }
            Slice::Cup { pos, turn: Turn::Rightward } => {
                slices.push(Slice::Cup { pos, turn: Turn::Leftward });
                slices.push(Slice::Crossing { pos, sign: Sign::Pos });
            }
            other => slices.push(other),
        }
    }
    LongDiagram { slices }
}

/// A normalized Reidemeister-I curl on an upward strand at frontier position `p`,
/// contributing two crossings of sign `sign`.
pub fn kink(p: usize, sign: Sign) -> Vec<Slice> {
    match sign {
        Sign::Neg => vec![
            Slice::Cup { pos: p + 1, turn: Turn::Leftward },
            Slice::Crossing { pos: p, sign: Sign::Neg },
            Slice::Crossing { pos: p + 1, sign: Sign::Neg },
            Slice::Cap { pos: p + 1, turn: Turn::Leftward },
        ],
        Sign::Pos => vec![
            Slice::Cup { pos: p + 1, turn: Turn::Leftward },
            Slice::Crossing { pos: p + 1, sign: Sign::Pos },
            Slice::Crossing { pos: p, sign: Sign::Pos },
            Slice::Cap { pos: p, turn: Turn::Leftward },
        ],
    }
}

/// Where balancing kinks are placed on the open strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KinkPlacement {
    Top,
    Bottom,
}

/// Append normalized curls on the open strand until the writhe is zero. Each curl changes
/// the writhe by two, and the writhe of a normal long diagram is always even.
pub fn balance_writhe(d: &LongDiagram) -> Result<LongDiagram, DiagramError> {
    balance_writhe_at(d, KinkPlacement::Top)
}

pub fn balance_writhe_at(d: &LongDiagram, at: KinkPlacement) -> Result<LongDiagram, DiagramError> {
    let st = d.validate()?;
    if !st.normal {
        return Err(DiagramError::NotNormal);
    }
    let e = st.writhe();
    if e % 2 != 0 {
        return Err(DiagramError::NotBalanced(e));
    }
    let sign = if e > 0 { Sign::Neg } else { Sign::Pos };
    let mut extra = Vec::new();
    for _ in 0..(e.unsigned_abs() / 2) {
        extra.extend(kink(0, sign));
    }
    let slices = match at {
        KinkPlacement::Top => d.slices.iter().copied().chain(extra).collect(),
        KinkPlacement::Bottom => extra.into_iter().chain(d.slices.iter().copied()).collect(),
    };
    LongDiagram::new(slices)
}

/// Braid closure, normalized and balanced.
pub fn balanced_diagram(b: &BraidWord) -> LongDiagram {
    balance_writhe(&normalize_extrema(&braid_to_long_diagram(b))).expect("braid closures normalize to even writhe")
}

/// Long two-bridge diagram: the in-strand, a cup at position 1, a word in the generators
/// of three strands, and a cap at position 1. Letters carry the sign a crossing has when
/// both strands point up; oriented signs follow from the traversal.
pub fn plat_to_long_diagram(letters: &[i32]) -> Result<LongDiagram, DiagramError> {
    for &l in letters {
        if l == 0 || l.unsigned_abs() > 2 {
            return Err(DiagramError::OutOfRange { letter: l, width: 3 });
        }
    }
    let build = |cup: Turn, cap: Turn| {
        let mut slices = vec![Slice::Cup { pos: 1, turn: cup }];
        slices.extend(letters.iter().map(|&l| Slice::Crossing {
            pos: l.unsigned_abs() as usize - 1,
            sign: if l > 0 { Sign::Pos } else { Sign::Neg },
        }));
        slices.push(Slice::Cap { pos: 1, turn: cap });
        LongDiagram { slices }
    };
    let c = build(Turn::Leftward, Turn::Leftward).components();
    if c != 1 {
        return Err(DiagramError::NotAKnot(c));
    }
    // The cup and cap turns are forced by the traversal; exactly one choice is consistent.
    for cup in [Turn::Leftward, Turn::Rightward] {
        for cap in [Turn::Leftward, Turn::Rightward] {
            let mut d = build(cup, cap);
            if let Ok(st) = d.validate() {
                for (s, k) in d.slices.iter_mut().zip(st.kinds) {
                    if let (Slice::Crossing { sign, .. }, Some(k)) = (s, k) {
                        if k.left != k.right {
                            *sign = sign.flip();
                        }
                    }
                }
                return Ok(d);
            }
        }
    }
    Err(DiagramError::Malformed { index: 0, reason: "no consistent orientation".into() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub width: usize,
    pub word: Vec<i32>,
    pub genus: u32,
    #[serde(default)]
    pub mirror: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<Vec<[i32; 4]>>,
    /// Narrower two-bridge presentation, see [`plat_to_long_diagram`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plat: Option<Vec<i32>>,
}

impl KnotEntry {
    pub fn braid(&self) -> BraidWord {
        BraidWord::new(self.width, self.word.clone()).expect("table entries are validated")
    }

    pub fn mirrored(&self) -> KnotEntry {
        KnotEntry {
            name: mirror_name(&self.name),
            width: self.width,
            word: self.word.iter().map(|l| -l).collect(),
            genus: self.genus,
            mirror: !self.mirror,
            pd: None,
            plat: self.plat.as_ref().map(|w| w.iter().map(|l| -l).collect()),
        }
    }

    /// The balanced normal diagram used for computations: the plat form when stored, since
    /// its frontier stays narrow, otherwise the braid closure.
    pub fn diagram(&self) -> LongDiagram {
        match &self.plat {
            Some(w) => {
                let d = plat_to_long_diagram(w).expect("table entries are validated");
                balance_writhe(&normalize_extrema(&d)).expect("plat closures normalize to even writhe")
            }
            None => balanced_diagram(&self.braid()),
        }
    }
}

fn mirror_name(name: &str) -> String {
    match name.strip_prefix('m') {
        Some(rest) if rest.starts_with(|c: char| c.is_ascii_digit()) => rest.to_string(),
        _ => format!("m{}", name),
    }
}

const KNOT_TABLE: &str = include_str!("../../data/knots.jsonl");

/// The knots of the built-in table (standard braid representatives), unknot first.
pub fn builtin_knot_table() -> Vec<KnotEntry> {
    KNOT_TABLE
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let e: KnotEntry = serde_json::from_str(l).expect("knot table line");
            e.braid();
            e.diagram();
            e
        })
        .collect()
}

/// Look up a table knot; a leading `m` (as in `m3_1`) selects the mirror image.
pub fn find_knot(name: &str) -> Result<KnotEntry, DiagramError> {
    let table = builtin_knot_table();
    if let Some(e) = table.iter().find(|e| e.name == name) {
        return Ok(e.clone());
    }
    if let Some(rest) = name.strip_prefix('m') {
        if let Some(e) = table.iter().find(|e| e.name == rest) {
            return Ok(e.mirrored());
        }
    }
    Err(DiagramError::UnknownKnot(name.to_string()))
}
