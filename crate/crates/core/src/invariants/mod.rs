//! Knot polynomials from the state sum: ADO, colored Jones, Λ_ω and V_n, their canonical
//! rewritings, and the identity checks relating them.

pub mod checks;
pub mod golden;
pub mod rewrite;
pub mod suite;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde_json::{json, Value};
use thiserror::Error;

use crate::knotdiag::{balanced_diagram, find_knot, BraidWord, DiagramError, KnotEntry, LongDiagram};
use crate::nichols::{build_rank1, build_rank2_root_of_unity, NicholsError};
use crate::polyring::{LaurentPoly, Monomial, PolyError, Ring};
use crate::report::Report;
use crate::rmatrix::{build_rho, build_rigid, RError, RigidRMatrix};
use crate::statesum::{check_scalar, contract, Columns, ContractOptions, StateSumError, StateSumResult};
use crate::ydmod::{build_jones_module, build_yn, regular_left_module, YdError};

pub use checks::run_checks;
pub use rewrite::{expand_uq, expand_uv, rewrite_uq, rewrite_uv, RewriteError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum InvariantError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("building the R-matrix failed: {0}")]
    Build(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    #[error("scalar depends on the gauge variable {var}: {poly}")]
    Gauge { var: &'static str, poly: String },
    #[error("rewriting failed: {0}")]
    Form(#[from] RewriteError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<YdError> for InvariantError {
    fn from(e: YdError) -> Self {
        InvariantError::Build(e.to_string())
    }
}

impl From<NicholsError> for InvariantError {
    fn from(e: NicholsError) -> Self {
        InvariantError::Build(e.to_string())
    }
}

impl From<RError> for InvariantError {
    fn from(e: RError) -> Self {
        InvariantError::Build(e.to_string())
    }
}

/// Invariant family with its parameter: the root-of-unity order N or the module index n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Ado(u32),
    ColoredJones(u32),
    Lambda(u32),
    Vn(u32),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Ado(_) => "ado",
            Family::ColoredJones(_) => "jones",
            Family::Lambda(_) => "lambda",
            Family::Vn(_) => "vn",
        }
    }

    pub fn param(&self) -> u32 {
        match *self {
            Family::Ado(n) | Family::ColoredJones(n) | Family::Lambda(n) | Family::Vn(n) => n,
        }
    }

    pub fn params_json(&self) -> Value {
        match self {
            Family::Ado(n) | Family::Lambda(n) => json!({ "N": n }),
            Family::ColoredJones(n) | Family::Vn(n) => json!({ "n": n }),
        }
    }

    fn validate(&self) -> Result<(), InvariantError> {
        match *self {
            Family::Ado(n) if n < 2 => Err(InvariantError::BadParameter("ADO needs N >= 2".into())),
            f if f.param() == 0 => Err(InvariantError::BadParameter("parameter must be positive".into())),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Ado(n) => write!(f, "ADO (N = {})", n),
            Family::ColoredJones(n) => write!(f, "colored Jones (n = {})", n),
            Family::Lambda(n) => write!(f, "Lambda (N = {})", n),
            Family::Vn(n) => write!(f, "V_{}", n),
        }
    }
}

/// A knot to evaluate: a name, a balanced normal diagram and the stored genus if known.
#[derive(Clone, Debug)]
pub struct KnotInput {
    pub name: String,
    pub diagram: LongDiagram,
    pub genus: Option<u32>,
}

impl KnotInput {
    /// A table knot, or its mirror with an `m` prefix.
    pub fn named(name: &str) -> Result<Self, InvariantError> {
        Ok(Self::from_entry(&find_knot(name)?))
    }

    pub fn from_entry(e: &KnotEntry) -> Self {
        KnotInput { name: e.name.clone(), diagram: e.diagram(), genus: Some(e.genus) }
    }

    pub fn from_braid(b: &BraidWord) -> Self {
        KnotInput { name: format!("braid [{}] width {}", b, b.width), diagram: balanced_diagram(b), genus: None }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantResult {
    pub knot: String,
    pub family: Family,
    /// Λ in t1, t2; V_n in q, t (or s = q^{1/2}, t when half powers occur); ADO in t;
    /// colored Jones in q.
    pub polynomial: LaurentPoly,
    /// (u, v)-form of Λ at N = 2, (u, q)-form of V₂.
    pub form: Option<LaurentPoly>,
    pub checks: Report,
    pub state: StateSumResult,
    pub runtime_ms: u128,
}

impl InvariantResult {
    pub fn to_json(&self) -> Value {
        let mut j = crate::statesum::result_json(&self.knot, self.family.name(), self.family.params_json(), &self.state, self.runtime_ms);
        j["scalar"] = self.polynomial.to_json_value();
        j["form"] = match &self.form {
            Some(f) => json!(f.to_string()),
            None => Value::Null,
        };
        j["text"] = json!(self.polynomial.to_string());
        j["checks"] = serde_json::to_value(&self.checks).expect("report serializes");
        j
    }
}

/// Builds and caches the rigid R-matrix of each family.
#[derive(Default)]
pub struct Engine {
    cache: Mutex<HashMap<Family, Arc<RigidRMatrix>>>,
    pub width_cap: Option<usize>,
}

impl Engine {
    pub fn new() -> Self {
        Engine::default()
    }

    pub fn rigid(&self, f: Family) -> Result<Arc<RigidRMatrix>, InvariantError> {
        f.validate()?;
        let mut cache = self.cache.lock().expect("cache lock");
        if let Some(r) = cache.get(&f) {
            return Ok(r.clone());
        }
        let module = match f {
            Family::Ado(n) => regular_left_module(Arc::new(build_rank1(n)?))?,
            Family::ColoredJones(n) => build_jones_module(n)?,
            Family::Lambda(n) => regular_left_module(Arc::new(build_rank2_root_of_unity(n)?))?,
            Family::Vn(n) => build_yn(n)?,
        };
        let r = Arc::new(build_rigid(&build_rho(&module)?)?);
        cache.insert(f, r.clone());
        Ok(r)
    }

    pub fn compute(&self, k: &KnotInput, f: Family, full_matrix: bool) -> Result<InvariantResult, InvariantError> {
        let r = self.rigid(f)?;
        let start = Stopwatch::start();
        let mut opts = ContractOptions { columns: if full_matrix { Columns::All } else { Columns::First }, ..Default::default() };
        if let Some(c) = self.width_cap {
            opts.width_cap = c;
        }
        let state = contract(&k.diagram, &r, &opts)?;
        let mut checks = Report::new();
        if full_matrix {
            checks.extend(check_scalar(&state));
        }
        let polynomial = normalize(&state.scalar, f, &mut checks)?;
        let form = match f {
            Family::Lambda(2) => Some(rewrite_uv(&polynomial)?),
            Family::Vn(2) => Some(rewrite_uq(&polynomial)?),
            _ => None,
        };
        if let Some(form) = &form {
            let back = match f {
                Family::Lambda(_) => expand_uv(form)?,
                _ => expand_uq(form)?,
            };
            checks.push("rewriting round trip", back == polynomial.embed(back.ring())?, "");
        }
        Ok(InvariantResult { knot: k.name.clone(), family: f, polynomial, form, checks, state, runtime_ms: start.elapsed_ms() })
    }

    pub fn ado(&self, k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
        self.compute(k, Family::Ado(n), false)
    }

    pub fn colored_jones(&self, k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
        self.compute(k, Family::ColoredJones(n), false)
    }

    pub fn lambda(&self, k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
        self.compute(k, Family::Lambda(n), false)
    }

    pub fn vn(&self, k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
        self.compute(k, Family::Vn(n), false)
    }
}

/// Wall-clock timer; reads zero on wasm32, which has no std clock.
struct Stopwatch(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Stopwatch {
    fn start() -> Self {
        Stopwatch(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> u128 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_millis();
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Coefficient ring of Λ_N and ADO_N: Z when N <= 2, otherwise Z[ω].
fn root_ring(n: u32, vars: &[&str]) -> Arc<Ring> {
    if n <= 2 {
        Ring::integer(vars)
    } else {
        Ring::cyclotomic(n, vars)
    }
}

fn require_free(p: &LaurentPoly, var: &'static str, checks: &mut Report) -> Result<(), InvariantError> {
    let free = p.is_free_of(var);
    checks.push(format!("gauge variable {} absent", var), free, "");
    if free {
        Ok(())
    } else {
        Err(InvariantError::Gauge { var, poly: p.to_string() })
    }
}

/// Move the raw state-sum scalar into the family's output ring.
fn normalize(raw: &LaurentPoly, f: Family, checks: &mut Report) -> Result<LaurentPoly, InvariantError> {
    match f {
        Family::Ado(n) => Ok(raw.embed(&root_ring(n, &["t"]))?),
        Family::ColoredJones(_) => Ok(raw.clone()),
        Family::Lambda(n) => {
            require_free(raw, "q21", checks)?;
            Ok(raw.embed(&root_ring(n, &["t1", "t2"]))?)
        }
        Family::Vn(_) => {
            require_free(raw, "g", checks)?;
            Ok(s_to_q(raw)?)
        }
    }
}

/// Rewrite a polynomial in s = q^{1/2}, t as one in q, t when every power of s is even;
/// otherwise keep s.
pub fn s_to_q(p: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
    let (si, ti) = (p.ring().var_index("s"), p.ring().var_index("t"));
    let exps = |m: &Monomial| (si.map_or(0, |i| m.exp(i)), ti.map_or(0, |i| m.exp(i)));
    if p.terms().iter().all(|(m, _)| exps(m).0 % 2 == 0) {
        let ring = rewrite::qt_ring();
        let terms = p.terms().iter().map(|(m, c)| {
            let (s, t) = exps(m);
            (Monomial::from_slots(&[s / 2, t]), *c)
        });
        Ok(LaurentPoly::from_terms(&ring, terms.collect()))
    } else {
        p.embed(&Ring::integer(&["s", "t"]))
    }
}

fn default_engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

/// ADO_ω(t) at a primitive N-th root of unity ω, N >= 2.
pub fn compute_ado(k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
    default_engine().ado(k, n)
}

/// The n-colored Jones polynomial J_n(q).
pub fn compute_colored_jones(k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
    default_engine().colored_jones(k, n)
}

/// Λ_ω(t1, t2) at a primitive N-th root of unity ω.
pub fn compute_lambda(k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
    default_engine().lambda(k, n)
}

/// V_n(t, q).
pub fn compute_vn(k: &KnotInput, n: u32) -> Result<InvariantResult, InvariantError> {
    default_engine().vn(k, n)
}
