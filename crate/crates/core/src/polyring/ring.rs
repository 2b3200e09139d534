use std::fmt;
use std::sync::Arc;

use super::cyclotomic::{cyclotomic_poly, reduce_mod_phi};
use super::PolyError;

/// Maximum number of exponent slots per monomial (named variables plus the root-of-unity slot).
pub const MAX_SLOTS: usize = 6;

/// Name reserved for the distinguished root of unity in cyclotomic rings.
pub const ROOT_NAME: &str = "w";

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoeffRing {
    Integer,
    Cyclotomic(u32),
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integer => write!(f, "Z"),
            CoeffRing::Cyclotomic(n) => write!(f, "Z[w,{}]", n),
        }
    }
}

/// Variable universe and coefficient ring shared by a family of polynomials.
///
/// In a cyclotomic ring the root w is stored as one extra exponent slot after the
/// named variables, kept below deg Phi_N in canonical form.
pub struct Ring {
    vars: Vec<String>,
    coeff: CoeffRing,
    phi_deg: usize,
    // wtable[k] = w^k mod Phi_N, for 0 <= k < N
    wtable: Vec<Vec<i64>>,
}

impl Ring {
    pub fn new(vars: &[&str], coeff: CoeffRing) -> Result<Arc<Ring>, PolyError> {
        let extra = matches!(coeff, CoeffRing::Cyclotomic(_)) as usize;
        if vars.len() + extra > MAX_SLOTS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        for (i, v) in vars.iter().enumerate() {
            if *v == ROOT_NAME || !is_identifier(v) || vars[..i].contains(v) {
                return Err(PolyError::BadVariable(v.to_string()));
            }
        }
        let (phi_deg, wtable) = match coeff {
            CoeffRing::Integer => (0, Vec::new()),
            CoeffRing::Cyclotomic(n) => {
                if n == 0 {
                    return Err(PolyError::BadRing("cyclotomic order 0".into()));
                }
                let phi = cyclotomic_poly(n);
                let table = (0..n as usize)
                    .map(|k| {
                        let mut v = vec![0i64; k + 1];
                        v[k] = 1;
                        reduce_mod_phi(v, &phi)
                    })
                    .collect();
                (phi.len() - 1, table)
            }
        };
        Ok(Arc::new(Ring { vars: vars.iter().map(|s| s.to_string()).collect(), coeff, phi_deg, wtable }))
    }

    /// Integer-coefficient ring; panics on invalid variable names.
    pub fn integer(vars: &[&str]) -> Arc<Ring> {
        Ring::new(vars, CoeffRing::Integer).expect("valid ring")
    }

    pub fn cyclotomic(n: u32, vars: &[&str]) -> Arc<Ring> {
        Ring::new(vars, CoeffRing::Cyclotomic(n)).expect("valid ring")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coeff_ring(&self) -> CoeffRing {
        self.coeff
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> Option<u32> {
        match self.coeff {
            CoeffRing::Integer => None,
            CoeffRing::Cyclotomic(n) => Some(n),
        }
    }

    pub(crate) fn w_slot(&self) -> Option<usize> {
        match self.coeff {
            CoeffRing::Integer => None,
            CoeffRing::Cyclotomic(_) => Some(self.vars.len()),
        }
    }

    pub(crate) fn phi_deg(&self) -> usize {
        self.phi_deg
    }

    pub(crate) fn wpow(&self, k: usize) -> &[i64] {
        &self.wtable[k % self.wtable.len()]
    }

    pub fn same(&self, other: &Ring) -> bool {
        std::ptr::eq(self, other) || (self.coeff == other.coeff && self.vars == other.vars)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.coeff, self.vars.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

/// Exponent vector indexed by ring slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(pub(crate) [i16; MAX_SLOTS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_SLOTS]);

    pub fn from_slots(exps: &[i32]) -> Monomial {
        let mut m = [0i16; MAX_SLOTS];
        for (slot, &e) in exps.iter().enumerate() {
            m[slot] = i16::try_from(e).expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn var(slot: usize, e: i32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[slot] = i16::try_from(e).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exp(&self, slot: usize) -> i32 {
        self.0[slot] as i32
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0 == [0; MAX_SLOTS]
    }

    #[inline]
    pub fn mul(self, o: Monomial) -> Monomial {
        let mut r = [0i16; MAX_SLOTS];
        for i in 0..MAX_SLOTS {
            r[i] = self.0[i].checked_add(o.0[i]).expect("exponent overflow");
        }
        Monomial(r)
    }

    pub fn inv(self) -> Monomial {
        let mut r = self.0;
        for e in r.iter_mut() {
            *e = -*e;
        }
        Monomial(r)
    }

    pub fn pow(self, k: i32) -> Monomial {
        let mut r = [0i16; MAX_SLOTS];
        for i in 0..MAX_SLOTS {
            r[i] = i16::try_from(self.0[i] as i32 * k).expect("exponent overflow");
        }
        Monomial(r)
    }

    pub(crate) fn with_slot(mut self, slot: usize, e: i32) -> Monomial {
        self.0[slot] = i16::try_from(e).expect("exponent overflow");
        self
    }
}

/// A unit of the form +-w^k * (Laurent monomial).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnitMonomial {
    pub neg: bool,
    pub w: i32,
    pub mono: Monomial,
}

impl UnitMonomial {
    pub const ONE: UnitMonomial = UnitMonomial { neg: false, w: 0, mono: Monomial::ONE };
    pub const MINUS_ONE: UnitMonomial = UnitMonomial { neg: true, w: 0, mono: Monomial::ONE };

    pub fn mono(mono: Monomial) -> Self {
        UnitMonomial { neg: false, w: 0, mono }
    }

    pub fn omega(k: i32) -> Self {
        UnitMonomial { neg: false, w: k, mono: Monomial::ONE }
    }

    pub fn mul(self, o: Self) -> Self {
        UnitMonomial { neg: self.neg ^ o.neg, w: self.w + o.w, mono: self.mono.mul(o.mono) }
    }

    pub fn inv(self) -> Self {
        UnitMonomial { neg: self.neg, w: -self.w, mono: self.mono.inv() }
    }

    pub fn pow(self, k: i32) -> Self {
        UnitMonomial { neg: self.neg && k.rem_euclid(2) == 1, w: self.w * k, mono: self.mono.pow(k) }
    }

    pub fn negate(self) -> Self {
        UnitMonomial { neg: !self.neg, ..self }
    }
}
