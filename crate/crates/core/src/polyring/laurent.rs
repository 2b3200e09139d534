use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::cyclotomic::CycInt;
use super::ring::{CoeffRing, Monomial, Ring, UnitMonomial, MAX_SLOTS};
use super::PolyError;

pub type Term = (Monomial, i64);

/// Multivariate Laurent polynomial with integer or cyclotomic-integer coefficients.
///
/// Terms are kept sorted by exponent vector with no zero coefficients; in cyclotomic
/// rings the root-of-unity slot is reduced below deg Phi_N.
#[derive(Clone)]
pub struct LaurentPoly {
    ring: Arc<Ring>,
    terms: Vec<Term>,
}

#[inline]
fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer coefficient overflow")
}

#[inline]
fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer coefficient overflow")
}

/// Sort, combine and reduce a raw term list.
pub(crate) fn canonicalize(ring: &Ring, terms: &mut Vec<Term>) {
    if let Some(ws) = ring.w_slot() {
        let phi = ring.phi_deg();
        if terms.iter().any(|t| t.0.exp(ws) >= phi as i32 || t.0.exp(ws) < 0) {
            let order = ring.order().unwrap() as i32;
            let mut out = Vec::with_capacity(terms.len() * 2);
            for &(m, c) in terms.iter() {
                let e = m.exp(ws).rem_euclid(order);
                if (e as usize) < phi {
                    out.push((m.with_slot(ws, e), c));
                } else {
                    for (j, &r) in ring.wpow(e as usize).iter().enumerate() {
                        if r != 0 {
                            out.push((m.with_slot(ws, j as i32), cmul(c, r)));
                        }
                    }
                }
            }
            *terms = out;
        }
    }
    terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut w = 0usize;
    for r in 0..terms.len() {
        if w > 0 && terms[w - 1].0 == terms[r].0 {
            terms[w - 1].1 = cadd(terms[w - 1].1, terms[r].1);
        } else {
            terms[w] = terms[r];
            w += 1;
        }
    }
    terms.truncate(w);
    terms.retain(|t| t.1 != 0);
}

pub(crate) fn merge_add(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = cadd(a[i].1, b[j].1);
                if c != 0 {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn shifted(big: &[Term], by: Term) -> Vec<Term> {
    big.iter().map(|&(m, c)| (m.mul(by.0), cmul(c, by.1))).collect()
}

pub(crate) fn mul_terms(ring: &Ring, a: &[Term], b: &[Term]) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if ring.w_slot().is_none() && small.len() <= 4 {
        let mut acc = shifted(big, small[0]);
        for &s in &small[1..] {
            acc = merge_add(&acc, &shifted(big, s));
        }
        return acc;
    }
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &(ma, ca) in small {
        for &(mb, cb) in big {
            out.push((ma.mul(mb), cmul(ca, cb)));
        }
    }
    canonicalize(ring, &mut out);
    out
}

impl LaurentPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        LaurentPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        let terms = if c == 0 { Vec::new() } else { vec![(Monomial::ONE, c)] };
        LaurentPoly { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self, PolyError> {
        Self::var_pow(ring, name, 1)
    }

    pub fn var_pow(ring: &Arc<Ring>, name: &str, e: i32) -> Result<Self, PolyError> {
        let slot = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(LaurentPoly { ring: ring.clone(), terms: vec![(Monomial::var(slot, e), 1)] })
    }

    /// Build from (variable, exponent) pairs and a coefficient.
    pub fn monomial(ring: &Arc<Ring>, exps: &[(&str, i32)], coeff: i64) -> Result<Self, PolyError> {
        let mut m = Monomial::ONE;
        for &(name, e) in exps {
            let slot = ring.var_index(name).ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
            m = m.mul(Monomial::var(slot, e));
        }
        Ok(Self::from_terms(ring, vec![(m, coeff)]))
    }

    /// The distinguished root of unity; errors in integer rings.
    pub fn omega(ring: &Arc<Ring>) -> Result<Self, PolyError> {
        let ws = ring.w_slot().ok_or_else(|| PolyError::BadRing("no root of unity in integer ring".into()))?;
        Ok(Self::from_terms(ring, vec![(Monomial::var(ws, 1), 1)]))
    }

    pub fn from_cyc(ring: &Arc<Ring>, c: &CycInt) -> Result<Self, PolyError> {
        match ring.coeff_ring() {
            CoeffRing::Cyclotomic(n) if n == c.order() => {
                let ws = ring.w_slot().unwrap();
                let terms = c.coeffs().iter().enumerate().map(|(k, &v)| (Monomial::var(ws, k as i32), v)).collect();
                Ok(Self::from_terms(ring, terms))
            }
            CoeffRing::Integer => match c.to_int() {
                Some(v) if c.order() <= 2 => Ok(Self::constant(ring, v)),
                _ => Err(PolyError::RingMismatch(format!("Z[w,{}] into Z", c.order()))),
            },
            other => Err(PolyError::RingMismatch(format!("Z[w,{}] into {}", c.order(), other))),
        }
    }

    pub fn from_terms(ring: &Arc<Ring>, mut terms: Vec<Term>) -> Self {
        canonicalize(ring, &mut terms);
        LaurentPoly { ring: ring.clone(), terms }
    }

    /// Terms already sorted, combined and reduced.
    pub(crate) fn from_canonical(ring: &Arc<Ring>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        LaurentPoly { ring: ring.clone(), terms }
    }

    pub fn from_unit(ring: &Arc<Ring>, u: UnitMonomial) -> Self {
        let mut m = u.mono;
        if let Some(ws) = ring.w_slot() {
            m = m.with_slot(ws, u.w);
        } else if u.w != 0 {
            panic!("root of unity in integer ring");
        }
        Self::from_terms(ring, vec![(m, if u.neg { -1 } else { 1 })])
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch(format!("{:?} vs {:?}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(LaurentPoly { ring: self.ring.clone(), terms: merge_add(&self.terms, &other.terms) })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(LaurentPoly { ring: self.ring.clone(), terms: mul_terms(&self.ring, &self.terms, &other.terms) })
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_ring(other).expect("ring mismatch");
        if other.terms.is_empty() {
            return;
        }
        self.terms = merge_add(&self.terms, &other.terms);
    }

    fn neg_ref(&self) -> Self {
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(m, c)| (m, -c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(&self.ring);
        }
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(m, c)| (m, cmul(c, k))).collect() }
    }

    pub fn mul_mono(&self, m: Monomial) -> Self {
        LaurentPoly { ring: self.ring.clone(), terms: self.terms.iter().map(|&(x, c)| (x.mul(m), c)).collect() }
    }

    pub fn mul_unit(&self, u: UnitMonomial) -> Self {
        if u.w == 0 || self.ring.w_slot().is_none() {
            assert!(u.w == 0 || self.ring.w_slot().is_some(), "root of unity in integer ring");
            let s = if u.neg { -1 } else { 1 };
            let terms = self.terms.iter().map(|&(x, c)| (x.mul(u.mono), c * s)).collect();
            LaurentPoly { ring: self.ring.clone(), terms }
        } else {
            self * &LaurentPoly::from_unit(&self.ring, u)
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power, allowing negative exponents for units.
    pub fn powi(&self, e: i32) -> Result<Self, PolyError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse_unit()?.pow((-e) as u32))
        }
    }

    /// Recognize +-w^k * monomial.
    pub fn as_unit(&self) -> Option<UnitMonomial> {
        match self.ring.w_slot() {
            None => {
                if self.terms.len() == 1 && self.terms[0].1.abs() == 1 {
                    Some(UnitMonomial { neg: self.terms[0].1 < 0, w: 0, mono: self.terms[0].0 })
                } else {
                    None
                }
            }
            Some(ws) => {
                if self.terms.is_empty() {
                    return None;
                }
                let base = self.terms[0].0.with_slot(ws, 0);
                if self.terms.iter().any(|t| t.0.with_slot(ws, 0) != base) {
                    return None;
                }
                let n = self.ring.order().unwrap();
                let mut v = vec![0i64; self.ring.phi_deg().max(1)];
                for &(m, c) in &self.terms {
                    v[m.exp(ws) as usize] = c;
                }
                let (neg, k) = CycInt::from_coeffs(n, v).as_signed_root()?;
                Some(UnitMonomial { neg, w: k as i32, mono: base })
            }
        }
    }

    pub fn inverse_unit(&self) -> Result<Self, PolyError> {
        let u = self.as_unit().ok_or_else(|| PolyError::UnitRequired(self.to_string()))?;
        Ok(Self::from_unit(&self.ring, u.inv()))
    }

    pub fn coeff_of(&self, m: Monomial) -> i64 {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// Exponent range of a named variable; errors on the zero polynomial.
    pub fn exponent_range(&self, var: &str) -> Result<(i32, i32), PolyError> {
        let slot = self.ring.var_index(var).ok_or_else(|| PolyError::UnknownVariable(var.to_string()))?;
        if self.terms.is_empty() {
            return Err(PolyError::UndefinedDegree);
        }
        let lo = self.terms.iter().map(|t| t.0.exp(slot)).min().unwrap();
        let hi = self.terms.iter().map(|t| t.0.exp(slot)).max().unwrap();
        Ok((lo, hi))
    }

    pub fn degree_span(&self, var: &str) -> Result<u32, PolyError> {
        let (lo, hi) = self.exponent_range(var)?;
        Ok((hi - lo) as u32)
    }

    pub fn is_free_of(&self, var: &str) -> bool {
        match self.ring.var_index(var) {
            None => true,
            Some(slot) => self.terms.iter().all(|t| t.0.exp(slot) == 0),
        }
    }

    /// Constant value, if the polynomial involves no named variables.
    pub fn as_constant(&self) -> Option<CycInt> {
        let n = self.ring.vars().len();
        if self.terms.iter().any(|t| (0..n).any(|s| t.0.exp(s) != 0)) {
            return None;
        }
        match self.ring.w_slot() {
            None => Some(CycInt::from_int(1, self.terms.first().map_or(0, |t| t.1))),
            Some(ws) => {
                let mut v = vec![0i64; self.ring.phi_deg()];
                for &(m, c) in &self.terms {
                    v[m.exp(ws) as usize] = c;
                }
                Some(CycInt::from_coeffs(self.ring.order().unwrap(), v))
            }
        }
    }

    /// Ring map into `target`: bound variables go to their images, the others to the
    /// same-named variable of `target`.
    pub fn substitute(&self, target: &Arc<Ring>, bindings: &[(&str, LaurentPoly)]) -> Result<Self, PolyError> {
        for (name, img) in bindings {
            if !img.ring.same(target) {
                return Err(PolyError::RingMismatch(format!("binding for {} lives in {:?}", name, img.ring)));
            }
        }
        let src = &self.ring;
        let mut images: Vec<(usize, LaurentPoly)> = Vec::new();
        let used: Vec<bool> = (0..MAX_SLOTS).map(|s| self.terms.iter().any(|t| t.0.exp(s) != 0)).collect();
        for (slot, name) in src.vars().iter().enumerate() {
            if !used[slot] {
                continue;
            }
            let img = match bindings.iter().find(|b| b.0 == name) {
                Some((_, p)) => p.clone(),
                None => LaurentPoly::var(target, name)?,
            };
            images.push((slot, img));
        }
        if let Some(ws) = src.w_slot() {
            if used[ws] {
                let n = src.order().unwrap();
                let img = match bindings.iter().find(|b| b.0 == super::ring::ROOT_NAME) {
                    Some((_, p)) => p.clone(),
                    None => LaurentPoly::from_cyc(target, &CycInt::omega(n))?,
                };
                images.push((ws, img));
            }
        }
        let units: Option<Vec<(usize, UnitMonomial)>> =
            images.iter().map(|(s, p)| p.as_unit().map(|u| (*s, u))).collect();
        if let Some(units) = units {
            let has_w = target.w_slot();
            let mut out = Vec::with_capacity(self.terms.len());
            for &(m, c) in &self.terms {
                let mut u = UnitMonomial::ONE;
                for &(s, img) in &units {
                    u = u.mul(img.pow(m.exp(s)));
                }
                let mut mono = u.mono;
                if let Some(ws) = has_w {
                    mono = mono.with_slot(ws, u.w);
                }
                out.push((mono, if u.neg { -c } else { c }));
            }
            return Ok(Self::from_terms(target, out));
        }
        let mut cache: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut acc: Vec<Term> = Vec::new();
        for &(m, c) in &self.terms {
            let mut prod = LaurentPoly::constant(target, c);
            for (s, img) in &images {
                let e = m.exp(*s);
                if e == 0 {
                    continue;
                }
                let key = (*s, e);
                if !cache.contains_key(&key) {
                    let p = if e < 0 {
                        img.inverse_unit()
                            .map_err(|_| PolyError::UnitRequired(format!("image of slot {}", s)))?
                            .pow((-e) as u32)
                    } else {
                        img.pow(e as u32)
                    };
                    cache.insert(key, p);
                }
                prod = &prod * &cache[&key];
            }
            acc.extend(prod.terms);
        }
        Ok(Self::from_terms(target, acc))
    }

    /// Re-express in a ring containing the same variables.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Self, PolyError> {
        if self.ring.same(target) {
            return Ok(self.clone());
        }
        self.substitute(target, &[])
    }

    /// Exact quotient self / d; errors when d does not divide self.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if let Some(u) = d.as_unit() {
            return Ok(self.mul_unit(u.inv()));
        }
        if self.ring.w_slot().is_some() {
            return super::cycdiv::div_exact_cyclotomic(self, d);
        }
        // Leading-term division in lex order; the quotient's lowest term is bounded below
        // by low(self)/low(d), which stops the loop on non-exact input.
        let (dlm, dlc) = *d.terms.last().unwrap();
        let floor = self.terms[0].0.mul(d.terms[0].0.inv());
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(&(rm, rc)) = rem.last() {
            if rc % dlc != 0 {
                return Err(PolyError::NotDivisible);
            }
            let qm = rm.mul(dlm.inv());
            if qm < floor {
                return Err(PolyError::NotDivisible);
            }
            let qc = rc / dlc;
            quot.push((qm, qc));
            let sub: Vec<Term> = d.terms.iter().map(|&(m, c)| (m.mul(qm), cmul(-c, qc))).collect();
            rem = merge_add(&rem, &sub);
        }
        quot.reverse();
        Ok(LaurentPoly::from_canonical(&self.ring, quot))
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.neg_ref()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
