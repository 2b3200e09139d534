use std::collections::BTreeMap;
use std::sync::Arc;

use crate::polyring::{LaurentPoly, Ring, UnitMonomial};

/// Finite linear combination of keys with Laurent polynomial coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord> {
    map: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord + Copy> Default for LinComb<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Copy> LinComb<K> {
    pub fn new() -> Self {
        LinComb { map: BTreeMap::new() }
    }

    pub fn single(k: K, p: LaurentPoly) -> Self {
        let mut c = Self::new();
        c.add_term(k, p);
        c
    }

    pub fn add_term(&mut self, k: K, p: LaurentPoly) {
        if p.is_zero() {
            return;
        }
        match self.map.get_mut(&k) {
            Some(v) => {
                v.add_assign_ref(&p);
                if v.is_zero() {
                    self.map.remove(&k);
                }
            }
            None => {
                self.map.insert(k, p);
            }
        }
    }

    pub fn add_unit_term(&mut self, ring: &Arc<Ring>, k: K, u: UnitMonomial) {
        self.add_term(k, LaurentPoly::from_unit(ring, u));
    }

    pub fn add_scaled(&mut self, other: &Self, s: &LaurentPoly) {
        for (k, v) in other.iter() {
            self.add_term(*k, v * s);
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (k, v) in other.iter() {
            self.add_term(*k, v.clone());
        }
    }

    pub fn sub(&mut self, other: &Self) {
        for (k, v) in other.iter() {
            self.add_term(*k, -v);
        }
    }

    pub fn scaled(&self, s: &LaurentPoly) -> Self {
        let mut out = Self::new();
        for (k, v) in self.iter() {
            out.add_term(*k, v * s);
        }
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &LaurentPoly)> {
        self.map.iter()
    }

    pub fn get(&self, k: &K) -> Option<&LaurentPoly> {
        self.map.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.map.keys()
    }

    pub fn map_keys<J: Ord + Copy>(&self, f: impl Fn(K) -> J) -> LinComb<J> {
        let mut out = LinComb::new();
        for (k, v) in self.iter() {
            out.add_term(f(*k), v.clone());
        }
        out
    }
}
