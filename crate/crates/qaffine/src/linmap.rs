//! Sparse linear combinations with exact scalar coefficients.
//!
//! `LinMap<K>` is the common element type of every module in this crate:
//! a finite formal sum of basis keys with [`Scalar`] coefficients. Zero
//! coefficients are never stored, so equality is structural.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap<K: Ord + Clone> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> Default for LinMap<K> {
    fn default() -> Self {
        LinMap::new()
    }
}

impl<K: Ord + Clone> LinMap<K> {
    pub fn new() -> Self {
        LinMap {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(key: K, coeff: Scalar) -> Self {
        let mut m = LinMap::new();
        m.add_term(key, coeff);
        m
    }

    pub fn basis(key: K) -> Self {
        LinMap::single(key, Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let v = &*e.get() + &coeff;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scale(&mut self, factor: &Scalar) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c = &*c * factor;
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        let mut out = self.clone();
        out.scale(factor);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_iter_terms(self) -> impl Iterator<Item = (K, Scalar)> {
        self.terms.into_iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn map_keys<K2: Ord + Clone>(&self, f: impl Fn(&K) -> K2) -> LinMap<K2> {
        let mut out = LinMap::new();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinMap<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({}) {}", c, k)?;
        }
        Ok(())
    }
}
