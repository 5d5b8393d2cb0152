//! Finite linear combinations `Σ c_k · k` over an ordered key set.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use crate::laurent::Coeff;

#[derive(Clone, PartialEq)]
pub struct LinComb<K: Ord, C> {
    terms: BTreeMap<K, C>,
}

impl<K: Ord + Clone, C: Coeff> Default for LinComb<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, C: Coeff> LinComb<K, C> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, C::cone())
    }

    pub fn term(k: K, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
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

    pub fn get(&self, k: &K) -> C {
        self.terms.get(k).cloned().unwrap_or_else(C::czero)
    }

    pub fn coeff_ref(&self, k: &K) -> Option<&C> {
        self.terms.get(k)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, C> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, C> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.cis_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                e.get_mut().cadd_assign(&c);
                if e.get().cis_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &C) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c.cmul(s));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &C::cone().cneg());
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero();
        if s.cis_zero() {
            return out;
        }
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c.cmul(s));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::cone().cneg())
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<K2: Ord + Clone, F>(&self, mut f: F) -> LinComb<K2, C>
    where
        F: FnMut(&K) -> LinComb<K2, C>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Changes coefficient ring term by term.
    pub fn map_coeffs<C2: Coeff, F: FnMut(&C) -> C2>(&self, mut f: F) -> LinComb<K, C2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Bilinear extension of a product given on basis pairs.
    pub fn bilinear<F>(&self, other: &Self, mut f: F) -> Self
    where
        F: FnMut(&K, &K) -> Self,
    {
        let mut out = Self::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let p = f(a, b);
                if !p.is_zero() {
                    out.add_scaled(&p, &ca.cmul(cb));
                }
            }
        }
        out
    }

    pub fn retain<F: FnMut(&K, &C) -> bool>(&mut self, mut f: F) {
        self.terms.retain(|k, c| f(k, c));
    }
}

impl<K: Ord + Clone, C: Coeff> FromIterator<(K, C)> for LinComb<K, C> {
    fn from_iter<I: IntoIterator<Item = (K, C)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + fmt::Debug, C: fmt::Debug> fmt::Debug for LinComb<K, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})·{:?}", c, k)?;
        }
        Ok(())
    }
}

impl<'a, K: Ord, C> IntoIterator for &'a LinComb<K, C> {
    type Item = (&'a K, &'a C);
    type IntoIter = btree_map::Iter<'a, K, C>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
