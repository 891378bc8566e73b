//! Finite formal linear combinations with no stored zero coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;

use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord, K = Rational> {
    terms: BTreeMap<B, K>,
}

impl<B: Ord, K> Default for LinComb<B, K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone, K: Scalar> LinComb<B, K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(K::one(), b)
    }

    pub fn term(c: K, b: B) -> Self {
        let mut v = Self::zero();
        v.add_term(c, b);
        v
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

    pub fn coeff(&self, b: &B) -> K {
        self.terms.get(b).cloned().unwrap_or_else(K::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, K> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, B, K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, c: K, b: B) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &K, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (b, k) in other.iter() {
            self.add_term(c.clone() * k.clone(), b.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(&K::one(), other);
    }

    pub fn scaled(&self, c: &K) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-K::one())
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-K::one(), other);
        out
    }

    /// Relabel basis elements and extend linearly; colliding images are summed.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C, K>) -> LinComb<C, K> {
        let mut out = LinComb::zero();
        for (b, k) in self.iter() {
            out.add_scaled(k, &f(b));
        }
        out
    }

    pub fn map_coeffs<L: Scalar>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<B, L> {
        let mut out = LinComb::zero();
        for (b, k) in self.iter() {
            out.add_term(f(k), b.clone());
        }
        out
    }
}

impl<B: Ord + Clone, K: Scalar> FromIterator<(K, B)> for LinComb<B, K> {
    fn from_iter<I: IntoIterator<Item = (K, B)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (c, b) in iter {
            out.add_term(c, b);
        }
        out
    }
}

impl<B: Ord + fmt::Display, K: Scalar> fmt::Display for LinComb<B, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, k)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_one() {
                write!(f, "{}", b)?;
            } else {
                write!(f, "({})·{}", k, b)?;
            }
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Debug, K: fmt::Debug> fmt::Debug for LinComb<B, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn cancellation_removes_terms() {
        let mut v: LinComb<u32> = LinComb::term(int(3), 1);
        v.add_term(int(-3), 1);
        assert!(v.is_zero());
        v.add_term(int(0), 2);
        assert!(v.is_zero());
    }

    #[test]
    fn map_basis_sums_collisions() {
        let v: LinComb<u32> = [(int(1), 1), (int(2), 2)].into_iter().collect();
        let w = v.map_basis(|_| LinComb::basis(0u32));
        assert_eq!(w.coeff(&0), int(3));
    }
}
