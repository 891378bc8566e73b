//! Exact linear algebra: an incremental sparse row echelon form (rank,
//! membership, nullspace) and small dense matrices.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lincomb::LinComb;
use crate::scalar::{Rational, Scalar};

/// Rows kept monic at their smallest column; every other entry of a row sits
/// at a larger column. Reduction therefore sweeps pivots in increasing order.
#[derive(Clone, Debug)]
pub struct Echelon<C: Ord, K = Rational> {
    rows: BTreeMap<C, LinComb<C, K>>,
}

impl<C: Ord, K> Default for Echelon<C, K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<C: Ord + Clone, K: Scalar> Echelon<C, K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &C> {
        self.rows.keys()
    }

    /// The stored rows, one per pivot.
    pub fn basis(&self) -> Vec<LinComb<C, K>> {
        self.rows.values().cloned().collect()
    }

    pub fn reduce(&self, v: &LinComb<C, K>) -> LinComb<C, K> {
        let mut v = v.clone();
        let mut cursor: Option<C> = None;
        loop {
            let next = v
                .keys()
                .filter(|k| cursor.as_ref().is_none_or(|c| *k > c))
                .find(|k| self.rows.contains_key(*k))
                .cloned();
            let Some(p) = next else { break };
            let c = v.coeff(&p);
            v.add_scaled(&-c, &self.rows[&p]);
            cursor = Some(p);
        }
        v
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<C, K>) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.iter().next().map(|(p, c)| (p.clone(), c.clone())) else {
            return false;
        };
        let inv = K::one() / lead;
        self.rows.insert(p, r.scaled(&inv));
        true
    }

    pub fn contains(&self, v: &LinComb<C, K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Basis of `{u : ⟨row, u⟩ = 0 for every row}` with support in `columns`.
    /// Rows must only mention columns from `columns`.
    pub fn nullspace(&self, columns: &[C]) -> Vec<LinComb<C, K>> {
        let free: Vec<&C> = columns.iter().filter(|c| !self.rows.contains_key(*c)).collect();
        let mut out = Vec::with_capacity(free.len());
        for f in free {
            let mut u: BTreeMap<C, K> = BTreeMap::new();
            u.insert(f.clone(), K::one());
            for (p, row) in self.rows.iter().rev() {
                let mut s = K::zero();
                for (c, k) in row.iter() {
                    if c == p {
                        continue;
                    }
                    if let Some(x) = u.get(c) {
                        s = s + k.clone() * x.clone();
                    }
                }
                if !s.is_zero() {
                    u.insert(p.clone(), -s);
                }
            }
            out.push(u.into_iter().map(|(c, k)| (k, c)).collect());
        }
        out
    }
}

/// Basis of `{x : Σ_j x_j·images[j] = 0}`, as combinations of indices.
pub fn kernel<C: Ord + Clone, K: Scalar>(images: &[LinComb<C, K>]) -> Vec<LinComb<usize, K>> {
    let mut rows: BTreeMap<C, LinComb<usize, K>> = BTreeMap::new();
    for (j, img) in images.iter().enumerate() {
        for (c, k) in img.iter() {
            rows.entry(c.clone()).or_default().add_term(k.clone(), j);
        }
    }
    let mut e = Echelon::new();
    for r in rows.values() {
        e.insert(r);
    }
    let columns: Vec<usize> = (0..images.len()).collect();
    e.nullspace(&columns)
}

/// Whether two families span the same space.
pub fn same_span<C: Ord + Clone, K: Scalar>(a: &[LinComb<C, K>], b: &[LinComb<C, K>]) -> bool {
    let mut ea = Echelon::new();
    a.iter().for_each(|v| {
        ea.insert(v);
    });
    let mut eb = Echelon::new();
    b.iter().for_each(|v| {
        eb.insert(v);
    });
    ea.rank() == eb.rank() && a.iter().all(|v| eb.contains(v)) && b.iter().all(|v| ea.contains(v))
}

/// Rank of a family of vectors.
pub fn rank<C: Ord + Clone, K: Scalar>(vs: &[LinComb<C, K>]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

/// Dense matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, K::one())
    }

    pub fn scalar(n: usize, c: K) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, c: &K) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    fn zip(&self, o: &Self, f: impl Fn(&K, &K) -> K) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols, "matrix shape mismatch");
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect() }
    }

    /// Column `j` as a sparse vector indexed by row.
    pub fn column(&self, j: usize) -> LinComb<usize, K> {
        (0..self.rows).map(|i| (self.get(i, j).clone(), i)).collect()
    }

    pub fn rank(&self) -> usize {
        let cols: Vec<_> = (0..self.cols).map(|j| self.column(j)).collect();
        rank(&cols)
    }
}

impl<K: Scalar> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = f.debug_list();
        for i in 0..self.rows {
            l.entry(&self.row(i));
        }
        l.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(entries: &[(i64, u32)]) -> LinComb<u32> {
        entries.iter().map(|&(c, k)| (int(c), k)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&v(&[(1, 0), (2, 1)])));
        assert!(e.insert(&v(&[(1, 1), (1, 2)])));
        assert!(!e.insert(&v(&[(2, 0), (5, 1), (1, 2)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(1, 0), (3, 1), (1, 2)])));
        assert!(!e.contains(&v(&[(1, 2)])));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let rows = [v(&[(1, 0), (2, 1), (3, 3)]), v(&[(1, 1), (-1, 2)]), v(&[(1, 0), (3, 1), (-1, 2), (3, 3)])];
        let mut e = Echelon::new();
        for r in &rows {
            e.insert(r);
        }
        let ns = e.nullspace(&[0, 1, 2, 3]);
        assert_eq!(ns.len(), 4 - e.rank());
        for u in &ns {
            for r in &rows {
                let dot = r.iter().fold(int(0), |s, (c, k)| s + k * u.coeff(c));
                assert_eq!(dot, int(0));
            }
        }
    }

    #[test]
    fn kernel_of_images() {
        let imgs = [v(&[(1, 0), (1, 1)]), v(&[(2, 0), (2, 1)]), v(&[(1, 2)])];
        let ker = kernel(&imgs);
        assert_eq!(ker.len(), 1);
        let k = &ker[0];
        assert_eq!(k.coeff(&2), int(0));
        assert_eq!(k.coeff(&0) * int(1) + k.coeff(&1) * int(2), int(0));
        assert!(same_span(&[v(&[(1, 0)]), v(&[(1, 1)])], &[v(&[(1, 0), (1, 1)]), v(&[(1, 0), (-1, 1)])]));
        assert!(!same_span(&[v(&[(1, 0)])], &[v(&[(1, 1)])]));
    }

    #[test]
    fn dense_product() {
        let a = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(0), int(1)]]).unwrap();
        let b = a.mul(&a);
        assert_eq!(b, Matrix::from_rows(vec![vec![int(1), int(4)], vec![int(0), int(1)]]).unwrap());
        assert_eq!(a.rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(2, 2).rank(), 0);
    }
}
