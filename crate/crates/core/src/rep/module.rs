//! Finite-dimensional coefficient modules given by matrices.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::quotient::QuotientAlgebra;
use crate::algebra::{Family, Gen, Parity};
use crate::linalg::Matrix;
use crate::lincomb::LinComb;
use crate::pbw::BaseAction;
use crate::report::CheckReport;
use crate::scalar::{int, Rational};

/// A module over `q^{(d,t)}`. Column `j` of `actions[g]` is `g·e_j`; generators
/// without a matrix act as zero and `C1`, `C2` act by `c1`, `c2`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteModule {
    pub dim: usize,
    pub parities: Vec<Parity>,
    pub c1: Rational,
    pub c2: Rational,
    pub actions: BTreeMap<Gen, Matrix>,
}

impl FiniteModule {
    /// All generators act as zero.
    pub fn trivial(dim: usize) -> Self {
        FiniteModule { dim, parities: vec![Parity::Even; dim], c1: Rational::zero(), c2: Rational::zero(), actions: BTreeMap::new() }
    }

    /// `ℂv` with `L_0 = h1`, `W_0 = h2`, `C1 = c1`, `C2 = c2`.
    pub fn one_dim(h1: Rational, h2: Rational, c1: Rational, c2: Rational) -> Self {
        let mut m = FiniteModule::trivial(1);
        m.c1 = c1;
        m.c2 = c2;
        m.with_action(Gen::l(0), Matrix::scalar(1, h1)).with_action(Gen::w(0), Matrix::scalar(1, h2))
    }

    pub fn with_action(mut self, g: Gen, m: Matrix) -> Self {
        self.actions.insert(g, m);
        self
    }

    /// The same matrices with every basis parity flipped.
    pub fn parity_flipped(&self) -> Self {
        let mut m = self.clone();
        for p in &mut m.parities {
            *p = *p + Parity::Odd;
        }
        m
    }

    /// Matrix of any generator, including the central ones.
    pub fn matrix(&self, g: Gen) -> Matrix {
        match g.family {
            Family::C1 => Matrix::scalar(self.dim, self.c1.clone()),
            Family::C2 => Matrix::scalar(self.dim, self.c2.clone()),
            Family::C3 | Family::C4 => Matrix::zeros(self.dim, self.dim),
            _ => self.actions.get(&g).cloned().unwrap_or_else(|| Matrix::zeros(self.dim, self.dim)),
        }
    }

    pub fn apply(&self, g: Gen, v: &LinComb<usize>) -> LinComb<usize> {
        let mut out = LinComb::zero();
        for (j, c) in v.iter() {
            out.add_scaled(c, &self.act(g, *j));
        }
        out
    }
}

impl BaseAction for FiniteModule {
    fn dim(&self) -> usize {
        self.dim
    }

    fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    fn act(&self, g: Gen, i: usize) -> LinComb<usize> {
        match self.actions.get(&g) {
            Some(m) => m.column(i),
            None if g.is_central() => LinComb::term(self.central(g), i),
            None => LinComb::zero(),
        }
    }

    fn central(&self, g: Gen) -> Rational {
        match g.family {
            Family::C1 => self.c1.clone(),
            Family::C2 => self.c2.clone(),
            _ => Rational::zero(),
        }
    }
}

/// Exhaustive check of `x(yv) − (−1)^{|x||y|} y(xv) = [x,y]v` over the basis of `q`,
/// plus shapes and parity compatibility.
pub fn validate_module(v: &FiniteModule, q: &QuotientAlgebra) -> CheckReport {
    let mut r = CheckReport::new(format!("module over q^({},{})", q.d, q.t));
    let n = v.dim;
    r.compare(|| vec!["parities".into()], &n, &v.parities.len());
    for (g, m) in &v.actions {
        if !q.contains(*g) || g.is_central() {
            r.fail(vec![format!("{g}")], "a non-central generator of q".into(), "foreign key".into());
            continue;
        }
        if m.nrows() != n || m.ncols() != n {
            r.fail(vec![format!("{g}")], format!("{n}x{n}"), format!("{}x{}", m.nrows(), m.ncols()));
            continue;
        }
        if v.parities.len() == n {
            let gp = q.parity(*g);
            for i in 0..n {
                for j in 0..n {
                    if !m.get(i, j).is_zero() && v.parities[i] != v.parities[j] + gp {
                        r.fail(vec![format!("{g}"), format!("({i},{j})")], "parity-compatible entry".into(), "nonzero".into());
                    }
                }
            }
        }
    }
    if !r.passed() {
        return r;
    }
    let basis = q.basis();
    let mats: BTreeMap<Gen, Matrix> = basis.iter().map(|g| (*g, v.matrix(*g))).collect();
    for (a, &x) in basis.iter().enumerate() {
        for &y in &basis[a..] {
            let (mx, my) = (&mats[&x], &mats[&y]);
            let sign = int(q.parity(x).koszul(q.parity(y)));
            let lhs = mx.mul(my).sub(&my.mul(mx).scale(&sign));
            let mut rhs = Matrix::zeros(n, n);
            for (z, c) in q.bracket(x, y).iter() {
                rhs = rhs.add(&mats[z].scale(c));
            }
            r.compare(|| vec![format!("{x}"), format!("{y}")], &MatrixText(rhs), &MatrixText(lhs));
        }
    }
    r
}

#[derive(PartialEq)]
struct MatrixText(Matrix);

impl core::fmt::Display for MatrixText {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let rows: Vec<String> = (0..self.0.nrows())
            .map(|i| self.0.row(i).iter().map(|c| format!("{c}")).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dim_highest_weight() {
        let q = QuotientAlgebra::new(0, 0);
        let v = FiniteModule::one_dim(int(3), int(-2), int(5), int(0));
        assert!(validate_module(&v, &q).passed());
    }

    #[test]
    fn nonzero_c2_on_a_line_fails() {
        let q = QuotientAlgebra::new(0, 0);
        let v = FiniteModule::one_dim(int(0), int(1), int(0), int(2));
        let r = validate_module(&v, &q);
        assert!(!r.passed());
        assert_eq!(r.witnesses[0].inputs, vec![String::from("L:0"), String::from("W:0")]);
    }

    #[test]
    fn trivial_module() {
        for (d, t) in [(0, 0), (1, 1), (2, 1)] {
            assert!(validate_module(&FiniteModule::trivial(3), &QuotientAlgebra::new(d, t)).passed());
        }
    }

    #[test]
    fn two_dim_nilpotent_l1() {
        // q^(0,1): L_0 = diag(1, 0), L_1 = E_{01}: [L_0, L_1] = L_1.
        let q = QuotientAlgebra::new(0, 1);
        let l0 = Matrix::from_rows(vec![vec![int(1), int(0)], vec![int(0), int(0)]]).unwrap();
        let l1 = Matrix::from_rows(vec![vec![int(0), int(1)], vec![int(0), int(0)]]).unwrap();
        let v = FiniteModule::trivial(2).with_action(Gen::l(0), l0.clone()).with_action(Gen::l(1), l1.clone());
        assert!(validate_module(&v, &q).passed());
        let bad = FiniteModule::trivial(2).with_action(Gen::l(0), l0).with_action(Gen::l(1), l1.add(&Matrix::identity(2)));
        assert!(!validate_module(&bad, &q).passed());
    }

    #[test]
    fn parity_and_foreign_keys() {
        let q = QuotientAlgebra::new(0, 1);
        let g = Matrix::identity(1);
        assert!(!validate_module(&FiniteModule::trivial(1).with_action(Gen::g2(1), g), &q).passed());
        assert!(!validate_module(&FiniteModule::trivial(1).with_action(Gen::l(5), Matrix::identity(1)), &q).passed());
        let flipped = FiniteModule::trivial(2).parity_flipped();
        assert_eq!(flipped.parities, vec![Parity::Odd; 2]);
    }
}
