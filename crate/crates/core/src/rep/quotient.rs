//! The subalgebras `T_d`, the ideals `S^{(r₁,r₂,r₃)}` and the quotients `q^{(d,t)}`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Family, Gen, Parity, Preset, SuperVector};
use crate::linalg::Echelon;
use crate::lincomb::LinComb;
use crate::report::CheckReport;

const ALG: Preset = Preset::S;

/// `T_d = span{L_{≥0}, W_{≥−d}, G_{≥½}, C1, C2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TdAlgebra {
    pub d: u32,
}

impl TdAlgebra {
    pub fn new(d: u32) -> Self {
        TdAlgebra { d }
    }

    pub fn contains(&self, g: Gen) -> bool {
        if !ALG.contains(g) {
            return false;
        }
        let m = g.mode.doubled();
        match g.family {
            Family::L => m >= 0,
            Family::W => m >= -2 * self.d as i64,
            Family::G => m >= 1,
            _ => true,
        }
    }

    /// Non-central elements with `|mode| ≤ window`, then `C1, C2`.
    pub fn basis_window(&self, window: i64) -> Vec<Gen> {
        ALG.basis_window(window).into_iter().filter(|g| self.contains(*g)).collect()
    }

    /// Closure under the bracket on a window; outputs may leave the window.
    pub fn closure_check(&self, window: i64) -> CheckReport {
        let mut r = CheckReport::new(format!("T_{} closure", self.d));
        let basis = self.basis_window(window);
        for &x in &basis {
            for &y in &basis {
                let b = ALG.bracket_gens(x, y).expect("generators of S");
                match b.keys().find(|g| !self.contains(**g)) {
                    None => r.pass(),
                    Some(g) => r.fail(vec![format!("{x}"), format!("{y}")], "inside T_d".into(), format!("{g}")),
                }
            }
        }
        r
    }
}

/// `S^{(r₁,r₂,r₃)} = span{L_{i≥r₁}, W_{i≥r₂}, G_{i−½} : i ≥ r₃, i ≠ 0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TailIdeal {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
}

impl TailIdeal {
    pub fn contains(&self, g: Gen) -> bool {
        let m = g.mode.doubled();
        match g.family {
            Family::L => g.mode.is_integral() && m >= 2 * self.r1,
            Family::W => g.mode.is_integral() && m >= 2 * self.r2,
            Family::G => {
                let i = (m + 1) / 2;
                !g.mode.is_integral() && i >= self.r3 && i != 0
            }
            _ => false,
        }
    }
}

/// `q^{(d,t)} = T_d / S^{(t+d+1, t+1, t+1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    pub d: u32,
    pub t: u32,
}

impl QuotientAlgebra {
    pub fn new(d: u32, t: u32) -> Self {
        QuotientAlgebra { d, t }
    }

    pub fn td(&self) -> TdAlgebra {
        TdAlgebra::new(self.d)
    }

    pub fn ideal(&self) -> TailIdeal {
        let (d, t) = (self.d as i64, self.t as i64);
        TailIdeal { r1: t + d + 1, r2: t + 1, r3: t + 1 }
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.td().contains(g) && !self.ideal().contains(g)
    }

    /// `L_0..L_{t+d}, W_{−d}..W_t, G_{½}..G_{t−½}, C1, C2`.
    pub fn basis(&self) -> Vec<Gen> {
        let (d, t) = (self.d as i64, self.t as i64);
        let mut b: Vec<Gen> = (0..=t + d).map(Gen::l).collect();
        b.extend((-d..=t).map(Gen::w));
        b.extend((1..=t).map(|i| Gen::g2(2 * i - 1)));
        b.extend([Gen::C1, Gen::C2]);
        b
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }

    pub fn parity(&self, g: Gen) -> Parity {
        ALG.parity(g)
    }

    /// Bracket in `T_d` with the ideal dropped.
    pub fn bracket(&self, x: Gen, y: Gen) -> SuperVector {
        let full = ALG.bracket_gens(x, y).expect("generators of S");
        full.iter().filter(|(g, _)| !self.ideal().contains(**g)).map(|(g, c)| (c.clone(), *g)).collect()
    }

    /// `[T_d, S^{(t+d+1,t+1,t+1)}] ⊆ S^{(t+d+1,t+1,t+1)}` on a window.
    pub fn ideal_check(&self, window: i64) -> CheckReport {
        let mut r = CheckReport::new(format!("q^({},{}) ideal", self.d, self.t));
        let ideal = self.ideal();
        let td = self.td().basis_window(window);
        for &x in &td {
            for &y in td.iter().filter(|g| ideal.contains(**g)) {
                let b = ALG.bracket_gens(x, y).expect("generators of S");
                match b.keys().find(|g| !ideal.contains(**g)) {
                    None => r.pass(),
                    Some(g) => r.fail(vec![format!("{x}"), format!("{y}")], "inside the ideal".into(), format!("{g}")),
                }
            }
        }
        r
    }

    pub fn derived_series(&self) -> Vec<usize> {
        derived_series(&self.basis(), |x, y| self.bracket(*x, *y))
    }
}

/// Dimensions of `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ⋯`, stopping at zero or when stable.
pub fn derived_series<B: Ord + Clone>(basis: &[B], bracket: impl Fn(&B, &B) -> LinComb<B>) -> Vec<usize> {
    let mut current: Vec<LinComb<B>> = basis.iter().cloned().map(LinComb::basis).collect();
    let mut dims = vec![echelon_basis(&current).len()];
    loop {
        let mut next = Echelon::new();
        for (a, u) in current.iter().enumerate() {
            for v in &current[a..] {
                let mut w = LinComb::zero();
                for (x, cx) in u.iter() {
                    for (y, cy) in v.iter() {
                        w.add_scaled(&(cx * cy), &bracket(x, y));
                    }
                }
                next.insert(&w);
            }
        }
        let n = next.rank();
        let last = *dims.last().expect("nonempty");
        if n == last {
            return dims;
        }
        dims.push(n);
        if n == 0 {
            return dims;
        }
        current = next.basis();
    }
}

fn echelon_basis<B: Ord + Clone>(vs: &[LinComb<B>]) -> Vec<LinComb<B>> {
    let mut e = Echelon::new();
    vs.iter().for_each(|v| {
        e.insert(v);
    });
    e.basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn td_is_closed() {
        for d in 0..3 {
            assert!(TdAlgebra::new(d).closure_check(5).passed());
        }
    }

    #[test]
    fn quotient_basis_and_ideal() {
        let q = QuotientAlgebra::new(1, 1);
        assert_eq!(q.dim(), 3 + 3 + 1 + 2);
        assert!(q.ideal_check(6).passed());
        assert!(q.contains(Gen::w(-1)));
        assert!(!q.contains(Gen::l(3)));
        assert!(!q.contains(Gen::g2(3)));
    }

    #[test]
    fn s0_series() {
        assert_eq!(QuotientAlgebra::new(0, 0).derived_series(), vec![4, 1, 0]);
    }

    #[test]
    fn abelian_is_one_step() {
        let basis = [1u8, 2, 3];
        assert_eq!(derived_series(&basis, |_, _| LinComb::zero()), vec![3, 0]);
    }
}
