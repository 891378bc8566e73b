//! Whittaker modules: induction from a character `ψ_k` of `S^{(k)}`.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::induced::InducedModule;
use crate::algebra::{Family, Gen, Parity, Preset};
use crate::error::RepError;
use crate::linalg::Echelon;
use crate::lincomb::LinComb;
use crate::pbw::{BaseAction, Element, Layout};
use crate::scalar::Rational;

/// A character of `S^{(k)} = span{L_{≥k}, W_{≥k}, G_{≥k+½}}` with central charges.
/// Generators without a value map to zero.
#[derive(Clone, Debug, PartialEq)]
pub struct WhittakerData {
    pub k: u32,
    pub psi: BTreeMap<Gen, Rational>,
    pub c1: Rational,
    pub c2: Rational,
    pub parity: Parity,
}

impl WhittakerData {
    pub fn new(k: u32, c1: Rational, c2: Rational) -> Self {
        WhittakerData { k, psi: BTreeMap::new(), c1, c2, parity: Parity::Even }
    }

    pub fn with(mut self, g: Gen, value: Rational) -> Self {
        self.psi.insert(g, value);
        self
    }

    pub fn in_tail(&self, g: Gen) -> bool {
        Layout::whittaker(self.k).in_inducing(g) && !g.is_central()
    }

    /// `ψ(g)`, with `ψ(C1) = c1`, `ψ(C2) = c2`.
    pub fn value(&self, g: Gen) -> Rational {
        match g.family {
            Family::C1 => self.c1.clone(),
            Family::C2 => self.c2.clone(),
            _ => self.psi.get(&g).cloned().unwrap_or_else(Rational::zero),
        }
    }

    fn eval(&self, v: &LinComb<Gen>) -> Rational {
        v.iter().fold(Rational::zero(), |s, (g, c)| s + c * self.value(*g))
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let bad = |s: String| Err(RepError::InvalidWhittakerData(s));
        let k = self.k as i64;
        if k < 1 {
            return bad("k must be positive".into());
        }
        for (g, c) in &self.psi {
            if !Preset::S.contains(*g) || !self.in_tail(*g) {
                return bad(format!("{g} is not in S^({k})"));
            }
            if c.is_zero() {
                continue;
            }
            let m = g.mode.doubled();
            match g.family {
                Family::L if m >= 2 * (2 * k + 1) => return bad(format!("ψ({g}) must vanish for modes ≥ {}", 2 * k + 1)),
                Family::W if m >= 2 * (2 * k) => return bad(format!("ψ({g}) must vanish for modes ≥ {}", 2 * k)),
                Family::G => return bad(format!("ψ({g}) must vanish on odd generators")),
                _ => {}
            }
        }
        let mut modes: BTreeSet<i64> = (2 * k..=2 * (2 * k + 2)).collect();
        modes.extend(self.psi.keys().map(|g| g.mode.doubled()));
        let gens: Vec<Gen> = modes
            .iter()
            .flat_map(|&m| {
                if m % 2 == 0 {
                    alloc::vec![Gen::l(m / 2), Gen::w(m / 2)]
                } else {
                    alloc::vec![Gen::g2(m)]
                }
            })
            .filter(|g| self.in_tail(*g))
            .collect();
        for (a, &x) in gens.iter().enumerate() {
            for &y in &gens[a..] {
                let b = Preset::S.bracket_gens(x, y)?;
                let v = self.eval(&b);
                if !v.is_zero() {
                    return bad(format!("ψ([{x}, {y}]) = {v} ≠ 0"));
                }
            }
        }
        if self.value(Gen::w(2 * k - 1)).is_zero() {
            return bad(format!("ψ(W_{}) must be nonzero", 2 * k - 1));
        }
        Ok(())
    }
}

impl BaseAction for WhittakerData {
    fn dim(&self) -> usize {
        1
    }

    fn parity(&self, _: usize) -> Parity {
        self.parity
    }

    fn act(&self, g: Gen, i: usize) -> LinComb<usize> {
        LinComb::term(self.value(g), i)
    }

    fn central(&self, g: Gen) -> Rational {
        self.value(g)
    }
}

/// `U(S) ⊗_{U(S^{(k)})} ℂw`, viewed as `Ind_{T_1}(V′)` with `V′ = U(T_1) ⊗_{U(S^{(k)})} ℂw`,
/// `t = 2k − 1`, `d = 1`. `V′` is truncated to words of at most `inner_len` letters,
/// and (a), (b) are checked on that truncation.
pub fn build_whittaker(data: WhittakerData, bound2: i64, inner_len: usize) -> Result<InducedModule<WhittakerData>, RepError> {
    data.validate()?;
    let k = data.k;
    let t = 2 * k - 1;
    let mut m = InducedModule::new(Layout::whittaker(k), data, t, bound2, inner_len);
    let violations = whittaker_conditions(&m);
    m.set_violations(violations);
    Ok(m)
}

fn whittaker_conditions(m: &InducedModule<WhittakerData>) -> Vec<String> {
    let mut out = Vec::new();
    let (t, d) = (m.t() as i64, m.d() as i64);
    let basis = m.coefficient_basis();
    let mut span = Echelon::new();
    for b in &basis {
        let img = m.act_exact(Gen::w(t), &Element::basis(b.clone()));
        if !m.in_coefficient_part(&img) {
            out.push(format!("(a) W_{t}·{b} leaves V"));
        }
        span.insert(&img);
    }
    if span.rank() < basis.len() {
        out.push(format!("(a) W_{t} has rank {} < {} on V", span.rank(), basis.len()));
    }
    let top = t + d + m.inner_len() as i64 + 2;
    let mut killers: Vec<Gen> = (t + 1..=top).map(Gen::w).collect();
    killers.extend((t + d + 1..=top).map(Gen::l));
    killers.extend((t + 1..=top).map(|i| Gen::g2(2 * i - 1)));
    for g in killers {
        for b in &basis {
            if !m.act_exact(g, &Element::basis(b.clone())).is_zero() {
                out.push(format!("(b) {g}·{b} ≠ 0"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn psi1() -> WhittakerData {
        WhittakerData::new(1, int(0), int(0)).with(Gen::w(1), int(1))
    }

    #[test]
    fn k1_is_certified() {
        let m = build_whittaker(psi1(), 4, 2).unwrap();
        assert!(m.certified(), "{:?}", m.violations());
    }

    #[test]
    fn rejects_bad_data() {
        let e = |d: WhittakerData| matches!(d.validate(), Err(RepError::InvalidWhittakerData(_)));
        assert!(e(psi1().with(Gen::l(3), int(1))));
        assert!(e(psi1().with(Gen::w(2), int(1))));
        assert!(e(WhittakerData::new(1, int(1), int(1))));
        assert!(e(psi1().with(Gen::l(0), int(1))));
        assert!(e(psi1().with(Gen::g2(3), int(1))));
        assert!(psi1().with(Gen::l(2), int(5)).with(Gen::l(1), int(-1)).validate().is_ok());
    }

    #[test]
    fn k2_is_certified() {
        let d = WhittakerData::new(2, int(1), int(0)).with(Gen::w(3), int(2)).with(Gen::l(4), int(1));
        let m = build_whittaker(d, 2, 1).unwrap();
        assert!(m.certified(), "{:?}", m.violations());
    }
}
