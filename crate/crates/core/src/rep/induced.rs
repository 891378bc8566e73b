//! Induced modules `U(S) ⊗_{U(H)} V`, truncated by level.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::module::{validate_module, FiniteModule};
use super::quotient::QuotientAlgebra;
use crate::algebra::{Family, Gen, Parity, Preset};
use crate::error::RepError;
use crate::linalg::{kernel, Echelon};
use crate::lincomb::LinComb;
use crate::pbw::{BaseAction, Element, ExponentTriple, Layout, Monomial, Straightener};
use crate::scalar::{int, Rational};

/// An induced module with its truncation: `bound2` caps the level (half-units) of
/// the letters outside `T_d`, `inner_len` caps the number of letters from `T_d ∖ H`.
pub struct InducedModule<B> {
    st: Straightener<B>,
    t: u32,
    bound2: i64,
    inner_len: usize,
    violations: Vec<String>,
}

impl<B: BaseAction> InducedModule<B> {
    /// No conditions are checked; see [`build_induced`] and the Whittaker builder.
    pub fn new(layout: Layout, base: B, t: u32, bound2: i64, inner_len: usize) -> Self {
        InducedModule { st: Straightener::new(layout, base), t, bound2, inner_len, violations: Vec::new() }
    }

    pub(crate) fn set_violations(&mut self, v: Vec<String>) {
        self.violations = v;
    }

    pub fn layout(&self) -> &Layout {
        self.st.layout()
    }

    pub fn d(&self) -> u32 {
        self.st.layout().d
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn bound2(&self) -> i64 {
        self.bound2
    }

    pub fn inner_len(&self) -> usize {
        self.inner_len
    }

    pub fn base(&self) -> &B {
        self.st.base()
    }

    pub fn straightener(&self) -> &Straightener<B> {
        &self.st
    }

    /// Conditions (a) and (b) that failed on the coefficient module.
    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    pub fn certified(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn require_certified(&self) -> Result<(), RepError> {
        match self.violations.first() {
            None => Ok(()),
            Some(v) => Err(RepError::ConditionViolation(v.clone())),
        }
    }

    /// Letters outside `T_d` of level at most `max2`, in word order.
    pub fn outer_letters(&self, max2: i64) -> Vec<Gen> {
        let d = self.d() as i64;
        let mut v: Vec<Gen> = Vec::new();
        v.extend((d + 1..).take_while(|s| 2 * s <= max2).map(|s| Gen::w(-s)));
        v.extend((1..).take_while(|s| 2 * s - 1 <= max2).map(|s| Gen::g2(1 - 2 * s)));
        v.extend((1..).take_while(|s| 2 * s <= max2).map(|s| Gen::l(-s)));
        self.sorted(v)
    }

    /// Letters of `T_d ∖ H`, in word order.
    pub fn inner_letters(&self) -> Vec<Gen> {
        let Some(k) = self.layout().tail else { return Vec::new() };
        let (k, d) = (k as i64, self.d() as i64);
        let mut v: Vec<Gen> = (0..k).map(Gen::l).collect();
        v.extend((-d..k).map(Gen::w));
        v.extend((1..=k).map(|i| Gen::g2(2 * i - 1)));
        self.sorted(v)
    }

    fn sorted(&self, mut v: Vec<Gen>) -> Vec<Gen> {
        let l = *self.layout();
        v.sort_by_key(|g| l.rank(*g));
        v
    }

    /// Normal words of outer letters with level exactly `level2`.
    pub fn outer_words(&self, level2: i64) -> Vec<Vec<Gen>> {
        let letters = self.outer_letters(level2);
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(letters: &[Gen], from: usize, left: i64, cur: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for a in from..letters.len() {
                let g = letters[a];
                let w = -g.mode.doubled();
                if w > left {
                    continue;
                }
                cur.push(g);
                let next = if Preset::S.parity(g).is_odd() { a + 1 } else { a };
                rec(letters, next, left - w, cur, out);
                cur.pop();
            }
        }
        rec(&letters, 0, level2, &mut cur, &mut out);
        out
    }

    /// Normal words of inner letters of length at most `inner_len`.
    pub fn inner_words(&self) -> Vec<Vec<Gen>> {
        let letters = self.inner_letters();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(letters: &[Gen], from: usize, left: usize, cur: &mut Vec<Gen>, out: &mut Vec<Vec<Gen>>) {
            out.push(cur.clone());
            if left == 0 {
                return;
            }
            for a in from..letters.len() {
                let g = letters[a];
                cur.push(g);
                let next = if Preset::S.parity(g).is_odd() { a + 1 } else { a };
                rec(letters, next, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(&letters, 0, self.inner_len, &mut cur, &mut out);
        out
    }

    /// Basis of the truncated coefficient space `1 ⊗ V`.
    pub fn coefficient_basis(&self) -> Vec<Monomial> {
        self.level_basis(0)
    }

    pub fn level_basis(&self, level2: i64) -> Vec<Monomial> {
        let inner = self.inner_words();
        let mut out = Vec::new();
        for o in self.outer_words(level2) {
            for i in &inner {
                for b in 0..self.base().dim() {
                    let mut w = o.clone();
                    w.extend_from_slice(i);
                    out.push(Monomial::new(w, b));
                }
            }
        }
        out
    }

    /// Basis of every level up to the bound.
    pub fn basis(&self) -> Vec<Monomial> {
        (0..=self.bound2).flat_map(|n| self.level_basis(n)).collect()
    }

    /// Dimension at each level `0, ½, 1, …` up to the bound.
    pub fn level_dims(&self) -> Vec<usize> {
        (0..=self.bound2).map(|n| self.level_basis(n).len()).collect()
    }

    /// Exact image, regardless of the truncation.
    pub fn act_exact(&self, g: Gen, e: &Element) -> Element {
        self.st.act(g, e)
    }

    /// Image, failing if it leaves the truncation.
    pub fn act(&self, g: Gen, e: &Element) -> Result<Element, RepError> {
        let out = self.st.act(g, e);
        self.check_bound(&out)?;
        Ok(out)
    }

    pub fn check_bound(&self, e: &Element) -> Result<(), RepError> {
        let l = self.layout();
        for m in e.keys() {
            let level = m.level2(l);
            if level > self.bound2 {
                return Err(RepError::BoundExceeded { level, bound: self.bound2 });
            }
            if m.inner_len(l) > self.inner_len {
                return Err(RepError::BoundExceeded { level, bound: self.bound2 });
            }
        }
        Ok(())
    }

    /// Highest exponent triple under the principal order; `None` for zero.
    pub fn deg(&self, e: &Element) -> Option<ExponentTriple> {
        e.keys().map(|m| m.triple(self.layout())).max()
    }

    /// Whether `e` lies in `1 ⊗ V`.
    pub fn in_coefficient_part(&self, e: &Element) -> bool {
        let l = *self.layout();
        e.keys().all(|m| m.word.iter().all(|g| !l.is_outer(*g)))
    }

    /// Parity of a monomial.
    pub fn parity(&self, m: &Monomial) -> Parity {
        m.word.iter().fold(self.base().parity(m.base), |p, g| p + Preset::S.parity(*g))
    }

    /// Generators of `S_+` (positive modes) with mode at most `max`.
    pub fn positive_generators(max: i64) -> Vec<Gen> {
        let mut v: Vec<Gen> = (1..=max).map(Gen::l).collect();
        v.extend((1..=max).map(Gen::w));
        v.extend((1..=max).map(|i| Gen::g2(2 * i - 1)));
        v
    }

    /// Past this mode, positive generators kill every vector of level `≤ level2`.
    pub fn annihilation_limit(&self, level2: i64) -> i64 {
        (level2 + 1) / 2 + self.t as i64 + self.d() as i64 + 2
    }

    /// Basis of `{u ∈ M_{level} : S_+ u = 0}` as elements of the module.
    pub fn singular_vectors(&self, level2: i64) -> Vec<Element> {
        let basis = self.level_basis(level2);
        let gens = Self::positive_generators(self.annihilation_limit(level2));
        let images: Vec<LinComb<(usize, Monomial)>> = basis
            .iter()
            .map(|b| {
                let e = Element::basis(b.clone());
                let mut stacked = LinComb::zero();
                for (a, g) in gens.iter().enumerate() {
                    for (m, c) in self.act_exact(*g, &e).iter() {
                        stacked.add_term(c.clone(), (a, m.clone()));
                    }
                }
                stacked
            })
            .collect();
        combine(&basis, &kernel(&images))
    }

    /// Dimensions per level of the submodule generated by homogeneous `seeds`,
    /// closed under generators with `|mode|` up to the annihilation limit and cut
    /// at the bound. Only meaningful for graded modules (no tail).
    pub fn generated_submodule_dims(&self, seeds: &[Element]) -> Vec<usize> {
        let l = *self.layout();
        let limit = self.annihilation_limit(self.bound2);
        let mut gens: Vec<Gen> = Self::positive_generators(limit);
        gens.extend((0..=limit).flat_map(|m| [Gen::l(-m), Gen::w(-m)]));
        gens.extend((0..limit).map(|i| Gen::g2(-2 * i - 1)));
        let mut spans: BTreeMap<i64, Echelon<Monomial>> = BTreeMap::new();
        let mut queue: Vec<Element> = Vec::new();
        let push = |e: &Element, spans: &mut BTreeMap<i64, Echelon<Monomial>>, queue: &mut Vec<Element>| {
            let mut parts: BTreeMap<i64, Element> = BTreeMap::new();
            for (m, c) in e.iter() {
                parts.entry(m.level2(&l)).or_default().add_term(c.clone(), m.clone());
            }
            for (lv, p) in parts {
                if lv <= self.bound2 && spans.entry(lv).or_default().insert(&p) {
                    queue.push(p);
                }
            }
        };
        for s in seeds {
            push(s, &mut spans, &mut queue);
        }
        while let Some(e) = queue.pop() {
            for g in &gens {
                let img = self.act_exact(*g, &e);
                push(&img, &mut spans, &mut queue);
            }
        }
        (0..=self.bound2).map(|n| spans.get(&n).map_or(0, |e| e.rank())).collect()
    }
}

pub(crate) fn combine(basis: &[Monomial], ker: &[LinComb<usize>]) -> Vec<Element> {
    ker.iter().map(|k| k.iter().map(|(j, c)| (c.clone(), basis[*j].clone())).collect()).collect()
}

/// `Ind(V) = U(S) ⊗_{U(T_d)} V`. Fails only when `V` is not a `q^{(d,t)}`-module;
/// failures of (a) or (b) are recorded and leave the module uncertified.
pub fn build_induced(v: FiniteModule, d: u32, t: u32, bound2: i64) -> Result<InducedModule<FiniteModule>, RepError> {
    let q = QuotientAlgebra::new(d, t);
    let report = validate_module(&v, &q);
    if !report.passed() {
        let w = report.witnesses.first().map(|w| format!("{:?}: expected {}, found {}", w.inputs, w.expected, w.found));
        return Err(RepError::NonModuleAction(w.unwrap_or_default()));
    }
    let violations = conditions(&v, d, t);
    let mut m = InducedModule::new(Layout::td(d), v, t, bound2, 0);
    m.set_violations(violations);
    Ok(m)
}

/// Conditions (a) and (b) on a finite coefficient module.
pub fn conditions(v: &FiniteModule, d: u32, t: u32) -> Vec<String> {
    let mut out = Vec::new();
    if t > 0 {
        let r = v.matrix(Gen::w(t as i64)).rank();
        if r < v.dim {
            out.push(format!("(a) W_{t} has rank {r} < dim V = {}", v.dim));
        }
    } else if v.c2 == int(0) {
        out.push("(a) c2 = 0 with t = 0".into());
    }
    for (g, m) in &v.actions {
        let beyond = match g.family {
            Family::W => g.mode.doubled() > 2 * t as i64,
            Family::L => g.mode.doubled() > 2 * (t + d) as i64,
            _ => false,
        };
        if beyond && !m.is_zero() {
            out.push(format!("(b) {g} acts nontrivially"));
        }
    }
    out
}

/// Verma module `M(h1, h2, c1)`: induced from `ℂv` with `L_0 = h1`, `W_0 = h2`, `C2 = 0`.
pub fn verma(h1: Rational, h2: Rational, c1: Rational, bound2: i64) -> InducedModule<FiniteModule> {
    build_induced(FiniteModule::one_dim(h1, h2, c1, int(0)), 0, 0, bound2).expect("one-dimensional S_0-module")
}

/// Highest-weight vector `1 ⊗ v` of a Verma module.
pub fn vacuum() -> Element {
    Element::basis(Monomial::vacuum(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::scalar::frac;

    #[test]
    fn verma_level_dims() {
        let m = verma(int(0), int(0), int(0), 4);
        assert_eq!(m.level_dims(), vec![1, 1, 2, 3, 6]);
        assert!(!m.certified());
    }

    #[test]
    fn zero_bound_is_v() {
        let v = FiniteModule::trivial(2);
        let m = build_induced(v, 1, 0, 0).unwrap();
        assert_eq!(m.basis().len(), 2);
    }

    #[test]
    fn singular_at_half() {
        let m = verma(frac(3, 2), int(-1), int(2), 2);
        let s = m.singular_vectors(1);
        assert_eq!(s.len(), 1);
        let g = Element::basis(Monomial::new(vec![Gen::g2(-1)], 0));
        assert!(crate::linalg::same_span(&s, core::slice::from_ref(&g)));
        assert_eq!(m.act_exact(Gen::l(0), &g), g.scaled(&int(1)));
        assert_eq!(m.singular_vectors(0).len(), 1);
    }

    #[test]
    fn generated_submodule_is_proper() {
        let m = verma(int(2), int(1), int(0), 4);
        let g = Element::basis(Monomial::new(vec![Gen::g2(-1)], 0));
        let dims = m.generated_submodule_dims(&[g]);
        assert_eq!(dims[0], 0);
        assert_eq!(dims[1], 1);
    }

    #[test]
    fn non_module_rejected() {
        let bad = FiniteModule::one_dim(int(0), int(1), int(0), int(1));
        assert!(matches!(build_induced(bad, 0, 0, 2), Err(RepError::NonModuleAction(_))));
    }

    #[test]
    fn bounded_action() {
        let m = verma(int(0), int(0), int(0), 2);
        let v = vacuum();
        let a = m.act(Gen::l(-1), &v).unwrap();
        assert!(matches!(m.act(Gen::l(-1), &a), Err(RepError::BoundExceeded { .. })));
        assert!(m.act(Gen::l(1), &a).is_ok());
    }
}
