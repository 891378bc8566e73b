//! Normal ordering in `U(S) ⊗_{U(H)} V` for an inducing subalgebra `H`.
//!
//! A monomial is a word in the letters of a complement of `H`, non-decreasing
//! in [`Layout::rank`] with no repeated odd letter, applied to a basis vector
//! of `V`. Left multiplication by a generator is computed by commuting it to
//! its place: letters of `H` travel to the right end and act on `V`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use num_traits::Zero;

use super::exponent::ExponentTriple;
use crate::algebra::{Family, Gen, Parity, Preset, SuperVector};
use crate::lincomb::LinComb;
use crate::scalar::{frac, int, Rational};

const ALG: Preset = Preset::S;

/// Order of families inside a PBW word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WordOrder {
    /// `W^i G^j L^k`.
    Wgl,
    /// `L^i W^j G^k`.
    Lwg,
}

/// Inducing subalgebra and letter order.
///
/// Without a tail the inducing subalgebra is `T_d`. With `tail = Some(k)` it is
/// `S^{(k)} = span{L_{≥k}, W_{≥k}, G_{≥k+½}}` plus the centre, and the letters of
/// `T_d ∖ S^{(k)}` come after the letters outside `T_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    pub d: u32,
    pub tail: Option<u32>,
    pub order: WordOrder,
}

/// `(group, family position, doubled mode)`.
pub type Rank = (u8, u8, i64);

impl Layout {
    pub fn td(d: u32) -> Self {
        Layout { d, tail: None, order: WordOrder::Wgl }
    }

    pub fn whittaker(k: u32) -> Self {
        Layout { d: 1, tail: Some(k), order: WordOrder::Wgl }
    }

    pub fn with_order(self, order: WordOrder) -> Self {
        Layout { order, ..self }
    }

    pub fn in_td(&self, g: Gen) -> bool {
        let m = g.mode.doubled();
        match g.family {
            Family::L => m >= 0,
            Family::W => m >= -2 * self.d as i64,
            Family::G => m >= 1,
            _ => true,
        }
    }

    pub fn in_inducing(&self, g: Gen) -> bool {
        match self.tail {
            None => self.in_td(g),
            Some(k) => {
                let (m, k) = (g.mode.doubled(), k as i64);
                match g.family {
                    Family::L | Family::W => m >= 2 * k,
                    Family::G => m > 2 * k,
                    _ => true,
                }
            }
        }
    }

    /// `None` for elements of the inducing subalgebra.
    pub fn rank(&self, g: Gen) -> Option<Rank> {
        if self.in_inducing(g) {
            return None;
        }
        let group = if self.in_td(g) { 1 } else { 0 };
        let pos = match (self.order, g.family) {
            (WordOrder::Wgl, Family::W) | (WordOrder::Lwg, Family::L) => 0,
            (WordOrder::Wgl, Family::G) | (WordOrder::Lwg, Family::W) => 1,
            _ => 2,
        };
        Some((group, pos, g.mode.doubled()))
    }

    /// Whether a letter lies outside `T_d` (it contributes to the exponent triple).
    pub fn is_outer(&self, g: Gen) -> bool {
        !self.in_td(g)
    }
}

/// A basis element `word ⊗ v_base`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub word: Vec<Gen>,
    pub base: usize,
}

impl Monomial {
    pub fn new(word: Vec<Gen>, base: usize) -> Self {
        Monomial { word, base }
    }

    pub fn vacuum(base: usize) -> Self {
        Monomial { word: Vec::new(), base }
    }

    /// Level of the letters outside `T_d`, in half-units.
    pub fn level2(&self, layout: &Layout) -> i64 {
        self.word.iter().filter(|g| layout.is_outer(**g)).map(|g| -g.mode.doubled()).sum()
    }

    /// Number of letters from `T_d ∖ H`.
    pub fn inner_len(&self, layout: &Layout) -> usize {
        self.word.iter().filter(|g| !layout.is_outer(**g)).count()
    }

    pub fn triple(&self, layout: &Layout) -> ExponentTriple {
        ExponentTriple::from_letters(layout.d, &self.word)
    }

    /// The part of the word inside `T_d`, with the base index: the coefficient key.
    pub fn inner(&self, layout: &Layout) -> Monomial {
        Monomial::new(self.word.iter().copied().filter(|g| !layout.is_outer(*g)).collect(), self.base)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.word {
            write!(f, "{}·", g)?;
        }
        write!(f, "v{}", self.base)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Element = LinComb<Monomial>;

/// The module the inducing subalgebra acts on.
pub trait BaseAction {
    fn dim(&self) -> usize;
    fn parity(&self, i: usize) -> Parity;
    /// Action of a non-central element of the inducing subalgebra on basis vector `i`.
    fn act(&self, g: Gen, i: usize) -> LinComb<usize>;
    /// Scalar by which a central element acts.
    fn central(&self, g: Gen) -> Rational;
}

fn parity(g: Gen) -> Parity {
    ALG.parity(g)
}

fn bracket(x: Gen, y: Gen) -> SuperVector {
    ALG.bracket_gens(x, y).expect("generators of S")
}

/// Memoized left multiplication.
pub struct Straightener<B> {
    layout: Layout,
    base: B,
    memo: RefCell<BTreeMap<(Gen, Monomial), Element>>,
}

impl<B: BaseAction> Straightener<B> {
    pub fn new(layout: Layout, base: B) -> Self {
        Straightener { layout, base, memo: RefCell::new(BTreeMap::new()) }
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    /// Whether `g` is a letter (not in the inducing subalgebra, not central).
    pub fn is_letter(&self, g: Gen) -> bool {
        !g.is_central() && self.layout.rank(g).is_some()
    }

    /// Whether a word is in normal form.
    pub fn is_normal(&self, word: &[Gen]) -> bool {
        let mut prev: Option<Rank> = None;
        for &g in word {
            let Some(r) = (!g.is_central()).then(|| self.layout.rank(g)).flatten() else { return false };
            if let Some(p) = prev {
                if r < p || (r == p && parity(g).is_odd()) {
                    return false;
                }
            }
            prev = Some(r);
        }
        true
    }

    /// `x · m`.
    pub fn mul_gen(&self, x: Gen, m: &Monomial) -> Element {
        if x.is_central() {
            return Element::term(self.base.central(x), m.clone());
        }
        let key = (x, m.clone());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let out = self.mul_gen_uncached(x, m);
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn mul_gen_uncached(&self, x: Gen, m: &Monomial) -> Element {
        let rx = self.layout.rank(x);
        let Some(&y) = m.word.first() else {
            return match rx {
                None => self.base.act(x, m.base).iter().map(|(i, c)| (c.clone(), Monomial::vacuum(*i))).collect(),
                Some(_) => Element::basis(Monomial::new(vec![x], m.base)),
            };
        };
        let ry = self.layout.rank(y).expect("normal words hold letters only");
        let rest = Monomial::new(m.word[1..].to_vec(), m.base);
        if let Some(rx) = rx {
            if rx < ry || (x == y && !parity(x).is_odd()) {
                let mut word = Vec::with_capacity(m.word.len() + 1);
                word.push(x);
                word.extend_from_slice(&m.word);
                return Element::basis(Monomial::new(word, m.base));
            }
            if x == y {
                // x² = ½[x, x] for odd x
                return self.mul_vec(&bracket(x, x).scaled(&frac(1, 2)), &rest);
            }
        }
        let sign = int(parity(x).koszul(parity(y)));
        let mut out = Element::zero();
        for (mono, c) in self.mul_gen(x, &rest).iter() {
            out.add_scaled(&(&sign * c), &self.mul_gen(y, mono));
        }
        out.add_assign(&self.mul_vec(&bracket(x, y), &rest));
        out
    }

    pub fn mul_vec(&self, v: &SuperVector, m: &Monomial) -> Element {
        let mut out = Element::zero();
        for (g, c) in v.iter() {
            out.add_scaled(c, &self.mul_gen(*g, m));
        }
        out
    }

    /// `x · e`.
    pub fn act(&self, x: Gen, e: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in e.iter() {
            out.add_scaled(c, &self.mul_gen(x, m));
        }
        out
    }

    pub fn act_vec(&self, v: &SuperVector, e: &Element) -> Element {
        let mut out = Element::zero();
        for (g, c) in v.iter() {
            out.add_scaled(c, &self.act(*g, e));
        }
        out
    }

    /// `g₁ g₂ ⋯ g_n · e` (rightmost letter first).
    pub fn act_word(&self, word: &[Gen], e: &Element) -> Element {
        word.iter().rev().fold(e.clone(), |acc, g| self.act(*g, &acc))
    }

    /// Normal form of an arbitrary word applied to `v_base`, by repeatedly
    /// rewriting one violation chosen by `choose(n)` among the `n` present.
    /// Independent of [`Self::mul_gen`] and its memo.
    pub fn normal_order(&self, word: &[Gen], base: usize, choose: &mut dyn FnMut(usize) -> usize) -> Element {
        let mut out = Element::zero();
        let mut work: Vec<(Rational, Vec<Gen>, usize)> = vec![(int(1), word.to_vec(), base)];
        let mut steps = 0usize;
        while let Some((c, mut w, b)) = work.pop() {
            steps += 1;
            assert!(steps < 10_000_000, "normal ordering did not terminate");
            if c.is_zero() {
                continue;
            }
            if let Some(pos) = w.iter().position(|g| g.is_central()) {
                let z = w.remove(pos);
                work.push((c * self.base.central(z), w, b));
                continue;
            }
            let rank = |g: Gen| self.layout.rank(g);
            let mut violations: Vec<Violation> = Vec::new();
            for i in 0..w.len().saturating_sub(1) {
                match (rank(w[i]), rank(w[i + 1])) {
                    (None, Some(_)) => violations.push(Violation::Swap(i)),
                    (Some(a), Some(b)) if a > b => violations.push(Violation::Swap(i)),
                    (Some(_), Some(_)) if w[i] == w[i + 1] && parity(w[i]).is_odd() => violations.push(Violation::Square(i)),
                    _ => {}
                }
            }
            if let Some(&last) = w.last() {
                if rank(last).is_none() {
                    violations.push(Violation::Act);
                }
            }
            if violations.is_empty() {
                out.add_term(c, Monomial::new(w, b));
                continue;
            }
            match violations[choose(violations.len())] {
                Violation::Swap(i) => {
                    let (x, y) = (w[i], w[i + 1]);
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    work.push((&c * int(parity(x).koszul(parity(y))), swapped, b));
                    for (g, k) in bracket(x, y).iter() {
                        let mut nw = w[..i].to_vec();
                        nw.push(*g);
                        nw.extend_from_slice(&w[i + 2..]);
                        work.push((&c * k, nw, b));
                    }
                }
                Violation::Square(i) => {
                    let x = w[i];
                    for (g, k) in bracket(x, x).iter() {
                        let mut nw = w[..i].to_vec();
                        nw.push(*g);
                        nw.extend_from_slice(&w[i + 2..]);
                        work.push((&c * k * frac(1, 2), nw, b));
                    }
                }
                Violation::Act => {
                    let h = w.pop().expect("nonempty");
                    for (j, k) in self.base.act(h, b).iter() {
                        work.push((&c * k, w.clone(), *j));
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Violation {
    Swap(usize),
    Square(usize),
    Act,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Mode;

    /// One-dimensional module: `L_0 = h1`, `W_0 = h2`, everything else zero.
    struct Highest {
        h1: Rational,
        h2: Rational,
        c1: Rational,
        c2: Rational,
    }

    impl BaseAction for Highest {
        fn dim(&self) -> usize {
            1
        }
        fn parity(&self, _: usize) -> Parity {
            Parity::Even
        }
        fn act(&self, g: Gen, i: usize) -> LinComb<usize> {
            if g == Gen::l(0) {
                LinComb::term(self.h1.clone(), i)
            } else if g == Gen::w(0) {
                LinComb::term(self.h2.clone(), i)
            } else {
                LinComb::zero()
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

    fn verma(c2: i64) -> Straightener<Highest> {
        Straightener::new(Layout::td(0), Highest { h1: int(3), h2: int(5), c1: int(7), c2: int(c2) })
    }

    fn vac() -> Monomial {
        Monomial::vacuum(0)
    }

    #[test]
    fn l0_eigenvalue() {
        let s = verma(0);
        let v = s.mul_gen(Gen::l(-1), &vac());
        let r = s.act(Gen::l(0), &v);
        assert_eq!(r, v.scaled(&int(2)));
    }

    #[test]
    fn odd_square() {
        let s = verma(0);
        let v = s.mul_gen(Gen::g2(-1), &vac());
        let r = s.act(Gen::g2(-1), &v);
        assert_eq!(r, Element::term(frac(-1, 2), Monomial::new(vec![Gen::w(-1)], 0)));
    }

    #[test]
    fn g_half_on_g_minus_half() {
        for c2 in [0, 4] {
            let s = verma(c2);
            let v = s.mul_gen(Gen::g2(-1), &vac());
            let r = s.act(Gen::g2(1), &v);
            assert_eq!(r, Element::term(int(c2), vac()));
        }
    }

    #[test]
    fn central_scalars() {
        let s = verma(0);
        let v = s.mul_gen(Gen::l(-2), &vac());
        assert_eq!(s.act(Gen::C1, &v), v.scaled(&int(7)));
    }

    #[test]
    fn ordering_respects_layout() {
        let s = verma(0);
        let v = s.act_word(&[Gen::l(-1), Gen::w(-2)], &Element::basis(vac()));
        // L_{-1} W_{-2} = W_{-2} L_{-1} + [L_{-1}, W_{-2}] = W_{-2} L_{-1} − 3 W_{-3}
        let mut exp = Element::basis(Monomial::new(vec![Gen::w(-2), Gen::l(-1)], 0));
        exp.add_term(int(-3), Monomial::new(vec![Gen::w(-3)], 0));
        assert_eq!(v, exp);
        assert!(s.is_normal(&[Gen::w(-2), Gen::g2(-3), Gen::g2(-1), Gen::l(-2), Gen::l(-1), Gen::l(-1)]));
        assert!(!s.is_normal(&[Gen::g2(-1), Gen::g2(-1)]));
        assert!(!s.is_normal(&[Gen::l(-1), Gen::w(-1)]));
    }

    #[test]
    fn schedules_agree() {
        let s = verma(0);
        let word = [Gen::l(2), Gen::g2(1), Gen::l(-1), Gen::g2(-3), Gen::w(-1), Gen::l(-2), Gen::g2(-1)];
        let left = s.normal_order(&word, 0, &mut |_| 0);
        let right = s.normal_order(&word, 0, &mut |n| n - 1);
        let memo = s.act_word(&word, &Element::basis(vac()));
        assert_eq!(left, right);
        assert_eq!(left, memo);
        assert!(!memo.is_zero());
    }

    #[test]
    fn whittaker_layout_ranks() {
        let l = Layout::whittaker(1);
        assert!(l.rank(Gen::l(1)).is_none());
        assert!(l.rank(Gen::w(1)).is_none());
        assert!(l.rank(Gen::g2(3)).is_none());
        assert_eq!(l.rank(Gen::g2(1)).map(|r| r.0), Some(1));
        assert_eq!(l.rank(Gen::w(-1)).map(|r| r.0), Some(1));
        assert_eq!(l.rank(Gen::w(-2)).map(|r| r.0), Some(0));
        assert_eq!(l.rank(Gen::l(-1)).map(|r| r.0), Some(0));
        assert!(Layout::td(0).rank(Gen::new(Family::L, Mode::ZERO)).is_none());
    }
}
