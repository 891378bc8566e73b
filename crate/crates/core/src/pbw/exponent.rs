//! Exponent vectors `i = (…, i₂, i₁)`, their weights, and the orders used to
//! define the degree of an element of an induced module.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::algebra::{Family, Gen};

/// Finitely supported `(…, i₂, i₁)`; `entries[s−1] = i_s`, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_entries(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        ExponentVector { entries }
    }

    /// `e_s`.
    pub fn unit(s: usize) -> Self {
        let mut v = Self::zero();
        v.add(s, 1);
        v
    }

    pub fn get(&self, s: usize) -> u32 {
        if s == 0 {
            return 0;
        }
        self.entries.get(s - 1).copied().unwrap_or(0)
    }

    pub fn add(&mut self, s: usize, by: u32) {
        assert!(s >= 1, "positions start at 1");
        if self.entries.len() < s {
            self.entries.resize(s, 0);
        }
        self.entries[s - 1] += by;
        *self = Self::from_entries(core::mem::take(&mut self.entries));
    }

    fn dec(&self, s: usize) -> Self {
        let mut e = self.entries.clone();
        e[s - 1] -= 1;
        Self::from_entries(e)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero positions with their exponents, increasing in position.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.entries.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i + 1, e))
    }

    /// `w(i) = Σ s·i_s`.
    pub fn weight(&self) -> u64 {
        self.support().map(|(s, e)| s as u64 * e as u64).sum()
    }

    /// `d(i) = Σ i_s`.
    pub fn degree_count(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }

    /// Largest `p` with `i_p ≠ 0`.
    pub fn max_index(&self) -> Option<usize> {
        (!self.is_zero()).then_some(self.entries.len())
    }

    /// Smallest `q` with `i_q ≠ 0`.
    pub fn min_index(&self) -> Option<usize> {
        self.support().next().map(|(s, _)| s)
    }

    /// `i′ = i − e_p`.
    pub fn without_max(&self) -> Option<Self> {
        self.max_index().map(|p| self.dec(p))
    }

    /// `i″ = i − e_q`.
    pub fn without_min(&self) -> Option<Self> {
        self.min_index().map(|q| self.dec(q))
    }

    /// Lexicographic order `>`: the highest differing position decides.
    pub fn lex_cmp(&self, o: &Self) -> Ordering {
        let n = self.entries.len().max(o.entries.len());
        for s in (1..=n).rev() {
            match self.get(s).cmp(&o.get(s)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Reverse lexicographic order `≻`: the lowest differing position decides.
    pub fn revlex_cmp(&self, o: &Self) -> Ordering {
        let n = self.entries.len().max(o.entries.len());
        for s in 1..=n {
            match self.get(s).cmp(&o.get(s)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// `(i, w(i)) ≻ (j, w(j))`: weight first, then `≻`.
    pub fn weighted_revlex_cmp(&self, o: &Self) -> Ordering {
        self.weight().cmp(&o.weight()).then_with(|| self.revlex_cmp(o))
    }
}

pub fn lex_greater(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.lex_cmp(b) == Ordering::Greater
}

pub fn revlex_greater(a: &ExponentVector, b: &ExponentVector) -> bool {
    a.revlex_cmp(b) == Ordering::Greater
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `(i, j, k)` indexing `W^i G^j L^k`; `j` is binary.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExponentTriple {
    pub i: ExponentVector,
    pub j: ExponentVector,
    pub k: ExponentVector,
}

impl ExponentTriple {
    pub fn new(i: ExponentVector, j: ExponentVector, k: ExponentVector) -> Option<Self> {
        j.is_binary().then_some(ExponentTriple { i, j, k })
    }

    pub fn is_zero(&self) -> bool {
        self.i.is_zero() && self.j.is_zero() && self.k.is_zero()
    }

    /// Principal order: `(k, w(k))`, then `(j, w(j))` by `≻`, then `i` by `>`.
    pub fn principal_cmp(&self, o: &Self) -> Ordering {
        self.k
            .weighted_revlex_cmp(&o.k)
            .then_with(|| self.j.weighted_revlex_cmp(&o.j))
            .then_with(|| self.i.lex_cmp(&o.i))
    }

    /// Level of `W^i G^j L^k` over `T_d`, in half-units.
    pub fn level2(&self, d: u32) -> i64 {
        let wi: i64 = self.i.support().map(|(s, e)| 2 * (s as i64 + d as i64) * e as i64).sum();
        let wj: i64 = self.j.support().map(|(s, e)| (2 * s as i64 - 1) * e as i64).sum();
        let wk: i64 = self.k.support().map(|(s, e)| 2 * s as i64 * e as i64).sum();
        wi + wj + wk
    }

    /// `⋯W_{−d−2}^{i₂}W_{−d−1}^{i₁} ⋯G_{−3/2}^{j₂}G_{−1/2}^{j₁} ⋯L_{−2}^{k₂}L_{−1}^{k₁}`.
    pub fn to_word(&self, d: u32) -> Vec<Gen> {
        let mut w = Vec::new();
        let mut push = |v: &ExponentVector, gen: &dyn Fn(usize) -> Gen| {
            for s in (1..=v.max_index().unwrap_or(0)).rev() {
                for _ in 0..v.get(s) {
                    w.push(gen(s));
                }
            }
        };
        push(&self.i, &|s| Gen::w(-(d as i64) - s as i64));
        push(&self.j, &|s| Gen::g2(1 - 2 * s as i64));
        push(&self.k, &|s| Gen::l(-(s as i64)));
        w
    }

    /// Counts the letters of `T_d`'s complement in a word; other letters are ignored.
    pub fn from_letters(d: u32, word: &[Gen]) -> Self {
        let mut t = ExponentTriple::default();
        for g in word {
            if let Some((which, s)) = complement_position(d, *g) {
                match which {
                    Family::W => t.i.add(s, 1),
                    Family::G => t.j.add(s, 1),
                    _ => t.k.add(s, 1),
                }
            }
        }
        t
    }
}

/// Position `s` of a letter outside `T_d`: `W_{−d−s}`, `G_{½−s}`, `L_{−s}`.
pub fn complement_position(d: u32, g: Gen) -> Option<(Family, usize)> {
    let m = g.mode.doubled();
    let s = match g.family {
        Family::W => -m / 2 - d as i64,
        Family::G => (1 - m) / 2,
        Family::L => -m / 2,
        _ => return None,
    };
    let ok = match g.family {
        Family::G => !g.mode.is_integral(),
        _ => g.mode.is_integral(),
    };
    (ok && s >= 1).then_some((g.family, s as usize))
}

impl PartialOrd for ExponentTriple {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// The principal total order.
impl Ord for ExponentTriple {
    fn cmp(&self, o: &Self) -> Ordering {
        self.principal_cmp(o)
    }
}

pub fn principal_greater(a: &ExponentTriple, b: &ExponentTriple) -> bool {
    a.principal_cmp(b) == Ordering::Greater
}

impl fmt::Debug for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.i, self.j, self.k)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Level (−Σ modes) of a list of letters, in half-units.
pub fn word_level2(word: &[Gen]) -> i64 {
    word.iter().map(|g| -g.mode.doubled()).sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[u32]) -> ExponentVector {
        // e given as (…, i₂, i₁), highest index first
        let mut v: Vec<u32> = e.to_vec();
        v.reverse();
        ExponentVector::from_entries(v)
    }

    #[test]
    fn weights() {
        let i = ev(&[1, 0, 2]);
        assert_eq!(i.weight(), 5);
        assert_eq!(i.degree_count(), 3);
        assert_eq!(ExponentVector::zero().weight(), 0);
        assert_eq!(ExponentVector::unit(3).without_max(), Some(ExponentVector::zero()));
        assert_eq!(i.without_min(), Some(ev(&[1, 0, 1])));
        assert_eq!(i.without_max(), Some(ev(&[2])));
    }

    #[test]
    fn orders() {
        assert!(lex_greater(&ExponentVector::unit(2), &ExponentVector::unit(1)));
        let j = ev(&[1, 1]);
        let i = ev(&[2, 0]);
        assert!(revlex_greater(&j, &i));
        assert!(!lex_greater(&j, &i));
        assert!(!lex_greater(&i, &i) && !revlex_greater(&i, &i));
    }

    #[test]
    fn principal_clauses() {
        let z = ExponentVector::zero;
        let a = ExponentTriple::new(z(), z(), ExponentVector::unit(1)).unwrap();
        let b = ExponentTriple::new(z(), z(), z()).unwrap();
        assert!(principal_greater(&a, &b));
        let c = ExponentTriple::new(z(), ExponentVector::unit(2), z()).unwrap();
        let d = ExponentTriple::new(z(), ExponentVector::unit(1), z()).unwrap();
        assert!(principal_greater(&c, &d));
        assert!(!principal_greater(&c, &c));
        assert!(ExponentTriple::new(z(), ev(&[2]), z()).is_none());
    }

    #[test]
    fn word_round_trip() {
        let t = ExponentTriple::new(ev(&[1, 2]), ev(&[1, 0, 1]), ev(&[3])).unwrap();
        let w = t.to_word(1);
        assert_eq!(w[0], Gen::w(-3));
        assert_eq!(w[1], Gen::w(-2));
        assert_eq!(w[3], Gen::g2(-5));
        assert_eq!(w[4], Gen::g2(-1));
        assert_eq!(ExponentTriple::from_letters(1, &w), t);
        assert_eq!(t.level2(1), word_level2(&w));
        assert_eq!(w.len(), 3 + 2 + 3);
    }
}
