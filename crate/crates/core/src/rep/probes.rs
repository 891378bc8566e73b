//! Degree reduction, simplicity, top-space and restrictedness probes.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::induced::{combine, InducedModule};
use crate::algebra::Gen;
use crate::error::RepError;
use crate::linalg::kernel;
use crate::lincomb::LinComb;
use crate::pbw::{BaseAction, Element, ExponentTriple, ExponentVector, Monomial};
use crate::report::CheckReport;
use crate::scalar::int;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim1Case {
    /// `k ≠ 0`: apply `W_{k̂+t}`.
    W,
    /// `k = 0`, `j ≠ 0`: apply `G_{ĵ+t−½}`.
    G,
    /// `k = j = 0`: apply `L_{ǐ+t+d}`.
    L,
}

#[derive(Clone, Debug)]
pub struct Claim1Step {
    pub case: Claim1Case,
    pub gen: Gen,
    pub before: ExponentTriple,
    pub expected: ExponentTriple,
    pub image: Element,
}

/// One reduction step; fails unless `deg(image)` is exactly the claimed triple.
pub fn claim1_reduce<B: BaseAction>(m: &InducedModule<B>, v: &Element) -> Result<Claim1Step, RepError> {
    if v.is_zero() {
        return Err(RepError::DegenerateInput("zero vector".into()));
    }
    if m.in_coefficient_part(v) {
        return Err(RepError::DegenerateInput("vector lies in 1 ⊗ V".into()));
    }
    m.require_certified()?;
    let before = m.deg(v).expect("nonzero");
    let (t, d) = (m.t() as i64, m.d() as i64);
    let ExponentTriple { i, j, k } = before.clone();
    let (case, gen, expected) = if let Some(kh) = k.min_index() {
        let k2 = k.without_min().expect("nonzero");
        (Claim1Case::W, Gen::w(kh as i64 + t), ExponentTriple { i, j, k: k2 })
    } else if let Some(jh) = j.min_index() {
        let j2 = j.without_min().expect("nonzero");
        (Claim1Case::G, Gen::g2(2 * (jh as i64 + t) - 1), ExponentTriple { i, j: j2, k: ExponentVector::zero() })
    } else {
        let ic = i.max_index().expect("outside 1 ⊗ V");
        let i2 = i.without_max().expect("nonzero");
        let z = ExponentVector::zero;
        (Claim1Case::L, Gen::l(ic as i64 + t + d), ExponentTriple { i: i2, j: z(), k: z() })
    };
    let image = m.act_exact(gen, v);
    let found = m.deg(&image);
    if found.as_ref() != Some(&expected) {
        return Err(RepError::ConditionViolation(format!("deg({gen}·v) = {found:?}, expected {expected} (deg v = {before})")));
    }
    Ok(Claim1Step { case, gen, before, expected, image })
}

fn letters(t: &ExponentTriple) -> u64 {
    t.i.degree_count() + t.j.degree_count() + t.k.degree_count()
}

/// A random nonzero combination of up to three basis monomials.
pub fn random_vector<R: Rng>(basis: &[Monomial], rng: &mut R) -> Element {
    loop {
        let mut e = Element::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let b = &basis[rng.gen_range(0..basis.len())];
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            e.add_term(int(c), b.clone());
        }
        if !e.is_zero() {
            return e;
        }
    }
}

/// Iterates [`claim1_reduce`] on random vectors of level at most `max_level2`
/// until they reach `1 ⊗ V`; each trial must take exactly as many steps as
/// `deg(v)` has letters and end at a nonzero vector.
pub fn simplicity_probe<B: BaseAction, R: Rng>(
    m: &InducedModule<B>,
    samples: usize,
    max_level2: i64,
    rng: &mut R,
) -> Result<CheckReport, RepError> {
    m.require_certified()?;
    let mut r = CheckReport::new("simplicity probe");
    let basis: Vec<Monomial> = (0..=max_level2.min(m.bound2())).flat_map(|n| m.level_basis(n)).collect();
    for s in 0..samples {
        let v = random_vector(&basis, rng);
        let budget = letters(&m.deg(&v).expect("nonzero"));
        let mut cur = v.clone();
        let mut steps = 0u64;
        let mut failure = None;
        while !m.in_coefficient_part(&cur) {
            match claim1_reduce(m, &cur) {
                Ok(step) => cur = step.image,
                Err(e) => {
                    failure = Some(format!("{e}"));
                    break;
                }
            }
            steps += 1;
        }
        match failure {
            Some(e) => r.fail(vec![format!("sample {s}"), format!("{v}")], "reaches V".into(), e),
            None if cur.is_zero() => r.fail(vec![format!("sample {s}"), format!("{v}")], "nonzero".into(), "0".into()),
            None => r.compare(|| vec![format!("sample {s}"), format!("{v}")], &budget, &steps),
        }
    }
    Ok(r)
}

fn stacked_images<B: BaseAction>(m: &InducedModule<B>, basis: &[Monomial], gens: &[Gen]) -> Vec<LinComb<(usize, Monomial)>> {
    basis
        .iter()
        .map(|b| {
            let e = Element::basis(b.clone());
            let mut out = LinComb::zero();
            for (a, g) in gens.iter().enumerate() {
                for (mono, c) in m.act_exact(*g, &e).iter() {
                    out.add_term(c.clone(), (a, mono.clone()));
                }
            }
            out
        })
        .collect()
}

fn top_generators(a: i64, b: i64, c: i64, limit: i64) -> Vec<Gen> {
    let mut gens: Vec<Gen> = (a + 1..=limit).map(Gen::w).collect();
    gens.extend((b + 1..=limit).filter(|j| *j != 0).map(|j| Gen::g2(2 * j - 1)));
    gens.extend((c + 1..=limit).map(Gen::l));
    gens
}

/// `{v : W_i v = G_{j−½} v = L_k v = 0 for i > a, j > b (j ≠ 0), k > c}` inside the truncation.
pub fn top_space<B: BaseAction>(m: &InducedModule<B>, a: i64, b: i64, c: i64) -> Vec<Element> {
    let basis = m.basis();
    let gens = top_generators(a, b, c, m.annihilation_limit(m.bound2()));
    combine(&basis, &kernel(&stacked_images(m, &basis, &gens)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSearch {
    /// `dim N_{a,b,c}` for every scanned triple.
    pub dims: BTreeMap<(i64, i64, i64), usize>,
    /// Triples with `N ≠ 0` that are minimal in every coordinate.
    pub minimal: Vec<(i64, i64, i64)>,
    /// Least `a` admitting some `(b, c)` with `N_{a,b,c} ≠ 0`.
    pub min_a: Option<i64>,
    /// Whether `N_{a,a,c} ≠ 0` for that least `a` and some `c`.
    pub a_equals_b: bool,
}

/// Exhaustive scan of `dim N_{a,b,c}` over the given inclusive ranges.
pub fn top_space_search<B: BaseAction>(
    m: &InducedModule<B>,
    a_range: (i64, i64),
    b_range: (i64, i64),
    c_range: (i64, i64),
) -> TopSearch {
    let basis = m.basis();
    let limit = m.annihilation_limit(m.bound2());
    let low = a_range.0.min(b_range.0).min(c_range.0);
    let all = top_generators(low, low, low, limit);
    let per_gen: BTreeMap<Gen, Vec<Element>> = all
        .iter()
        .map(|g| (*g, basis.iter().map(|b| m.act_exact(*g, &Element::basis(b.clone()))).collect()))
        .collect();
    let mut dims = BTreeMap::new();
    for a in a_range.0..=a_range.1 {
        for b in b_range.0..=b_range.1 {
            for c in c_range.0..=c_range.1 {
                let gens = top_generators(a, b, c, limit);
                let images: Vec<LinComb<(usize, Monomial)>> = (0..basis.len())
                    .map(|j| {
                        let mut out = LinComb::zero();
                        for (n, g) in gens.iter().enumerate() {
                            for (mono, k) in per_gen[g][j].iter() {
                                out.add_term(k.clone(), (n, mono.clone()));
                            }
                        }
                        out
                    })
                    .collect();
                dims.insert((a, b, c), kernel(&images).len());
            }
        }
    }
    let nonzero: Vec<(i64, i64, i64)> = dims.iter().filter(|(_, n)| **n > 0).map(|(k, _)| *k).collect();
    let minimal = nonzero
        .iter()
        .copied()
        .filter(|x| !nonzero.iter().any(|y| y != x && y.0 <= x.0 && y.1 <= x.1 && y.2 <= x.2))
        .collect();
    let min_a = nonzero.iter().map(|x| x.0).min();
    let a_equals_b = min_a.is_some_and(|a| nonzero.iter().any(|x| x.0 == a && x.1 == a));
    TopSearch { dims, minimal, min_a, a_equals_b }
}

/// Least `(r₁, r₂, r₃)` with `S^{(r₁,r₂,r₃)} v = 0`, scanning modes up to `limit`;
/// `tail_zero` records that the next two modes past `limit` also kill `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Restrictedness {
    pub r1: i64,
    pub r2: i64,
    pub r3: i64,
    pub limit: i64,
    pub tail_zero: bool,
}

pub fn restrictedness_probe<B: BaseAction>(m: &InducedModule<B>, v: &Element) -> Result<Restrictedness, RepError> {
    if v.is_zero() {
        return Err(RepError::DegenerateInput("zero vector".into()));
    }
    let level = v.keys().map(|b| b.level2(m.layout())).max().unwrap_or(0);
    let limit = m.annihilation_limit(level);
    let kills = |g: Gen| m.act_exact(g, v).is_zero();
    let least = |from: i64, gen: &dyn Fn(i64) -> Gen| (from..=limit).rev().find(|i| !kills(gen(*i))).map_or(from, |i| i + 1);
    let r1 = least(0, &Gen::l);
    let r2 = least(0, &Gen::w);
    let r3 = least(1, &|i| Gen::g2(2 * i - 1));
    let tail_zero = (limit + 1..=limit + 2).all(|i| kills(Gen::l(i)) && kills(Gen::w(i)) && kills(Gen::g2(2 * i - 1)));
    Ok(Restrictedness { r1, r2, r3, limit, tail_zero })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::same_span;
    use crate::rep::{build_whittaker, verma, WhittakerData};
    use rand::SeedableRng;

    fn whittaker(bound2: i64, len: usize) -> InducedModule<WhittakerData> {
        build_whittaker(WhittakerData::new(1, int(0), int(0)).with(Gen::w(1), int(1)), bound2, len).unwrap()
    }

    fn mono(word: &[Gen]) -> Element {
        Element::basis(Monomial::new(word.to_vec(), 0))
    }

    #[test]
    fn claim1_examples() {
        let m = whittaker(4, 1);
        let s = claim1_reduce(&m, &mono(&[Gen::l(-1)])).unwrap();
        assert_eq!((s.case, s.gen), (Claim1Case::W, Gen::w(2)));
        assert!(s.expected.is_zero());
        assert!(m.in_coefficient_part(&s.image));
        let s = claim1_reduce(&m, &mono(&[Gen::g2(-1)])).unwrap();
        assert_eq!((s.case, s.gen), (Claim1Case::G, Gen::g2(3)));
        let s = claim1_reduce(&m, &mono(&[Gen::w(-2)])).unwrap();
        assert_eq!((s.case, s.gen), (Claim1Case::L, Gen::l(3)));
        // [L_3, W_{-2}] = t·W_1 and W_1 acts by ψ(W_1) = 1
        assert_eq!(s.image, mono(&[]));
        assert!(matches!(claim1_reduce(&m, &mono(&[])), Err(RepError::DegenerateInput(_))));
        assert!(matches!(claim1_reduce(&m, &Element::zero()), Err(RepError::DegenerateInput(_))));
    }

    #[test]
    fn probe_on_whittaker() {
        let m = whittaker(4, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = simplicity_probe(&m, 10, 4, &mut rng).unwrap();
        assert!(r.passed(), "{:?}", r.witnesses);
    }

    #[test]
    fn probe_refuses_verma() {
        let m = verma(int(1), int(1), int(0), 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        assert!(matches!(simplicity_probe(&m, 1, 2, &mut rng), Err(RepError::ConditionViolation(_))));
    }

    #[test]
    fn top_space_recovers_v() {
        let m = whittaker(2, 1);
        let top = top_space(&m, 1, 1, 2);
        let v: Vec<Element> = m.coefficient_basis().into_iter().map(Element::basis).collect();
        assert!(same_span(&top, &v));
        assert_eq!(top_space(&m, 50, 50, 50).len(), m.basis().len());
    }

    #[test]
    fn verma_top_space() {
        let m = verma(int(1), int(2), int(0), 2);
        let top = top_space(&m, 0, 0, 0);
        let has = |e: &Element| {
            let mut all = top.clone();
            all.push(e.clone());
            crate::linalg::rank(&all) == crate::linalg::rank(&top)
        };
        assert!(has(&mono(&[])));
        assert!(has(&mono(&[Gen::g2(-1)])));
    }

    #[test]
    fn restrictedness_examples() {
        let m = verma(int(1), int(2), int(0), 2);
        let r = restrictedness_probe(&m, &mono(&[])).unwrap();
        assert_eq!((r.r1, r.r2, r.r3, r.tail_zero), (1, 1, 1, true));
        let w = build_whittaker(WhittakerData::new(1, int(0), int(0)).with(Gen::w(1), int(1)).with(Gen::l(2), int(1)), 2, 1).unwrap();
        let r = restrictedness_probe(&w, &mono(&[])).unwrap();
        assert_eq!((r.r1, r.r2, r.r3), (3, 2, 2));
        let r = restrictedness_probe(&w, &mono(&[Gen::l(-1)])).unwrap();
        assert!(r.r1 <= 4 && r.r2 <= 3 && r.r3 <= 3 && r.tail_zero);
    }

    #[test]
    fn search_finds_minimal_window() {
        let m = whittaker(1, 1);
        let s = top_space_search(&m, (0, 2), (0, 2), (0, 3));
        assert_eq!(s.min_a, Some(1));
        assert!(s.a_equals_b);
        assert!(s.dims[&(1, 1, 2)] > 0);
    }
}
