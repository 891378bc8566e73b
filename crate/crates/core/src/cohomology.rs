//! 2-cocycles on the centreless algebras `Sbar^ε`.
//!
//! A [`Cocycle`] is tabulated on the triangle `|a|, |b|, |a+b| ≤ N` of pairs
//! `(X_a, Y_b)`; only one ordering of each pair is stored and the other follows
//! from super skew-symmetry. The solver sets up the cocycle identity for every
//! triple whose pair evaluations stay inside the triangle, gauge-fixes
//! `u(L_0, X_n) = 0` for `n ≠ 0`, and quotients by the coboundaries that
//! survive the gauge.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{Epsilon, Family, Gen, Mode, Preset, SuperVector};
use crate::error::CohomologyError;
use crate::linalg::Echelon;
use crate::lincomb::LinComb;
use crate::report::CheckReport;
use crate::scalar::{frac, int, Rational};

pub type Pair = (Gen, Gen);

fn algebra(eps: Epsilon) -> Preset {
    Preset::Sbar(eps)
}

fn in_triangle(x: Gen, y: Gen, window: i64) -> bool {
    let n = 2 * window;
    x.mode.doubled().abs() <= n && y.mode.doubled().abs() <= n && (x.mode + y.mode).doubled().abs() <= n
}

/// Where the value `ψ(x, y)` is stored.
enum Slot {
    /// Forced to zero (an even element paired with itself).
    Zero,
    /// `ψ(x, y) = sign · table[pair]`.
    Stored(Rational, Pair),
}

fn slot(eps: Epsilon, x: Gen, y: Gen) -> Slot {
    let alg = algebra(eps);
    if x == y && !alg.parity(x).is_odd() {
        return Slot::Zero;
    }
    if x <= y {
        Slot::Stored(int(1), (x, y))
    } else {
        Slot::Stored(int(-alg.parity(x).koszul(alg.parity(y))), (y, x))
    }
}

/// Canonical pairs of the triangle of size `window`, excluding forced zeros.
pub fn domain_pairs(eps: Epsilon, window: i64) -> Vec<Pair> {
    let basis = algebra(eps).basis_window(window);
    let mut out = Vec::new();
    for &x in &basis {
        for &y in &basis {
            if x <= y && in_triangle(x, y, window) {
                if let Slot::Stored(_, p) = slot(eps, x, y) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// A bilinear form on `Sbar^ε`, known on the triangle of size `window`.
#[derive(Clone, PartialEq, Eq)]
pub struct Cocycle {
    epsilon: Epsilon,
    window: i64,
    values: BTreeMap<Pair, Rational>,
}

impl Cocycle {
    pub fn zero(epsilon: Epsilon, window: i64) -> Self {
        Cocycle { epsilon, window, values: BTreeMap::new() }
    }

    /// Tabulates `f` on the canonical pairs; the other ordering is implied.
    pub fn from_fn(epsilon: Epsilon, window: i64, mut f: impl FnMut(Gen, Gen) -> Rational) -> Self {
        let mut c = Cocycle::zero(epsilon, window);
        for (x, y) in domain_pairs(epsilon, window) {
            let v = f(x, y);
            if !v.is_zero() {
                c.values.insert((x, y), v);
            }
        }
        c
    }

    pub fn from_vector(epsilon: Epsilon, window: i64, v: &LinComb<Pair>) -> Self {
        let values = v.iter().filter(|((x, y), _)| in_triangle(*x, *y, window)).map(|(p, c)| (*p, c.clone())).collect();
        Cocycle { epsilon, window, values }
    }

    pub fn epsilon(&self) -> Epsilon {
        self.epsilon
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero values on canonical pairs.
    pub fn entries(&self) -> impl Iterator<Item = (&Pair, &Rational)> {
        self.values.iter()
    }

    pub fn to_vector(&self) -> LinComb<Pair> {
        self.values.iter().map(|(p, c)| (c.clone(), *p)).collect()
    }

    pub fn get(&self, x: Gen, y: Gen) -> Result<Rational, CohomologyError> {
        let alg = algebra(self.epsilon);
        for g in [x, y] {
            if !alg.contains(g) {
                return Err(CohomologyError::NotInAlgebra(g));
            }
        }
        if !in_triangle(x, y, self.window) {
            return Err(CohomologyError::WindowTooSmall(x, y, self.window));
        }
        Ok(match slot(self.epsilon, x, y) {
            Slot::Zero => Rational::zero(),
            Slot::Stored(s, p) => self.values.get(&p).map_or_else(Rational::zero, |v| s * v),
        })
    }

    /// `ψ(x, v)` for a vector `v` in the second slot.
    fn get_vec(&self, x: Gen, v: &SuperVector) -> Result<Rational, CohomologyError> {
        let mut s = Rational::zero();
        for (g, c) in v.iter() {
            s += c * self.get(x, *g)?;
        }
        Ok(s)
    }

    fn get_vec_left(&self, v: &SuperVector, z: Gen) -> Result<Rational, CohomologyError> {
        let mut s = Rational::zero();
        for (g, c) in v.iter() {
            s += c * self.get(*g, z)?;
        }
        Ok(s)
    }

    pub fn restrict(&self, window: i64) -> Self {
        let values = self.values.iter().filter(|((x, y), _)| in_triangle(*x, *y, window)).map(|(p, c)| (*p, c.clone())).collect();
        Cocycle { epsilon: self.epsilon, window: window.min(self.window), values }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        Cocycle::from_vector(self.epsilon, self.window, &self.to_vector().scaled(c))
    }

    pub fn plus(&self, o: &Cocycle) -> Self {
        let w = self.window.min(o.window);
        Cocycle::from_vector(self.epsilon, w, &self.to_vector().plus(&o.to_vector()))
    }

    pub fn minus(&self, o: &Cocycle) -> Self {
        self.plus(&o.scaled(&int(-1)))
    }
}

impl fmt::Debug for Cocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cocycle(ε={}, N={}) ", self.epsilon, self.window)?;
        let mut m = f.debug_map();
        for ((x, y), c) in &self.values {
            m.entry(&format_args!("({}, {})", x, y), &format_args!("{}", c));
        }
        m.finish()
    }
}

/// A linear functional `f` given on finitely many generators (zero elsewhere).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coboundary {
    pub values: BTreeMap<Gen, Rational>,
}

impl Coboundary {
    pub fn single(g: Gen, c: Rational) -> Self {
        let mut values = BTreeMap::new();
        values.insert(g, c);
        Coboundary { values }
    }

    pub fn eval(&self, v: &SuperVector) -> Rational {
        v.iter().fold(Rational::zero(), |s, (g, c)| s + c * self.values.get(g).cloned().unwrap_or_else(Rational::zero))
    }

    /// `ψ_f(x, y) = f([x, y])` on the triangle.
    pub fn form(&self, epsilon: Epsilon, window: i64) -> Cocycle {
        let alg = algebra(epsilon);
        Cocycle::from_fn(epsilon, window, |x, y| self.eval(&alg.bracket_gens(x, y).expect("basis in lattice")))
    }
}

/// The explicit classes: `alpha1..alpha4` (ε=0) and `beta1, beta2` (ε=½).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Explicit {
    Alpha1,
    Alpha2,
    Alpha3,
    Alpha4,
    Beta1,
    Beta2,
}

impl Explicit {
    pub const ALL: [Explicit; 6] =
        [Explicit::Alpha1, Explicit::Alpha2, Explicit::Alpha3, Explicit::Alpha4, Explicit::Beta1, Explicit::Beta2];

    pub fn epsilon(self) -> Epsilon {
        match self {
            Explicit::Beta1 | Explicit::Beta2 => Epsilon::Half,
            _ => Epsilon::Zero,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Explicit::Alpha1 => "alpha1",
            Explicit::Alpha2 => "alpha2",
            Explicit::Alpha3 => "alpha3",
            Explicit::Alpha4 => "alpha4",
            Explicit::Beta1 => "beta1",
            Explicit::Beta2 => "beta2",
        }
    }

    /// Value on a pair with `x.family ≤ y.family`.
    fn value(self, x: Gen, y: Gen) -> Rational {
        use Family::*;
        if x.mode + y.mode != Mode::ZERO {
            return Rational::zero();
        }
        let m = x.mode.value();
        match (self, x.family, y.family) {
            (Explicit::Alpha1 | Explicit::Beta1, L, L) => (&m * &m * &m - &m) * frac(1, 12),
            (Explicit::Alpha2 | Explicit::Beta2, L, W) | (Explicit::Alpha2 | Explicit::Beta2, G, G) => int(1),
            (Explicit::Alpha3, L, G) => &m * &m + &m,
            (Explicit::Alpha4, W, G) => int(1),
            _ => Rational::zero(),
        }
    }

    pub fn cocycle(self, window: i64) -> Cocycle {
        Cocycle::from_fn(self.epsilon(), window, |x, y| self.value(x, y))
    }
}

/// What to do with a triple whose pairs leave the table's triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowPolicy {
    RequireAll,
    SkipUnavailable,
}

/// `ψ(x,[y,z]) = ψ([x,y],z) + (−1)^{|x||y|}ψ(y,[x,z])` on all triples with |mode| ≤ `window`.
pub fn cocycle_check(c: &Cocycle, window: i64, policy: WindowPolicy) -> Result<CheckReport, CohomologyError> {
    let alg = algebra(c.epsilon);
    let basis = alg.basis_window(window);
    let table = BracketCache::new(alg, &basis);
    let mut rep = CheckReport::new("cocycle");
    for &x in &basis {
        for &y in &basis {
            let xy = table.get(x, y);
            let sign = int(alg.parity(x).koszul(alg.parity(y)));
            for &z in &basis {
                let eval = || -> Result<(Rational, Rational), CohomologyError> {
                    let lhs = c.get_vec(x, table.get(y, z))?;
                    let rhs = c.get_vec_left(xy, z)? + &sign * c.get_vec(y, table.get(x, z))?;
                    Ok((lhs, rhs))
                };
                match eval() {
                    Ok((lhs, rhs)) => rep.compare(|| vec![x.to_string(), y.to_string(), z.to_string()], &lhs, &rhs),
                    Err(CohomologyError::WindowTooSmall(..)) if policy == WindowPolicy::SkipUnavailable => rep.skip(),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(rep)
}

struct BracketCache {
    table: BTreeMap<Pair, SuperVector>,
}

impl BracketCache {
    fn new(alg: Preset, basis: &[Gen]) -> Self {
        let mut table = BTreeMap::new();
        for &x in basis {
            for &y in basis {
                table.insert((x, y), alg.bracket_gens(x, y).expect("basis in lattice"));
            }
        }
        BracketCache { table }
    }

    fn get(&self, x: Gen, y: Gen) -> &SuperVector {
        &self.table[&(x, y)]
    }
}

/// `ᾱ = c − ψ_f`, with `f(X_n) = c(L_0, X_n)/n` for `n ≠ 0`, `f(L_0) = −½c(L_1, L_{−1})`,
/// `f(G_0) = c(L_{−1}, G_1)` when ε = 0, and `f(W_0) = 0`.
pub fn normalize_by_coboundary(c: &Cocycle) -> Result<Cocycle, CohomologyError> {
    if c.window < 1 {
        return Err(CohomologyError::WindowBelowMinimum { min: 1, got: c.window });
    }
    let f = normalizing_functional(c)?;
    Ok(c.minus(&f.form(c.epsilon, c.window)))
}

/// The functional subtracted by [`normalize_by_coboundary`].
pub fn normalizing_functional(c: &Cocycle) -> Result<Coboundary, CohomologyError> {
    let alg = algebra(c.epsilon);
    let l0 = Gen::l(0);
    let mut f = Coboundary::default();
    for g in alg.basis_window(c.window) {
        if g.mode != Mode::ZERO {
            let v = c.get(l0, g)? / g.mode.value();
            if !v.is_zero() {
                f.values.insert(g, v);
            }
        }
    }
    let fl0 = c.get(Gen::l(1), Gen::l(-1))? * frac(-1, 2);
    if !fl0.is_zero() {
        f.values.insert(l0, fl0);
    }
    if c.epsilon == Epsilon::Zero {
        let fg0 = c.get(Gen::l(-1), Gen::g(1))?;
        if !fg0.is_zero() {
            f.values.insert(Gen::g(0), fg0);
        }
    }
    Ok(f)
}

#[derive(Clone, Debug)]
pub struct H2Solution {
    pub epsilon: Epsilon,
    pub window: i64,
    pub dimension: usize,
    /// Dimension of the gauge-fixed cocycle space.
    pub cocycle_dimension: usize,
    /// Rank of the coboundaries left after gauge fixing.
    pub residual_coboundary_rank: usize,
    pub unknowns: usize,
    pub equations: usize,
    /// One representative per class.
    pub basis: Vec<Cocycle>,
}

/// Mode-0 functionals whose coboundaries satisfy the `u(L_0, X_n) = 0` gauge.
fn residual_generators(eps: Epsilon) -> Vec<Gen> {
    match eps {
        Epsilon::Zero => vec![Gen::l(0), Gen::w(0), Gen::g(0)],
        Epsilon::Half => vec![Gen::l(0), Gen::w(0)],
    }
}

struct System {
    eps: Epsilon,
    window: i64,
    blocks: BTreeMap<i64, Echelon<Pair>>,
    columns: BTreeMap<i64, Vec<Pair>>,
    equations: usize,
}

impl System {
    fn new(eps: Epsilon, window: i64) -> Self {
        let mut columns: BTreeMap<i64, Vec<Pair>> = BTreeMap::new();
        for p in domain_pairs(eps, window) {
            columns.entry((p.0.mode + p.1.mode).doubled()).or_default().push(p);
        }
        let blocks = columns.keys().map(|&k| (k, Echelon::new())).collect();
        System { eps, window, blocks, columns, equations: 0 }
    }

    fn unknown(&self, x: Gen, y: Gen) -> Option<Option<(Rational, Pair)>> {
        if !in_triangle(x, y, self.window) {
            return None;
        }
        Some(match slot(self.eps, x, y) {
            Slot::Zero => None,
            Slot::Stored(s, p) => Some((s, p)),
        })
    }

    /// Adds `c·u(x, v)` (or `c·u(v, x)` when `flip`) to `row`; `false` if a pair is outside.
    fn accumulate(&self, row: &mut LinComb<Pair>, c: &Rational, x: Gen, v: &SuperVector, flip: bool) -> bool {
        for (g, k) in v.iter() {
            let (a, b) = if flip { (*g, x) } else { (x, *g) };
            match self.unknown(a, b) {
                None => return false,
                Some(None) => {}
                Some(Some((s, p))) => row.add_term(c * k * s, p),
            }
        }
        true
    }

    fn add(&mut self, degree: i64, row: &LinComb<Pair>) {
        if row.is_zero() {
            return;
        }
        self.equations += 1;
        self.blocks.get_mut(&degree).expect("degree block").insert(row);
    }

    fn build(eps: Epsilon, window: i64, extra_gauge: bool) -> Self {
        let mut sys = System::new(eps, window);
        let alg = algebra(eps);
        let basis = alg.basis_window(window);
        let cache = BracketCache::new(alg, &basis);
        let one = int(1);
        for &x in &basis {
            for &y in &basis {
                let sign = int(-alg.parity(x).koszul(alg.parity(y)));
                for &z in &basis {
                    let mut row = LinComb::zero();
                    let ok = sys.accumulate(&mut row, &one, x, cache.get(y, z), false)
                        && sys.accumulate(&mut row, &-one.clone(), z, cache.get(x, y), true)
                        && sys.accumulate(&mut row, &sign, y, cache.get(x, z), false);
                    if ok {
                        sys.add((x.mode + y.mode + z.mode).doubled(), &row);
                    }
                }
            }
        }
        let l0 = Gen::l(0);
        for &g in &basis {
            if g.mode != Mode::ZERO {
                if let Some(Some((_, p))) = sys.unknown(l0, g) {
                    sys.add(g.mode.doubled(), &LinComb::basis(p));
                }
            }
        }
        if extra_gauge {
            let mut fix = vec![(Gen::l(1), Gen::l(-1))];
            if eps == Epsilon::Zero {
                fix.push((Gen::l(-1), Gen::g(1)));
            }
            for (x, y) in fix {
                if let Some(Some((_, p))) = sys.unknown(x, y) {
                    sys.add(0, &LinComb::basis(p));
                }
            }
        }
        sys
    }

    fn cocycle_space(&self) -> Vec<LinComb<Pair>> {
        let mut out = Vec::new();
        for (k, e) in &self.blocks {
            out.extend(e.nullspace(&self.columns[k]));
        }
        out
    }
}

/// Dimension of `H²(Sbar^ε)` seen on the triangle of size `window`, with one
/// representative per class.
pub fn solve_h2(eps: Epsilon, window: i64) -> Result<H2Solution, CohomologyError> {
    if window < 2 {
        return Err(CohomologyError::WindowBelowMinimum { min: 2, got: window });
    }
    let sys = System::build(eps, window, false);
    let z = sys.cocycle_space();
    let mut quotient = Echelon::new();
    let mut residual_rank = 0;
    for g in residual_generators(eps) {
        let v = Coboundary::single(g, int(1)).form(eps, window).to_vector();
        if quotient.insert(&v) {
            residual_rank += 1;
        }
    }
    let mut basis = Vec::new();
    for v in &z {
        if quotient.insert(v) {
            basis.push(Cocycle::from_vector(eps, window, v));
        }
    }
    Ok(H2Solution {
        epsilon: eps,
        window,
        dimension: basis.len(),
        cocycle_dimension: z.len(),
        residual_coboundary_rank: residual_rank,
        unknowns: sys.columns.values().map(Vec::len).sum(),
        equations: sys.equations,
        basis,
    })
}

/// Basis of the fully normalized cocycles: `u(L_0, X_n) = 0` (n ≠ 0),
/// `u(L_1, L_{−1}) = 0`, and `u(L_{−1}, G_1) = 0` when ε = 0.
pub fn solve_normalized(eps: Epsilon, window: i64) -> Result<Vec<Cocycle>, CohomologyError> {
    if window < 2 {
        return Err(CohomologyError::WindowBelowMinimum { min: 2, got: window });
    }
    let sys = System::build(eps, window, true);
    Ok(sys.cocycle_space().iter().map(|v| Cocycle::from_vector(eps, window, v)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub independent: bool,
    pub count: usize,
    pub coboundary_rank: usize,
    pub combined_rank: usize,
}

/// Whether no nonzero combination of `cs` is a coboundary on the triangle of size `window`.
pub fn independence_check(cs: &[Cocycle], window: i64) -> Result<IndependenceReport, CohomologyError> {
    let Some(first) = cs.first() else {
        return Ok(IndependenceReport { independent: true, count: 0, coboundary_rank: 0, combined_rank: 0 });
    };
    let eps = first.epsilon;
    for c in cs {
        if c.epsilon != eps {
            return Err(CohomologyError::MixedEpsilon);
        }
        if c.window < window {
            return Err(CohomologyError::WindowTooSmall(Gen::l(window), Gen::l(0), c.window));
        }
    }
    let mut e = Echelon::new();
    for g in algebra(eps).basis_window(window) {
        e.insert(&Coboundary::single(g, int(1)).form(eps, window).to_vector());
    }
    let coboundary_rank = e.rank();
    for c in cs {
        e.insert(&c.restrict(window).to_vector());
    }
    let combined_rank = e.rank();
    Ok(IndependenceReport {
        independent: combined_rank - coboundary_rank == cs.len(),
        count: cs.len(),
        coboundary_rank,
        combined_rank,
    })
}
