//! λ-bracket calculus for the rank-(2+1) conformal superalgebra `S` (and the
//! Neveu–Schwarz conformal superalgebra as a cross-check), and the bracket of
//! its annihilation superalgebra.
//!
//! Conformal axioms are checked symbolically: λ, μ and ∂ are formal variables
//! and `[b_{−λ−∂} a]` is computed by polynomial substitution.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::algebra::{Epsilon, Family, Gen, Mode, Parity, Preset, SuperVector};
use crate::lincomb::LinComb;
use crate::report::CheckReport;
use crate::scalar::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CGen {
    L,
    W,
    G,
}

impl CGen {
    pub fn parity(self) -> Parity {
        match self {
            CGen::G => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

impl fmt::Display for CGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CGen::L => "L",
            CGen::W => "W",
            CGen::G => "G",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConformalAlgebra {
    /// `[L_λL]=(∂+2λ)L, [L_λW]=∂W, [L_λG]=(∂+λ)G, [G_λG]=∂W`.
    S,
    /// `[L_λL]=(∂+2λ)L, [L_λG]=(∂+3/2λ)G, [G_λG]=2L`.
    NeveuSchwarz,
}

/// One term `c·ν^a ∂^b Z` of a generator bracket `[X_ν Y]`.
type TableTerm = (u32, u32, Rational, CGen);

impl ConformalAlgebra {
    pub fn gens(self) -> &'static [CGen] {
        match self {
            ConformalAlgebra::S => &[CGen::L, CGen::W, CGen::G],
            ConformalAlgebra::NeveuSchwarz => &[CGen::L, CGen::G],
        }
    }

    fn table(self, x: CGen, y: CGen) -> Vec<TableTerm> {
        use CGen::*;
        let one = || int(1);
        match (self, x, y) {
            (_, L, L) => vec![(0, 1, one(), L), (1, 0, int(2), L)],
            (ConformalAlgebra::S, L, W) => vec![(0, 1, one(), W)],
            (ConformalAlgebra::S, W, L) => vec![(0, 1, int(-1), W)],
            (ConformalAlgebra::S, L, G) => vec![(0, 1, one(), G), (1, 0, one(), G)],
            (ConformalAlgebra::S, G, L) => vec![(1, 0, one(), G)],
            (ConformalAlgebra::S, G, G) => vec![(0, 1, one(), W)],
            (ConformalAlgebra::NeveuSchwarz, L, G) => vec![(0, 1, one(), G), (1, 0, frac(3, 2), G)],
            (ConformalAlgebra::NeveuSchwarz, G, L) => vec![(0, 1, frac(1, 2), G), (1, 0, frac(3, 2), G)],
            (ConformalAlgebra::NeveuSchwarz, G, G) => vec![(0, 0, int(2), L)],
            _ => vec![],
        }
    }
}

/// Element of `ℂ[∂]L ⊕ ℂ[∂]W ⊕ ℂ[∂]G`, keyed by (generator, ∂-power).
pub type ConformalElement = LinComb<(CGen, u32)>;

/// `Σ λ^k · e_k`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LambdaPolynomial {
    pub coeffs: BTreeMap<u32, ConformalElement>,
}

impl LambdaPolynomial {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> ConformalElement {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }
}

impl fmt::Display for LambdaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, e)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "λ^{}·(", k)?;
            for (j, ((g, p), c)) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "({})∂^{}{}", c, p, g)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Monomial `λ^lam μ^mu ∂^del Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Mono {
    lam: u32,
    mu: u32,
    del: u32,
    gen: CGen,
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ^{}μ^{}∂^{}{}", self.lam, self.mu, self.del, self.gen)
    }
}

type Formal = LinComb<Mono>;
/// Scalar polynomial in (λ, μ, ∂).
type Poly = LinComb<(u32, u32, u32)>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (&(l1, m1, d1), c1) in a.iter() {
        for (&(l2, m2, d2), c2) in b.iter() {
            out.add_term(c1 * c2, (l1 + l2, m1 + m2, d1 + d2));
        }
    }
    out
}

fn poly_pow(a: &Poly, k: u32) -> Poly {
    let mut out = Poly::basis((0, 0, 0));
    for _ in 0..k {
        out = poly_mul(&out, a);
    }
    out
}

/// The linear form `aλ + bμ + c∂`.
fn linear(a: i64, b: i64, c: i64) -> Poly {
    [(int(a), (1, 0, 0)), (int(b), (0, 1, 0)), (int(c), (0, 0, 1))].into_iter().collect()
}

#[derive(Clone, Copy)]
struct Spectral {
    lam: i64,
    mu: i64,
}

const LAMBDA: Spectral = Spectral { lam: 1, mu: 0 };
const MU: Spectral = Spectral { lam: 0, mu: 1 };
const LAMBDA_PLUS_MU: Spectral = Spectral { lam: 1, mu: 1 };

fn formal_bracket(alg: ConformalAlgebra, left: &Formal, var: Spectral, right: &Formal) -> Formal {
    let nu = linear(var.lam, var.mu, 0);
    let neg_nu = linear(-var.lam, -var.mu, 0);
    let del_plus_nu = linear(var.lam, var.mu, 1);
    let mut out = Formal::zero();
    for (a, ca) in left.iter() {
        for (b, cb) in right.iter() {
            let table = alg.table(a.gen, b.gen);
            if table.is_empty() {
                continue;
            }
            let scalars = Poly::term(ca * cb, (a.lam + b.lam, a.mu + b.mu, 0));
            let pre = poly_mul(&scalars, &poly_mul(&poly_pow(&neg_nu, a.del), &poly_pow(&del_plus_nu, b.del)));
            for (nu_pow, del_pow, c, z) in table {
                let t = poly_mul(&pre, &poly_mul(&poly_pow(&nu, nu_pow), &Poly::term(c, (0, 0, del_pow))));
                for (&(l, m, d), k) in t.iter() {
                    out.add_term(k.clone(), Mono { lam: l, mu: m, del: d, gen: z });
                }
            }
        }
    }
    out
}

/// Replace μ by −λ−∂ (∂ acting on the whole expression).
fn substitute_mu(f: &Formal) -> Formal {
    let sub = linear(-1, 0, -1);
    let mut out = Formal::zero();
    for (m, c) in f.iter() {
        let p = poly_mul(&poly_pow(&sub, m.mu), &Poly::term(c.clone(), (m.lam, 0, m.del)));
        for (&(l, _, d), k) in p.iter() {
            out.add_term(k.clone(), Mono { lam: l, mu: 0, del: d, gen: m.gen });
        }
    }
    out
}

fn to_formal(x: &ConformalElement) -> Formal {
    x.iter().map(|(&(g, p), c)| (c.clone(), Mono { lam: 0, mu: 0, del: p, gen: g })).collect()
}

pub fn del_pow(g: CGen, p: u32) -> ConformalElement {
    ConformalElement::basis((g, p))
}

/// `[x_λ y]`, extended from the generator table by sesquilinearity.
pub fn lambda_bracket(alg: ConformalAlgebra, x: &ConformalElement, y: &ConformalElement) -> LambdaPolynomial {
    let f = formal_bracket(alg, &to_formal(x), LAMBDA, &to_formal(y));
    let mut out = LambdaPolynomial::default();
    for (m, c) in f.iter() {
        out.coeffs.entry(m.lam).or_default().add_term(c.clone(), (m.gen, m.del));
    }
    out
}

fn factorial(j: u32) -> Rational {
    (1..=j as i64).fold(int(1), |acc, k| acc * int(k))
}

fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `x_{(j)} y = j!·[λ^j][x_λ y]`.
pub fn jth_product(alg: ConformalAlgebra, x: &ConformalElement, y: &ConformalElement, j: u32) -> ConformalElement {
    lambda_bracket(alg, x, y).coeff(j).scaled(&factorial(j))
}

/// Skew-symmetry on pairs and Jacobi on triples of `∂^p X` with `p ≤ max_deg`.
pub fn conformal_axiom_check(alg: ConformalAlgebra, max_deg: u32) -> CheckReport {
    let mut rep = CheckReport::new("conformal-axioms");
    let mut elems = Vec::new();
    for &g in alg.gens() {
        for p in 0..=max_deg {
            elems.push((g, p));
        }
    }
    let formal = |g: CGen, p: u32| Formal::basis(Mono { lam: 0, mu: 0, del: p, gen: g });
    let name = |g: CGen, p: u32| format!("∂^{}{}", p, g);
    for &(a, p) in &elems {
        for &(b, q) in &elems {
            let lhs = formal_bracket(alg, &formal(a, p), LAMBDA, &formal(b, q));
            let swapped = substitute_mu(&formal_bracket(alg, &formal(b, q), MU, &formal(a, p)));
            let sign = int(-a.parity().koszul(b.parity()));
            rep.compare(|| vec![name(a, p), name(b, q)], &lhs, &swapped.scaled(&sign));
        }
    }
    for &(a, p) in &elems {
        for &(b, q) in &elems {
            let sign = int(a.parity().koszul(b.parity()));
            let (fa, fb) = (formal(a, p), formal(b, q));
            let ab = formal_bracket(alg, &fa, LAMBDA, &fb);
            for &(c, r) in &elems {
                let fc = formal(c, r);
                let lhs = formal_bracket(alg, &fa, LAMBDA, &formal_bracket(alg, &fb, MU, &fc));
                let mut rhs = formal_bracket(alg, &ab, LAMBDA_PLUS_MU, &fc);
                rhs.add_scaled(&sign, &formal_bracket(alg, &fb, MU, &formal_bracket(alg, &fa, LAMBDA, &fc)));
                rep.compare(|| vec![name(a, p), name(b, q), name(c, r)], &lhs, &rhs);
            }
        }
    }
    rep
}

/// The coefficient `X_{(n)}` of the annihilation superalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AnnGen {
    pub gen: CGen,
    pub n: u32,
}

impl AnnGen {
    pub fn new(gen: CGen, n: u32) -> Self {
        AnnGen { gen, n }
    }
}

impl fmt::Display for AnnGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_({})", self.gen, self.n)
    }
}

pub type AnnVector = LinComb<AnnGen>;

/// `(∂^p X)_{(k)} = (−1)^p k(k−1)⋯(k−p+1) X_{(k−p)}`.
fn ann_of(g: CGen, p: u32, k: u32) -> AnnVector {
    if p > k {
        return AnnVector::zero();
    }
    let falling = (0..p).fold(int(1), |acc, i| acc * int((k - i) as i64));
    let sign = if p % 2 == 0 { int(1) } else { int(-1) };
    AnnVector::term(sign * falling, AnnGen::new(g, k - p))
}

/// `[a_{(m)}, b_{(n)}] = Σ_j C(m,j) (a_{(j)}b)_{(m+n−j)}`.
pub fn annihilation_bracket(alg: ConformalAlgebra, a: AnnGen, b: AnnGen) -> AnnVector {
    let lb = lambda_bracket(alg, &del_pow(a.gen, 0), &del_pow(b.gen, 0));
    let mut out = AnnVector::zero();
    for (&j, e) in lb.coeffs.iter() {
        if j > a.n {
            continue;
        }
        let c = binomial(a.n, j) * factorial(j);
        for (&(z, p), k) in e.iter() {
            out.add_scaled(&(&c * k), &ann_of(z, p, a.n + b.n - j));
        }
    }
    out
}

/// `[∂, a_{(n)}] = −n a_{(n−1)}` in the extended annihilation superalgebra.
pub fn derivation_bracket(a: AnnGen) -> AnnVector {
    if a.n == 0 {
        return AnnVector::zero();
    }
    AnnVector::term(int(-(a.n as i64)), AnnGen::new(a.gen, a.n - 1))
}

/// The relabelling of the annihilation superalgebra onto a mode algebra:
/// for `S`, `L_(n)→L_{1−n}`, `W_(n)→W_{−n−1}`, `G_(n)→G_{−n}` in `Sbar0`;
/// for the Neveu–Schwarz algebra, `L_(n)→L_{n−1}`, `G_(n)→G_{n−½}` in `SVir12`.
pub fn relabel(alg: ConformalAlgebra, a: AnnGen) -> Gen {
    let n = a.n as i64;
    match (alg, a.gen) {
        (ConformalAlgebra::S, CGen::L) => Gen::l(1 - n),
        (ConformalAlgebra::S, CGen::W) => Gen::w(-n - 1),
        (ConformalAlgebra::S, CGen::G) => Gen::g(-n),
        (ConformalAlgebra::NeveuSchwarz, CGen::L) => Gen::l(n - 1),
        (ConformalAlgebra::NeveuSchwarz, _) => Gen::g2(2 * n - 1),
    }
}

pub fn relabel_target(alg: ConformalAlgebra) -> Preset {
    match alg {
        ConformalAlgebra::S => Preset::Sbar(Epsilon::Zero),
        ConformalAlgebra::NeveuSchwarz => Preset::SVir(Epsilon::Half),
    }
}

/// Annihilation generators whose relabelled mode has |mode| ≤ `window`.
pub fn ann_window(alg: ConformalAlgebra, window: i64) -> Vec<AnnGen> {
    let mut out = Vec::new();
    for &g in alg.gens() {
        for n in 0..=(window as u32 + 2) {
            let a = AnnGen::new(g, n);
            if relabel(alg, a).mode.doubled().abs() <= 2 * window {
                out.push(a);
            }
        }
    }
    out
}

/// Compares the relabelled annihilation table with the mode-algebra preset on
/// every pair inside the window. The image of the relabelling is only part of
/// the target (for `S`: `L_{≤1}`, `W_{≤−1}`, `G_{≤0}`), so only pairs in the
/// image are compared; the report notes the coverage.
pub fn relabel_check(alg: ConformalAlgebra, window: i64) -> CheckReport {
    let target = relabel_target(alg);
    let mut rep = CheckReport::new("annihilation-relabel");
    let gens = ann_window(alg, window);
    let mut images = BTreeSet::new();
    for &a in &gens {
        let g = relabel(alg, a);
        if !images.insert(g) || !target.contains(g) {
            rep.fail(vec![a.to_string()], "injective into the target lattice".to_string(), g.to_string());
        }
    }
    for &a in &gens {
        for &b in &gens {
            let ab = annihilation_bracket(alg, a, b);
            let found = ab.map_basis(|c| SuperVector::basis(relabel(alg, *c)));
            let expected = target.bracket_gens(relabel(alg, a), relabel(alg, b)).expect("relabelled into lattice");
            rep.compare(|| vec![a.to_string(), b.to_string()], &expected, &found);
        }
    }
    let covered: Vec<_> = [Family::L, Family::W, Family::G]
        .into_iter()
        .filter_map(|f| images.iter().filter(|g| g.family == f).map(|g| g.mode).max().map(|m: Mode| format!("{}_{{≤{}}}", f, m)))
        .collect();
    rep.note(format!("compared {} generators onto {}; image covers {}", gens.len(), target, covered.join(", ")));
    rep
}

/// The relabelled table as (a, b, [a,b]) triples, for display.
pub fn annihilation_table(alg: ConformalAlgebra, window: i64) -> Vec<(AnnGen, AnnGen, AnnVector)> {
    let gens = ann_window(alg, window);
    let mut out = Vec::new();
    for &a in &gens {
        for &b in &gens {
            out.push((a, b, annihilation_bracket(alg, a, b)));
        }
    }
    out
}
