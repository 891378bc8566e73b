use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::generator::{Family, Gen, Mode, Parity};
use super::SuperVector;
use crate::error::{AlgebraError, ParseError};
use crate::scalar::{frac, int, Rational, Scalar};

/// Ramond (`Zero`, integral odd modes) or Neveu–Schwarz (`Half`) type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Epsilon {
    Zero,
    Half,
}

impl Epsilon {
    pub fn suffix(self) -> &'static str {
        match self {
            Epsilon::Zero => "0",
            Epsilon::Half => "12",
        }
    }

    /// Whether a doubled odd-generator mode lies in ℤ + ε.
    pub fn admits(self, m: Mode) -> bool {
        m.is_integral() == (self == Epsilon::Zero)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Zero => "0",
            Epsilon::Half => "1/2",
        })
    }
}

impl FromStr for Epsilon {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "0" => Ok(Epsilon::Zero),
            "12" | "1/2" | "half" => Ok(Epsilon::Half),
            _ => Err(ParseError::Preset(s.to_string())),
        }
    }
}

/// The algebras with closed-form bracket tables.
///
/// * `S`: the super extended Ovsienko–Roger algebra (G modes in ℤ+½).
/// * `Sbar(ε)`: `S` without central terms, G modes in ℤ+ε.
/// * `Stilde(ε)`: `Sbar(ε)` with the four-dimensional centre C1..C4 (C3, C4 odd).
/// * `L1`: the λ=1 Ovsienko–Roger algebra, `[L_m,W_n]` carrying `δ(mC2 + C3)`.
/// * `SVir(ε)`: centreless super-Virasoro.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Preset {
    S,
    Sbar(Epsilon),
    Stilde(Epsilon),
    L1,
    SVir(Epsilon),
}

impl Preset {
    pub const ALL: [Preset; 8] = [
        Preset::S,
        Preset::Sbar(Epsilon::Zero),
        Preset::Sbar(Epsilon::Half),
        Preset::Stilde(Epsilon::Zero),
        Preset::Stilde(Epsilon::Half),
        Preset::L1,
        Preset::SVir(Epsilon::Zero),
        Preset::SVir(Epsilon::Half),
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::S => "S",
            Preset::Sbar(Epsilon::Zero) => "Sbar0",
            Preset::Sbar(Epsilon::Half) => "Sbar12",
            Preset::Stilde(Epsilon::Zero) => "Stilde0",
            Preset::Stilde(Epsilon::Half) => "Stilde12",
            Preset::L1 => "L1",
            Preset::SVir(Epsilon::Zero) => "SVir0",
            Preset::SVir(Epsilon::Half) => "SVir12",
        }
    }

    pub fn families(self) -> &'static [Family] {
        use Family::*;
        match self {
            Preset::S => &[L, W, G, C1, C2],
            Preset::Sbar(_) => &[L, W, G],
            Preset::Stilde(_) => &[L, W, G, C1, C2, C3, C4],
            Preset::L1 => &[L, W, C1, C2, C3],
            Preset::SVir(_) => &[L, G],
        }
    }

    fn epsilon(self) -> Epsilon {
        match self {
            Preset::S | Preset::L1 => Epsilon::Half,
            Preset::Sbar(e) | Preset::Stilde(e) | Preset::SVir(e) => e,
        }
    }

    pub fn parity(self, g: Gen) -> Parity {
        match g.family {
            Family::G | Family::C4 => Parity::Odd,
            Family::C3 if self != Preset::L1 => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn contains(self, g: Gen) -> bool {
        if !self.families().contains(&g.family) {
            return false;
        }
        match g.family {
            Family::L | Family::W => g.mode.is_integral(),
            Family::G => self.epsilon().admits(g.mode),
            _ => g.mode == Mode::ZERO,
        }
    }

    pub fn check(self, g: Gen) -> Result<(), AlgebraError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(AlgebraError::IndexLatticeViolation { gen: g, preset: self })
        }
    }

    /// Non-central generators with |mode| ≤ `window`, then the centre.
    pub fn basis_window(self, window: i64) -> Vec<Gen> {
        let mut out = Vec::new();
        for &f in self.families() {
            if f.is_central() {
                continue;
            }
            for d in -2 * window..=2 * window {
                let g = Gen::new(f, Mode(d));
                if self.contains(g) {
                    out.push(g);
                }
            }
        }
        out.extend(self.families().iter().filter(|f| f.is_central()).map(|&f| Gen::new(f, Mode::ZERO)));
        out
    }

    /// `[x, y]` on basis elements.
    pub fn bracket_gens(self, x: Gen, y: Gen) -> Result<SuperVector, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        if x.family <= y.family {
            Ok(self.rule(x, y))
        } else {
            let sign = -self.parity(x).koszul(self.parity(y));
            Ok(self.rule(y, x).scaled(&int(sign)))
        }
    }

    pub fn bracket<K: Scalar>(self, x: &SuperVector<K>, y: &SuperVector<K>) -> Result<SuperVector<K>, AlgebraError> {
        let mut out = SuperVector::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let r = self.bracket_gens(*a, *b)?;
                let c = ca.clone() * cb.clone();
                for (g, k) in r.iter() {
                    out.add_term(c.clone() * K::from(k.clone()), *g);
                }
            }
        }
        Ok(out)
    }

    /// The table for `x.family ≤ y.family`.
    fn rule(self, x: Gen, y: Gen) -> SuperVector {
        use Family::*;
        let (m, n) = (x.mode.value(), y.mode.value());
        let sum = x.mode + y.mode;
        let delta = sum == Mode::ZERO;
        let centred = !matches!(self, Preset::Sbar(_) | Preset::SVir(_));
        let mut out = SuperVector::zero();
        let mut push = |c: Rational, g: Gen| out.add_term(c, g);
        match (self, x.family, y.family) {
            (Preset::SVir(_), L, L) => push(&m - &n, Gen::new(L, sum)),
            (Preset::SVir(_), L, G) => push(&m / int(2) - &n, Gen::new(G, sum)),
            (Preset::SVir(_), G, G) => push(int(2), Gen::new(L, sum)),
            (_, L, L) => {
                push(&n - &m, Gen::new(L, sum));
                if centred && delta {
                    push((&m * &m * &m - &m) * frac(1, 12), Gen::C1);
                }
            }
            (Preset::L1, L, W) => {
                push(&m + &n, Gen::new(W, sum));
                if delta {
                    push(m, Gen::C2);
                    push(int(1), Gen::C3);
                }
            }
            (_, L, W) => {
                push(&m + &n, Gen::new(W, sum));
                if centred && delta {
                    push(int(1), Gen::C2);
                }
            }
            (_, L, G) => {
                push(n, Gen::new(G, sum));
                if matches!(self, Preset::Stilde(_)) && delta {
                    push(&m * &m + &m, Gen::C3);
                }
            }
            (Preset::Stilde(_), W, G) if delta => push(int(1), Gen::C4),
            (_, G, G) => {
                push(&m + &n, Gen::new(W, sum));
                if centred && delta {
                    push(int(1), Gen::C2);
                }
            }
            _ => {}
        }
        out
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| ParseError::Preset(s.to_string()))
    }
}

/// Grading degree: the mode for L, W, G and 0 for central elements.
pub fn grading_degree(g: Gen) -> Mode {
    if g.is_central() {
        Mode::ZERO
    } else {
        g.mode
    }
}

/// Parity structure of a vector; the zero vector has any parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Pure(Parity),
    Mixed,
}

pub fn homogeneity<K: Scalar>(preset: Preset, v: &SuperVector<K>) -> Homogeneity {
    let mut seen = None;
    for g in v.keys() {
        let p = preset.parity(*g);
        match seen {
            None => seen = Some(p),
            Some(q) if q != p => return Homogeneity::Mixed,
            _ => {}
        }
    }
    seen.map_or(Homogeneity::Zero, Homogeneity::Pure)
}
