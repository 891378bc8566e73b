use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use core::str::FromStr;

use crate::error::ParseError;
use crate::scalar::{half, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    L,
    W,
    G,
    C1,
    C2,
    C3,
    C4,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::L, Family::W, Family::G, Family::C1, Family::C2, Family::C3, Family::C4];

    pub fn is_central(self) -> bool {
        matches!(self, Family::C1 | Family::C2 | Family::C3 | Family::C4)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::L => "L",
            Family::W => "W",
            Family::G => "G",
            Family::C1 => "C1",
            Family::C2 => "C2",
            Family::C3 => "C3",
            Family::C4 => "C4",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| ParseError::Generator(s.to_string()))
    }
}

/// A half-integer stored doubled: `Mode(3)` is 3/2, `Mode(-4)` is −2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mode(pub i64);

impl Mode {
    pub const ZERO: Mode = Mode(0);

    pub const fn int(m: i64) -> Mode {
        Mode(2 * m)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integral(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integral().then_some(self.0 / 2)
    }

    pub fn value(self) -> Rational {
        half(self.0)
    }

    /// ⌈m⌉ for the half-integer m.
    pub fn ceil(self) -> i64 {
        self.0.div_euclid(2) + self.0.rem_euclid(2)
    }
}

impl Add for Mode {
    type Output = Mode;
    fn add(self, o: Mode) -> Mode {
        Mode(self.0 + o.0)
    }
}

impl Sub for Mode {
    type Output = Mode;
    fn sub(self, o: Mode) -> Mode {
        Mode(self.0 - o.0)
    }
}

impl Neg for Mode {
    type Output = Mode;
    fn neg(self) -> Mode {
        Mode(-self.0)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Mode {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Mode(s.to_string());
        match s.split_once('/') {
            None => s.trim().parse::<i64>().map(Mode::int).map_err(|_| bad()),
            Some((n, "2")) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                Ok(Mode(n))
            }
            Some(_) => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// (−1)^{|x||y|}
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        if self == o {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parity {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "even" | "0" => Ok(Parity::Even),
            "odd" | "1" => Ok(Parity::Odd),
            _ => Err(ParseError::Generator(s.to_string())),
        }
    }
}

/// A basis element `X_m` of one of the presets. Central generators carry mode 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub family: Family,
    pub mode: Mode,
}

impl Gen {
    pub const C1: Gen = Gen { family: Family::C1, mode: Mode::ZERO };
    pub const C2: Gen = Gen { family: Family::C2, mode: Mode::ZERO };
    pub const C3: Gen = Gen { family: Family::C3, mode: Mode::ZERO };
    pub const C4: Gen = Gen { family: Family::C4, mode: Mode::ZERO };

    pub const fn new(family: Family, mode: Mode) -> Gen {
        Gen { family, mode }
    }

    pub const fn l(m: i64) -> Gen {
        Gen::new(Family::L, Mode::int(m))
    }

    pub const fn w(m: i64) -> Gen {
        Gen::new(Family::W, Mode::int(m))
    }

    /// `G_{r}` with `r` given doubled, e.g. `g2(-1)` is `G_{-1/2}`.
    pub const fn g2(doubled: i64) -> Gen {
        Gen::new(Family::G, Mode(doubled))
    }

    /// `G_m` with integral `m` (Ramond type).
    pub const fn g(m: i64) -> Gen {
        Gen::new(Family::G, Mode::int(m))
    }

    pub fn is_central(self) -> bool {
        self.family.is_central()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_central() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}:{}", self.family, self.mode)
        }
    }
}

impl FromStr for Gen {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (fam, mode) = match s.split_once(':') {
            Some((f, m)) => (f, Some(m)),
            None => (s, None),
        };
        let family: Family = fam.parse().map_err(|_| ParseError::Generator(s.to_string()))?;
        let mode = match mode {
            Some(m) => m.parse::<Mode>()?,
            None if family.is_central() => Mode::ZERO,
            None => return Err(ParseError::Generator(s.to_string())),
        };
        if family.is_central() && mode != Mode::ZERO {
            return Err(ParseError::Generator(s.to_string()));
        }
        Ok(Gen::new(family, mode))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_display_and_parse() {
        assert_eq!(Mode(-1).to_string(), "-1/2");
        assert_eq!(Mode(6).to_string(), "3");
        assert_eq!("5/2".parse::<Mode>().unwrap(), Mode(5));
        assert_eq!("-3".parse::<Mode>().unwrap(), Mode(-6));
        assert!("1/3".parse::<Mode>().is_err());
    }

    #[test]
    fn gen_round_trip() {
        for g in [Gen::l(-3), Gen::g2(5), Gen::w(0), Gen::C1, Gen::C4] {
            assert_eq!(g.to_string().parse::<Gen>().unwrap(), g);
        }
        assert!("C1:2".parse::<Gen>().is_err());
        assert!("L".parse::<Gen>().is_err());
        assert!("X:1".parse::<Gen>().is_err());
    }

    #[test]
    fn ceil_of_half_integers() {
        assert_eq!(Mode(3).ceil(), 2);
        assert_eq!(Mode(-3).ceil(), -1);
        assert_eq!(Mode(4).ceil(), 2);
    }

    #[test]
    fn koszul_sign() {
        assert_eq!(Parity::Odd.koszul(Parity::Odd), -1);
        assert_eq!(Parity::Odd.koszul(Parity::Even), 1);
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
    }
}
