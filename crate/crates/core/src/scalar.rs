//! Scalars: arbitrary-precision rationals and the quadratic field ℚ(√2).

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// Field operations needed by [`crate::lincomb::LinComb`] and the linear algebra.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + From<Rational>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + From<Rational>
{
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// `r/2` for a doubled mode `r`.
pub fn half(doubled: i64) -> Rational {
    frac(doubled, 2)
}

/// `a + b√2` with rational `a`, `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn sqrt2() -> Self {
        QSqrt2::new(Rational::zero(), Rational::one())
    }

    pub fn conjugate(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }

    /// `a² − 2b²`, nonzero unless the element is zero (√2 is irrational).
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(2) * &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conjugate();
        Some(QSqrt2::new(c.a / &n, c.b / n))
    }
}

impl From<Rational> for QSqrt2 {
    fn from(a: Rational) -> Self {
        QSqrt2::new(a, Rational::zero())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) => write!(f, "{}+{}√2", self.a, self.b),
        }
    }
}

impl Zero for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt2 {
    fn one() -> Self {
        QSqrt2::new(Rational::one(), Rational::zero())
    }
}

impl Add for QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: QSqrt2) -> QSqrt2 {
        QSqrt2::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2::new(-self.a, -self.b)
    }
}

impl Mul for QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: QSqrt2) -> QSqrt2 {
        let a = &self.a * &o.a + int(2) * &self.b * &o.b;
        let b = &self.a * &o.b + &self.b * &o.a;
        QSqrt2::new(a, b)
    }
}

impl Div for QSqrt2 {
    type Output = QSqrt2;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: QSqrt2) -> QSqrt2 {
        self * o.inv().expect("division by zero in ℚ(√2)")
    }
}
