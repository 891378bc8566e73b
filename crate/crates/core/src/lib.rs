//! Exact computer algebra for the super extended Ovsienko–Roger algebra `S`
//! and its relatives: structure constants, the λ-bracket calculus it comes
//! from, 2-cocycles of its centreless forms, and PBW-straightened induced
//! modules (Verma, Whittaker, `T_d`-induced).
//!
//! Everything is computed over `BigRational`; there is no floating point.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod cohomology;
pub mod conformal;
pub mod error;
pub mod linalg;
pub mod lincomb;
pub mod pbw;
pub mod rep;
pub mod report;
pub mod scalar;

pub use algebra::{Epsilon, Family, Gen, Mode, Parity, Preset, SuperVector};
pub use error::{AlgebraError, CohomologyError, ParseError, RepError};
pub use report::{CheckReport, Witness};
pub use scalar::{QSqrt2, Rational, Scalar};
