//! Structure constants of `S` and its relatives, with identity checks.

mod checks;
mod generator;
mod preset;

pub use checks::{phi, phi_embedding_check, super_jacobi_check, super_skew_check};
pub use generator::{Family, Gen, Mode, Parity};
pub use preset::{grading_degree, homogeneity, Epsilon, Homogeneity, Preset};

use crate::lincomb::LinComb;
use crate::scalar::Rational;

/// Finite linear combination of generators.
pub type SuperVector<K = Rational> = LinComb<Gen, K>;
