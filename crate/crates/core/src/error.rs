use alloc::string::String;

use thiserror::Error;

use crate::algebra::{Gen, Preset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{gen} is outside the index lattice of {preset}")]
    IndexLatticeViolation { gen: Gen, preset: Preset },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid generator `{0}` (expected e.g. L:2, G:-1/2, C1)")]
    Generator(String),
    #[error("invalid mode `{0}`")]
    Mode(String),
    #[error("unknown algebra preset `{0}`")]
    Preset(String),
    #[error("invalid rational `{0}`")]
    Rational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("pair ({0}, {1}) lies outside the cocycle window {2}")]
    WindowTooSmall(Gen, Gen, i64),
    #[error("{0} is not a generator of the centreless algebra")]
    NotInAlgebra(Gen),
    #[error("window must be at least {min}, got {got}")]
    WindowBelowMinimum { min: i64, got: i64 },
    #[error("cocycles have different ε")]
    MixedEpsilon,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("module axioms fail: {0}")]
    NonModuleAction(String),
    #[error("simplicity conditions fail: {0}")]
    ConditionViolation(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("result reaches level {level} beyond the weight bound {bound} (half-units)")]
    BoundExceeded { level: i64, bound: i64 },
    #[error("invalid Whittaker data: {0}")]
    InvalidWhittakerData(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
