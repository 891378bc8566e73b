//! Exponent combinatorics, the total orders on them, and normal ordering.

mod engine;
mod exponent;

pub use engine::{BaseAction, Element, Layout, Monomial, Rank, Straightener, WordOrder};
pub use exponent::{
    complement_position, lex_greater, principal_greater, revlex_greater, word_level2, ExponentTriple, ExponentVector,
};
