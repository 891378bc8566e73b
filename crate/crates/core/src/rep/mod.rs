//! Coefficient modules, induced modules and the probes run on them.

mod induced;
mod module;
mod probes;
mod quotient;
mod whittaker;

pub use induced::{build_induced, conditions, vacuum, verma, InducedModule};
pub use module::{validate_module, FiniteModule};
pub use probes::{
    claim1_reduce, random_vector, restrictedness_probe, simplicity_probe, top_space, top_space_search, Claim1Case, Claim1Step,
    Restrictedness, TopSearch,
};
pub use quotient::{derived_series, QuotientAlgebra, TailIdeal, TdAlgebra};
pub use whittaker::{build_whittaker, WhittakerData};
