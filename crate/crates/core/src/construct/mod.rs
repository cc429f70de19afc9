//! Generator-matrix constructions.

mod anticode;
mod asep;
mod lengthen;
mod simplex;

pub use anticode::{anticode_family, AnticodeMode};
pub use asep::{asep, augment, star, AsepMethod};
pub use lengthen::{
    combination_x, construction_x, enlarge, generalized_x, generalized_x_bound, one_third,
    one_third_minus, ConstructionXInputs, SplitCode,
};
pub use simplex::{
    binary_simplex, cyclic_simplex, quaternary_simplex, simplex, SimplexKind, SimplexMatrix,
};
