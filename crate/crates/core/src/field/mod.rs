//! Arithmetic over GF(2) and GF(4) and small binary polynomials.

pub mod gf2;
pub mod gf4;
pub mod poly;

pub use gf2::{echelon_basis, BitRow, Gf2Matrix};
pub use gf4::{
    additive_form_vectors, cyclic_shift, phi, phi_inv, symplectic_weight, Gf4, Gf4Vector,
    SymbolWeights,
};
pub use poly::{find_polynomial, BinaryPolynomial, PolyKind};
