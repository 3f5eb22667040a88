//! Exact arithmetic over prime fields: residues, dense matrices, subspaces,
//! and univariate polynomials with factorization.

mod factor;
mod field;
mod matrix;
mod poly;
mod subspace;

pub use factor::{
    distinct_degree, equal_degree, factor_poly, factor_poly_seeded, is_irreducible,
    square_free_decomposition, Factorization,
};
pub use field::{is_prime, FieldElement, Modulus};
pub use matrix::{solve_linear, Matrix, Rref};
pub use poly::{
    characteristic_polynomial, is_nilpotent, minimal_polynomial, vector_minimal_polynomial, Poly,
};
pub use subspace::Subspace;
