//! Exact dense linear algebra over the prime field `GF(p)`.
//!
//! Subspaces are kept in reduced row-echelon form, so equality of subspaces
//! is equality of representations.

mod field;
mod matrix;
mod subspace;

pub use field::{inv_mod, is_prime, Fp};
pub use matrix::Mat;
pub use subspace::{QuotientSpace, Subspace};
