//! Exact computation with pp formulas, module duality, and finitely
//! presented functors over finite-dimensional algebras.
//!
//! Everything is computed over a prime field `GF(p)` with exact arithmetic:
//! no floating point, no tolerances. The toolkit covers
//!
//! * dense linear algebra over `GF(p)` with canonical (RREF) subspaces,
//! * finite-dimensional algebras given by structure constants or by a
//!   bound quiver, together with left and right modules over them,
//! * pp formulas `∃ȳ (Ax̄ = Bȳ)` with a small textual DSL, their solution
//!   sets, implication, free realizations, and the elementary dual `Dφ`,
//! * finitely presented functors given by a presentation morphism, their
//!   pointwise evaluation, duals, preduals, and the tensor-side dual `dF`,
//! * homological machinery: free resolutions, `Ext`, minimal presentations,
//!   the transpose and the translate `τ`, stable Hom in both flavors,
//! * a deterministic, seedable verification registry that exercises the
//!   identities binding all of the above and emits machine-readable reports.

pub mod algebra;
pub mod error;
pub mod functor;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod module;
pub mod pp;
pub mod verify;

pub use algebra::{Algebra, QuiverPresentation};
pub use error::Error;
pub use linalg::{Fp, Mat, QuotientSpace, Subspace};
pub use module::{Module, ModuleMap, Side};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
