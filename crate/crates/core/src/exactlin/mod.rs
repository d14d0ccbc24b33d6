//! Exact scalar arithmetic over Q and F_p, with canonical-form linear
//! algebra (unique RREF bases) so that every downstream equality of ideals
//! and closed sets is decidable by plain comparison.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;

