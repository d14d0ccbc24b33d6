//! Exact-arithmetic toolkit for the prime spectra of finite-dimensional
//! associative algebras: Zariski closed-set lattices, the contraction
//! correspondence of an algebra homomorphism, the restriction/extension
//! functors on closed sets, and a decision procedure for when the pair is
//! adjoint, cross-validated by brute-force oracles.

pub mod algebra;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod exactlin;
pub mod harness;
pub mod ideals;
pub mod io;
pub(crate) mod poly;
pub mod spectrum;

pub use error::{Error, Result};
