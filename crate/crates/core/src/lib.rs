//! Exact symbolic computation on the Z₃-graded quantum superplane.
//!
//! Coefficients live in ℚ(j)[q, q⁻¹] ([`scalar`]); elements of the free
//! algebra are reduced against a [`algebra::Presentation`] to a canonical
//! normal form. On top of that sit the graded tensor product, the Hopf
//! structure maps, the exterior differential with `d³ = 0`, the operator
//! algebra of `T`, `∇` and the partial derivatives, and the matrix entries
//! of the quantum supergroup.

pub mod algebra;
pub mod calculus;
pub mod cli;
pub mod costructure;
pub mod error;
pub mod glqj;
pub mod operators;
pub mod presentations;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod syntax;
pub mod tensor;

pub use error::{Error, Result};
