//! Numerical certificates for nilpotent complex matrices.
//!
//! A nonzero square matrix whose Hermitian real part `(T + T*)/2` or
//! imaginary part `(T - T*)/(2i)` is semidefinite can never be nilpotent.
//! This crate turns that fact and its relatives into executable checks:
//!
//! * [`matrix`]: dense complex square matrices and the Cartesian decomposition.
//! * [`spectral`]: a cyclic Jacobi eigensolver for Hermitian matrices,
//!   definiteness classes and the `σ(A) ∩ σ(-A)` symmetry analysis.
//! * [`nilpotency`]: nilpotency index, normality defect, Gelfand sequences.
//! * [`theorems`]: contrapositive oracles, certificates and [`theorems::analyze`].
//! * [`generators`]: seeded random unitaries, nilpotents and accretive matrices.
//! * [`volterra`]: trapezoid discretization of the Volterra integration operator.
//! * [`gallery`]: the named fixture matrices and their recorded verdicts.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `nilcert` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod gallery;
pub mod generators;
pub mod matrix;
pub mod nilpotency;
pub mod spectral;
pub mod theorems;
pub mod tolerance;
pub mod volterra;

pub use matrix::{CartesianDecomposition, ComplexMatrix, MatrixError};
pub use num_complex::Complex64;
pub use tolerance::Tolerances;
