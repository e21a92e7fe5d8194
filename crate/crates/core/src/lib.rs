//! Integrated density of states of the one-dimensional Anderson-Bernoulli
//! operator `-Δ + ζ V` on the half line, with `V` an i.i.d. Bernoulli(p)
//! potential.
//!
//! The crate has three layers:
//!
//! - [`model`]: potential sampling, gap decomposition and assembly of the
//!   Hamiltonian and its two bracketing comparison operators as symmetric
//!   tridiagonal matrices (direct sums are encoded by zero couplings).
//! - [`spectral`]: linear-time Sturm counting, bisection eigensolving,
//!   closed-form Dirichlet spectra, Chebyshev polynomials of the second kind
//!   and the secular-equation solver for corner-perturbed Laplacians.
//! - [`ids`]: closed forms at rational energies, the truncated series on
//!   `(0, 4)`, critical-disorder bounds and Monte Carlo estimates.
//!
//! [`cli`] wires these into the `bernoulli-ids` binary.

pub mod cli;
pub mod error;
pub mod ids;
pub mod model;
pub mod spectral;

pub use error::{Error, Result};
