//! Arithmetic on a family of genus-2 curves in characteristic 2, their
//! Jacobians and automorphisms, and Frobenius-periodic modules over
//! truncated power series rings.

pub mod algebra;
pub mod curve;
pub mod error;
pub mod group_action;
pub mod jacobian;
pub mod moduli;
pub mod periodic;

pub use error::{Error, Result};

/// Polynomials over a binary field.
pub type GfPoly = algebra::Poly<algebra::Fe>;
/// Matrices over a binary field.
pub type GfMatrix = algebra::Matrix<algebra::Fe>;
/// Truncated power series over a binary field.
pub type GfSeries = algebra::Series<algebra::Fe>;
pub use periodic::SeriesMatrix;
