//! Exact arithmetic: binary and prime fields, polynomials, truncated series,
//! matrices, and binary forms.

pub mod artin_schreier;
pub mod bitlin;
pub mod embedding;
pub mod forms;
pub mod gf2m;
pub mod matrix;
pub mod poly;
pub mod prime;
pub mod series;
pub mod traits;

pub use embedding::FieldEmbedding;
pub use gf2m::{BinaryField, Fe, ModulusTable};
pub use matrix::Matrix;
pub use poly::Poly;
pub use prime::{Fp, PrimeField};
pub use series::{Series, SeriesRing};
pub use traits::{Field, FiniteField, Ring};
