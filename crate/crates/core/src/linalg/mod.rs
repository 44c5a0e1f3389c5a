//! Exact linear algebra over finite fields.

pub mod field;
pub mod matrix;
pub mod poly;

pub use field::{Field, FieldElem, FieldError, FieldSpec};
pub use matrix::{LinalgError, Matrix, Subspace};
