//! Algebras: presentations, group algebras, structure-constant tables.

pub mod closure;
pub mod group;
pub mod io;
pub mod ncpoly;
pub mod table;

use thiserror::Error;

pub use closure::{close_presentation, Presentation};
pub use group::{group_algebra, GroupTable};
pub use io::{load_presentation, parse_presentation};
pub use ncpoly::{parse_poly, NcPoly, Term, Word};
pub use table::{AlgebraClass, AlgebraTable, CanonicalForm, Generator, Quotient, TableParts, WordNode};

use crate::linalg::FieldError;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("closure did not stabilize below degree {bound}: {detail}")]
    NonTerminating { bound: usize, detail: String },
    #[error("relations are inconsistent: 1 lies in the ideal")]
    InconsistentRelations,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("unsupported algebra class: {0}")]
    UnsupportedClass(String),
    #[error("multiplication is not associative on basis triple ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector is not a two-sided identity")]
    BadUnit,
    #[error("generators span only {reached} of {dim} dimensions")]
    NotGenerated { reached: usize, dim: usize },
    #[error("relation does not vanish: {0}")]
    RelationViolated(String),
    #[error("malformed algebra data: {0}")]
    Shape(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("{location}: {message}")]
    Parse { location: String, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
}
