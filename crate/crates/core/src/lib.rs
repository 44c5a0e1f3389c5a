//! Homological invariants of finite-dimensional algebras over finite fields
//! and representation-type certificates built from them.

pub mod algebra;
pub mod cli;
pub mod frobenius;
pub mod linalg;
pub mod module;
pub mod repcert;
pub mod resolution;
