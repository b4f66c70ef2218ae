//! Homological invariants of finite-dimensional algebras over prime fields,
//! and executable checks of the higher Auslander correspondence between
//! d-cluster-tilting modules and d-Auslander algebras.
//!
//! Conventions (fixed crate-wide): modules are right modules, vectors are
//! rows, paths compose left to right, and `P_i = e_i A`.

pub mod algebra;
pub mod auslander;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod repn;
pub mod selftest;

pub use error::{Error, Result};
