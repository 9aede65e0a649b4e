//! Exact computer algebra for chains of Drinfeld twists of `U(so(M))`.
//!
//! Everything is evaluated in the defining representation and its tensor
//! powers over the Gaussian rationals, so every identity checked here is an
//! exact matrix equality.

pub mod algebra;
pub mod chain;
pub mod cli;
pub mod error;
pub mod expr;
pub mod frobenius;
pub mod io;
pub mod linalg;
pub mod parallel;
pub mod report;
pub mod rmatrix;

pub use error::{Error, Result};
