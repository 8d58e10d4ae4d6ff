//! Exact computations with finite-dimensional bound quiver algebras over the rationals.

pub mod annquot;
pub mod catalog;
pub mod cli;
pub mod endo;
pub mod error;
pub mod homological;
pub mod linalg;
pub mod presentations;
pub mod random;
pub mod representations;
pub mod session;
pub mod suite;
pub mod tau;

pub use error::{Error, Result};
