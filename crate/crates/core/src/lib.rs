//! Exact linear and affine stress spaces of simplicial complexes, with
//! runnable checks of the lower bound and equality-propagation theorems for
//! centrally symmetric complexes and polytopes.

pub mod algebra;
pub mod complex;
pub mod error;
pub mod families;
pub mod instance;
pub mod linalg;
pub mod polytope;
pub mod stress;
pub mod theorems;

pub use error::{Error, Result};
