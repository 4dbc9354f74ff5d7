//! Exact symbolic engine for the K-theoretic 2-leg vertex.

pub mod checks;
pub mod conifold;
pub mod error;
pub mod fock;
pub mod localization;
pub mod par;
pub mod partitions;
pub mod scalars;
pub mod symfunc;
pub mod vertex;

pub use error::{Error, Result};
