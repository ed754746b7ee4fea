//! Numerics for the weighted meromorphic Bergman spaces `A^p_{α,β}(D*)`.

pub mod error;
pub mod family;
pub mod inequalities;
pub mod kernel;
pub mod operators;
pub mod report;
pub mod space;
pub mod specfun;

pub use error::{Error, Result};
