//! Exact computations around total positivity and Plücker positivity for
//! type A partial flag varieties.
//!
//! All arithmetic is over `ℚ` with arbitrary precision. Subsets of `[n]`
//! and matrix indices are 1-based in the public API.

pub mod coxeter;
pub mod error;
pub mod exact;
pub mod flags;
pub mod lp;
pub mod positivity;
pub mod sample;
pub mod strata;

pub use error::{Error, Result};
