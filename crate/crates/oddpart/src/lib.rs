//! Exact machinery for bounding products of odd-order composition factors
//! of finite groups: permutation groups with deterministic
//! base-and-strong-generating-set computations, composition-factor
//! analysis, Zsigmondy prime search, order formulas for the simple groups
//! of Lie type, matrix groups over small finite fields, and the exhaustive
//! verification campaigns tying them together.

pub mod catalog;
pub mod harness;
pub mod lie;
pub mod linrep;
pub mod numth;
pub mod perm;
pub mod report;
pub mod structure;

#[cfg(doctest)]
mod book;

mod error;
pub use error::{Error, Result};
