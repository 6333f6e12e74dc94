//! Exact isotypical decompositions for finite-group representations over
//! prime splitting fields, with graded and cyclic Galois-cover models.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod character;
pub mod cover;
pub mod cyclic;
pub mod error;
pub mod group;
pub mod monomial;
pub mod rep;
pub mod report;

pub use error::{Error, Result};
