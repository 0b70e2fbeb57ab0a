//! Cyclic automorphism types of smooth plane curves.
//!
//! For a degree `d >= 4` the crate lists every diagonal type `m,(a,b)` that a
//! smooth plane curve can carry, attaches the parameterized normal form of
//! each, merges equivalent types, checks the families for smooth members over
//! prime fields, and verifies the automorphism groups of the special loci by
//! explicit matrix closures.

pub mod canonical;
pub mod classify;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod field;
pub mod groups;
pub mod normal_form;
pub mod tables;
pub mod types;
pub mod verification;

pub use error::{Error, Result};
