//! Executable finite models for relation calculus in regular categories:
//! relations and congruences over finite sets and algebras, regular images,
//! 3-permutability, connectors and centralizing relations, internal
//! groupoids, and a harness that checks the Goursat-category results on
//! finite instances.

pub mod error;
pub mod algebra;
pub mod connector;
pub mod internal;
pub mod relcalc;
pub mod theorems;

pub use error::{Error, Result};
