//! Exact q-series algebra of bi-brackets.
//!
//! Bi-brackets are q-series indexed by pairs of tuples `(s; r)`. Their span
//! is closed under multiplication in two ways, through the stuffle product
//! and through a shuffle product conjugated by the partition involution.
//! This crate evaluates the series exactly, implements both products and
//! the brackets built from them, and searches for linear relations.

pub mod arith;
pub mod brackets;
pub mod double_shuffle;
pub mod error;
pub mod modular;
pub mod relations;
pub mod words;

pub use error::{Error, Result};
