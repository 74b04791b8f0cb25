//! Exact dimension counting for free and metabelian Lie algebras, the
//! eigenspaces of an involution on them, and a per-level ledger of the
//! inequality behind the non-abelian Chabauty dimension hypothesis.
//!
//! Everything is exact (`BigUint` / `BigRational`); no floating point is
//! used anywhere.

pub mod cli;
pub mod error;
pub mod exec;
pub mod ledger;
pub mod lie;
pub mod report;
pub mod series;
pub mod sign;

pub use error::{Error, Result};
pub use exec::Parallelism;
