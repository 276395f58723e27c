//! Exact determinant engines built from power sums over (sub)diagonals.
//!
//! The determinant of an `n×n` matrix over a commutative ring can be written
//! using only additions, `n`-th powers and a final division by `n!`. That form
//! keeps a meaning over noncommutative, power-associative and (with bracketing
//! averages) fully nonassociative rings. This crate provides the ring backends,
//! the combinatorial enumeration, every engine and the verification tooling.

pub mod algebras;
pub mod combinatorics;
pub mod engines;
pub mod error;
pub mod matrix;
pub mod prime_field;
pub mod rational;
pub mod ring;
pub mod verification;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use ring::{Ring, RingDescriptor};
