//! Structured ring backends: quaternions (noncommutative associative),
//! octonions (power-associative, nonassociative), structure-constant table
//! algebras (arbitrary bilinear products), matrix rings, and the symbolic
//! polynomial and free-algebra rings used to check identities exactly.

pub mod matrix_ring;
pub mod octonion;
pub mod quaternion;
pub mod symbolic;
pub mod table;

pub use matrix_ring::MatrixRing;
pub use octonion::{octonion_table, Octonion, Octonions};
pub use quaternion::{Quaternion, Quaternions};
pub use symbolic::{
    free_symbolic_matrix, generic_commutative_matrix, generic_free_matrix, CommutativePolynomial,
    FreeAlgebra, FreeAlgebraElement, PolyRing, SymbolicMatrix,
};
pub use table::{make_table_algebra, skew_cube_algebra, TableAlgebra, TableElement};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{decode_rational, Rational};
use crate::ring::Ring;

/// `(xy)z - x(yz)`.
pub fn associator<R: Ring + ?Sized>(ring: &R, x: &R::Elem, y: &R::Elem, z: &R::Elem) -> R::Elem {
    ring.sub(&ring.mul(&ring.mul(x, y), z), &ring.mul(x, &ring.mul(y, z)))
}

/// `c0 + c1name1 + ...`, every coefficient shown so the form is positional.
pub(crate) fn render_basis_sum(coefficients: &[Rational], names: &[&str]) -> String {
    coefficients
        .iter()
        .zip(names)
        .map(|(c, name)| format!("{c}{name}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn decode_coefficients(v: &Value, dimension: usize) -> Result<Vec<Rational>> {
    let items = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("expected {dimension} coefficients, got {v}")))?;
    if items.len() != dimension {
        return Err(Error::Parse(format!(
            "expected {dimension} coefficients, got {}",
            items.len()
        )));
    }
    items.iter().map(decode_rational).collect()
}
