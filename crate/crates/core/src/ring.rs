//! The ring contract shared by every backend.
//!
//! A ring is a handle (`Rationals`, `PrimeField { p }`, a table algebra with its
//! structure constants, ...) whose methods act on plain element values. Elements
//! carry no back-pointer to their ring; the handle supplies the context.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::RngCore;
use serde_json::Value;

use crate::combinatorics::catalan;
use crate::error::{Error, Result};
use crate::prime_field::is_prime;

/// Capability flags of a ring.
///
/// `is_commutative` means the ring belongs to the commutative associative class;
/// the flags are monotone: commutative implies associative implies
/// power-associative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDescriptor {
    pub name: String,
    pub is_commutative: bool,
    pub is_associative: bool,
    pub is_power_associative: bool,
    pub has_unit: bool,
    pub characteristic: u64,
}

impl RingDescriptor {
    pub fn new(
        name: impl Into<String>,
        is_commutative: bool,
        is_associative: bool,
        is_power_associative: bool,
        has_unit: bool,
        characteristic: u64,
    ) -> Result<Self> {
        let name = name.into();
        if is_commutative && !is_associative {
            return Err(Error::InvalidDescriptor(format!(
                "{name}: commutative flag requires the associative flag"
            )));
        }
        if is_associative && !is_power_associative {
            return Err(Error::InvalidDescriptor(format!(
                "{name}: associative flag requires the power-associative flag"
            )));
        }
        if characteristic != 0 && !is_prime(characteristic) {
            return Err(Error::InvalidDescriptor(format!(
                "{name}: characteristic {characteristic} is neither 0 nor prime"
            )));
        }
        Ok(Self {
            name,
            is_commutative,
            is_associative,
            is_power_associative,
            has_unit,
            characteristic,
        })
    }

    /// True when division by `k` is exact in a ring of this characteristic.
    pub fn admits_division_by(&self, k: &BigInt) -> bool {
        if k.is_zero() {
            return false;
        }
        self.characteristic == 0 || !(k % BigInt::from(self.characteristic)).is_zero()
    }

    pub fn require_division_by(&self, k: &BigInt) -> Result<()> {
        if self.admits_division_by(k) {
            Ok(())
        } else {
            Err(Error::DivisionUnavailable {
                divisor: k.clone(),
                characteristic: self.characteristic,
            })
        }
    }
}

/// Arithmetic contract of a ring with exact division by integers.
///
/// Addition is an abelian group; multiplication is bilinear but need not be
/// commutative or associative. Implementations keep elements in canonical form,
/// so [`Ring::eq`] is structural.
pub trait Ring: Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn descriptor(&self) -> &RingDescriptor;

    fn zero(&self) -> Self::Elem;

    /// Multiplicative unit, when the ring has one.
    fn one(&self) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Returns `y` with `k·y = x`. Fails when `k` is zero or shares a factor
    /// with the characteristic.
    fn div_by_int(&self, a: &Self::Elem, k: &BigInt) -> Result<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    /// Validates that a value is a well-formed element of this ring.
    fn check(&self, a: &Self::Elem) -> Result<()>;

    /// `a^n` for `n >= 1`. Only meaningful on power-associative rings.
    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        pow_by_squaring(self, a, n)
    }

    /// Average of all bracketed `n`-fold products of `a`.
    fn ass_power(&self, a: &Self::Elem, n: u32) -> Result<Self::Elem> {
        ass_power_by_convolution(self, a, n)
    }

    /// The integer `k` as `k·1`; `None` without a unit.
    fn from_int(&self, k: i64) -> Option<Self::Elem>;

    /// Random element with small integer coefficients in `[-bound, bound]`.
    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Self::Elem;

    /// Canonical human-readable form.
    fn render(&self, a: &Self::Elem) -> String;

    /// JSON encoding used by matrix files.
    fn encode(&self, a: &Self::Elem) -> Value;

    fn decode(&self, v: &Value) -> Result<Self::Elem>;

    fn name(&self) -> &str {
        &self.descriptor().name
    }
}

/// Exact equality after checking both values belong to `ring`.
pub fn ring_equal<R: Ring + ?Sized>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<bool> {
    ring.check(a)?;
    ring.check(b)?;
    Ok(ring.eq(a, b))
}

/// Left-to-right binary powering; `n >= 1`.
pub fn pow_by_squaring<R: Ring + ?Sized>(ring: &R, a: &R::Elem, n: u32) -> R::Elem {
    assert!(n >= 1, "pow requires a positive exponent");
    let mut acc = a.clone();
    let top = 31 - n.leading_zeros();
    for bit in (0..top).rev() {
        acc = ring.mul(&acc, &acc);
        if (n >> bit) & 1 == 1 {
            acc = ring.mul(&acc, a);
        }
    }
    acc
}

/// Sum over all bracketings via `P_1 = a`, `P_k = Σ_{i<k} P_i · P_{k-i}`,
/// divided by the bracketing count.
pub fn ass_power_by_convolution<R: Ring + ?Sized>(
    ring: &R,
    a: &R::Elem,
    n: u32,
) -> Result<R::Elem> {
    assert!(n >= 1, "ass_power requires a positive exponent");
    let count = catalan(n as usize);
    if count.is_one() {
        return Ok(if n == 1 { a.clone() } else { ring.mul(a, a) });
    }
    let mut partial: Vec<R::Elem> = Vec::with_capacity(n as usize);
    partial.push(a.clone());
    for k in 2..=n as usize {
        let mut acc: Option<R::Elem> = None;
        for i in 1..k {
            let term = ring.mul(&partial[i - 1], &partial[k - i - 1]);
            acc = Some(match acc {
                None => term,
                Some(s) => ring.add(&s, &term),
            });
        }
        partial.push(acc.expect("k >= 2 has at least one split"));
    }
    ring.div_by_int(&partial[n as usize - 1], &BigInt::from(count))
}

/// Ring-agnostic `k·a` via double-and-add; used for test data and scalar shifts.
pub fn scale<R: Ring + ?Sized>(ring: &R, a: &R::Elem, k: i64) -> R::Elem {
    let mut result = ring.zero();
    let mut base = a.clone();
    let mut m = k.unsigned_abs();
    while m > 0 {
        if m & 1 == 1 {
            result = ring.add(&result, &base);
        }
        base = ring.add(&base, &base);
        m >>= 1;
    }
    if k < 0 {
        ring.neg(&result)
    } else {
        result
    }
}
