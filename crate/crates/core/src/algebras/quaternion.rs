use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::RngCore;
use serde_json::Value;

use super::{decode_coefficients, render_basis_sum};
use crate::error::{Error, Result};
use crate::rational::{random_rational, rat, Rational};
use crate::ring::{Ring, RingDescriptor};

/// `c0 + c1 i + c2 j + c3 k` with rational coefficients.
pub type Quaternion = [Rational; 4];

/// Hamilton quaternions over the rationals: `i² = j² = k² = ijk = -1`.
#[derive(Debug, Clone)]
pub struct Quaternions {
    descriptor: RingDescriptor,
}

impl Default for Quaternions {
    fn default() -> Self {
        Self::new()
    }
}

impl Quaternions {
    pub fn new() -> Self {
        Self {
            descriptor: RingDescriptor::new("quaternion", false, true, true, true, 0)
                .expect("static flags are monotone"),
        }
    }

    pub fn from_ints(c: [i64; 4]) -> Quaternion {
        c.map(rat)
    }

    pub fn i() -> Quaternion {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn j() -> Quaternion {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn k() -> Quaternion {
        Self::from_ints([0, 0, 0, 1])
    }
}

impl Ring for Quaternions {
    type Elem = Quaternion;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Quaternion {
        std::array::from_fn(|_| Rational::zero())
    }

    fn one(&self) -> Option<Quaternion> {
        let mut e = self.zero();
        e[0] = Rational::one();
        Some(e)
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        std::array::from_fn(|t| &a[t] + &b[t])
    }

    fn sub(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        std::array::from_fn(|t| &a[t] - &b[t])
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        std::array::from_fn(|t| -&a[t])
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = a;
        let [b0, b1, b2, b3] = b;
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ]
    }

    fn div_by_int(&self, a: &Quaternion, k: &BigInt) -> Result<Quaternion> {
        self.descriptor.require_division_by(k)?;
        let k = Rational::from_integer(k.clone());
        Ok(std::array::from_fn(|t| &a[t] / &k))
    }

    fn check(&self, _a: &Quaternion) -> Result<()> {
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<Quaternion> {
        Some(Self::from_ints([k, 0, 0, 0]))
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Quaternion {
        std::array::from_fn(|_| random_rational(rng, bound))
    }

    fn render(&self, a: &Quaternion) -> String {
        render_basis_sum(a, &["", "i", "j", "k"])
    }

    fn encode(&self, a: &Quaternion) -> Value {
        Value::Array(a.iter().map(|c| Value::String(c.to_string())).collect())
    }

    fn decode(&self, v: &Value) -> Result<Quaternion> {
        let c = decode_coefficients(v, 4)?;
        c.try_into()
            .map_err(|_| Error::Parse("quaternion needs 4 coefficients".into()))
    }
}
