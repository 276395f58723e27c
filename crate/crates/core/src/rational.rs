//! The field of rationals, backed by `num-rational` (always reduced, positive
//! denominator).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingDescriptor};

pub type Rational = BigRational;

#[derive(Debug, Clone)]
pub struct Rationals {
    descriptor: RingDescriptor,
}

impl Default for Rationals {
    fn default() -> Self {
        Self::new()
    }
}

impl Rationals {
    pub fn new() -> Self {
        Self {
            descriptor: RingDescriptor::new("rational", true, true, true, true, 0)
                .expect("static flags are monotone"),
        }
    }
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

pub(crate) fn decode_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(rat(n.as_i64().unwrap())),
        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
    }
}

pub(crate) fn random_rational(rng: &mut dyn RngCore, bound: u32) -> Rational {
    let b = bound as i64;
    rat(rng.gen_range(-b..=b))
}

impl Ring for Rationals {
    type Elem = Rational;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Option<Rational> {
        Some(Rational::one())
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn div_by_int(&self, a: &Rational, k: &BigInt) -> Result<Rational> {
        self.descriptor.require_division_by(k)?;
        Ok(a / Rational::from_integer(k.clone()))
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn check(&self, a: &Rational) -> Result<()> {
        if a.denom() <= &BigInt::zero() {
            return Err(Error::RingMismatch(format!("non-canonical rational {a}")));
        }
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<Rational> {
        Some(rat(k))
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Rational {
        random_rational(rng, bound)
    }

    fn render(&self, a: &Rational) -> String {
        a.to_string()
    }

    fn encode(&self, a: &Rational) -> Value {
        Value::String(a.to_string())
    }

    fn decode(&self, v: &Value) -> Result<Rational> {
        decode_rational(v)
    }
}
