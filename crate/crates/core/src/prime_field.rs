//! Prime fields `Z/p`, residues kept in `[0, p)`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, RngCore};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingDescriptor};

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    descriptor: RingDescriptor,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidDescriptor(format!("modulus {p} is not prime")));
        }
        Ok(Self {
            p,
            descriptor: RingDescriptor::new(format!("mod:{p}"), true, true, true, true, p)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Least nonnegative residue of an arbitrary integer.
    pub fn reduce(&self, k: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((k % &m) + &m) % &m;
        r.to_u64().expect("residue below a u64 modulus")
    }

    fn inverse(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> Option<u64> {
        Some(1 % self.p)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn div_by_int(&self, a: &u64, k: &BigInt) -> Result<u64> {
        self.descriptor.require_division_by(k)?;
        Ok(mul_mod(*a, self.inverse(self.reduce(k)), self.p))
    }

    fn check(&self, a: &u64) -> Result<()> {
        if *a >= self.p {
            return Err(Error::RingMismatch(format!(
                "residue {a} is not reduced modulo {}",
                self.p
            )));
        }
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<u64> {
        Some(self.reduce(&BigInt::from(k)))
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> u64 {
        let b = bound as i64;
        self.reduce(&BigInt::from(rng.gen_range(-b..=b)))
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn encode(&self, a: &u64) -> Value {
        Value::String(a.to_string())
    }

    fn decode(&self, v: &Value) -> Result<u64> {
        let k: BigInt = match v {
            Value::String(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid residue `{s}`")))?,
            Value::Number(n) if n.is_i64() => BigInt::from(n.as_i64().unwrap()),
            other => return Err(Error::Parse(format!("expected an integer, got {other}"))),
        };
        Ok(self.reduce(&k))
    }
}
