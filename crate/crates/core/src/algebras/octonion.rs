use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::RngCore;
use serde_json::Value;

use super::{decode_coefficients, render_basis_sum};
use crate::error::{Error, Result};
use crate::rational::{random_rational, rat, Rational};
use crate::ring::{Ring, RingDescriptor};

/// `c0 + c1 e1 + ... + c7 e7` with rational coefficients.
pub type Octonion = [Rational; 8];

/// Quaternionic triples `e_a e_b = e_c` (and cyclic shifts): the lines
/// `(i, i+1, i+3) mod 7` of the Fano plane, so `e1 e2 = e4`.
pub const FANO_LINES: [[usize; 3]; 7] = [
    [1, 2, 4],
    [2, 3, 5],
    [3, 4, 6],
    [4, 5, 7],
    [5, 6, 1],
    [6, 7, 2],
    [7, 1, 3],
];

/// `e_i e_j = sign · e_k` for every basis pair.
fn basis_table() -> [[(i8, usize); 8]; 8] {
    let mut t = [[(0i8, 0usize); 8]; 8];
    for i in 0..8 {
        t[0][i] = (1, i);
        t[i][0] = (1, i);
    }
    for i in 1..8 {
        t[i][i] = (-1, 0);
    }
    for [a, b, c] in FANO_LINES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1, z);
            t[y][x] = (-1, z);
        }
    }
    t
}

/// Structure constants `c[i][j][k]` of the octonion basis, usable as a table
/// algebra.
pub fn octonion_table() -> Vec<Vec<Vec<Rational>>> {
    let t = basis_table();
    (0..8)
        .map(|i| {
            (0..8)
                .map(|j| {
                    let (s, k) = t[i][j];
                    (0..8).map(|m| if m == k { rat(s as i64) } else { rat(0) }).collect()
                })
                .collect()
        })
        .collect()
}

/// Cayley octonions over the rationals: alternative, hence power-associative,
/// but not associative.
#[derive(Debug, Clone)]
pub struct Octonions {
    descriptor: RingDescriptor,
    table: [[(i8, usize); 8]; 8],
}

impl Default for Octonions {
    fn default() -> Self {
        Self::new()
    }
}

impl Octonions {
    pub fn new() -> Self {
        Self {
            descriptor: RingDescriptor::new("octonion", false, false, true, true, 0)
                .expect("static flags are monotone"),
            table: basis_table(),
        }
    }

    pub fn basis(i: usize) -> Octonion {
        std::array::from_fn(|t| if t == i { Rational::one() } else { Rational::zero() })
    }

    pub fn from_ints(c: [i64; 8]) -> Octonion {
        c.map(rat)
    }
}

impl Ring for Octonions {
    type Elem = Octonion;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Octonion {
        std::array::from_fn(|_| Rational::zero())
    }

    fn one(&self) -> Option<Octonion> {
        Some(Self::basis(0))
    }

    fn add(&self, a: &Octonion, b: &Octonion) -> Octonion {
        std::array::from_fn(|t| &a[t] + &b[t])
    }

    fn sub(&self, a: &Octonion, b: &Octonion) -> Octonion {
        std::array::from_fn(|t| &a[t] - &b[t])
    }

    fn neg(&self, a: &Octonion) -> Octonion {
        std::array::from_fn(|t| -&a[t])
    }

    fn mul(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (s, k) = self.table[i][j];
                let p = x * y;
                if s > 0 {
                    out[k] += p;
                } else {
                    out[k] -= p;
                }
            }
        }
        out
    }

    fn div_by_int(&self, a: &Octonion, k: &BigInt) -> Result<Octonion> {
        self.descriptor.require_division_by(k)?;
        let k = Rational::from_integer(k.clone());
        Ok(std::array::from_fn(|t| &a[t] / &k))
    }

    fn check(&self, _a: &Octonion) -> Result<()> {
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<Octonion> {
        let mut e = self.zero();
        e[0] = rat(k);
        Some(e)
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Octonion {
        std::array::from_fn(|_| random_rational(rng, bound))
    }

    fn render(&self, a: &Octonion) -> String {
        render_basis_sum(a, &["", "e1", "e2", "e3", "e4", "e5", "e6", "e7"])
    }

    fn encode(&self, a: &Octonion) -> Value {
        Value::Array(a.iter().map(|c| Value::String(c.to_string())).collect())
    }

    fn decode(&self, v: &Value) -> Result<Octonion> {
        let c = decode_coefficients(v, 8)?;
        c.try_into()
            .map_err(|_| Error::Parse("octonion needs 8 coefficients".into()))
    }
}
