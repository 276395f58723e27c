//! Finite-dimensional algebras given by structure constants
//! `e_i · e_j = Σ_k c[i][j][k] e_k`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::RngCore;
use serde_json::Value;

use super::{decode_coefficients, render_basis_sum};
use crate::combinatorics::permutations;
use crate::error::{Error, Result};
use crate::rational::{decode_rational, random_rational, rat, Rational};
use crate::ring::{Ring, RingDescriptor};

pub type TableElement = Vec<Rational>;

#[derive(Debug, Clone)]
pub struct TableAlgebra {
    dimension: usize,
    table: Vec<Vec<Vec<Rational>>>,
    /// Nonzero structure constants per basis pair.
    sparse: Vec<Vec<Vec<(usize, Rational)>>>,
    unit: Option<usize>,
    descriptor: RingDescriptor,
}

/// Builds a table algebra and computes its capability flags by exhaustive
/// checks on basis elements.
pub fn make_table_algebra(
    name: impl Into<String>,
    table: Vec<Vec<Vec<Rational>>>,
) -> Result<TableAlgebra> {
    TableAlgebra::new(name, table)
}

impl TableAlgebra {
    pub fn new(name: impl Into<String>, table: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let d = table.len();
        if d == 0 {
            return Err(Error::MalformedTable("dimension must be at least 1".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != d {
                return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {d}", row.len())));
            }
            for (j, cell) in row.iter().enumerate() {
                if cell.len() != d {
                    return Err(Error::MalformedTable(format!(
                        "product e{i}*e{j} has {} coefficients, expected {d}",
                        cell.len()
                    )));
                }
            }
        }
        let sparse = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| {
                        cell.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut algebra = Self {
            dimension: d,
            table,
            sparse,
            unit: None,
            descriptor: RingDescriptor::new("table", false, false, false, false, 0)?,
        };
        let flags = algebra.detect_flags();
        algebra.unit = flags.unit;
        algebra.descriptor = RingDescriptor::new(
            name,
            flags.commutative && flags.associative,
            flags.associative,
            flags.associative || flags.power_associative,
            flags.unit.is_some(),
            0,
        )?;
        Ok(algebra)
    }

    /// Parses `{ "dimension": d, "table": [[["p/q", ...]]] }`.
    pub fn from_json(name: impl Into<String>, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::MalformedTable(m.to_string());
        let d = v
            .get("dimension")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing integer `dimension`"))? as usize;
        let rows = v
            .get("table")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array `table`"))?;
        let table = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("table rows must be arrays"))?
                    .iter()
                    .map(|cell| {
                        cell.as_array()
                            .ok_or_else(|| bad("table cells must be arrays"))?
                            .iter()
                            .map(|c| decode_rational(c).map_err(|e| bad(&e.to_string())))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if table.len() != d {
            return Err(bad(&format!("dimension {d} but {} table rows", table.len())));
        }
        Self::new(name, table)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "dimension": self.dimension,
            "table": self.table.iter().map(|row| {
                row.iter().map(|cell| {
                    cell.iter().map(|c| c.to_string()).collect::<Vec<_>>()
                }).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn basis(&self, i: usize) -> TableElement {
        (0..self.dimension).map(|k| rat(i64::from(k == i))).collect()
    }

    pub fn element(&self, coefficients: &[i64]) -> TableElement {
        assert_eq!(coefficients.len(), self.dimension);
        coefficients.iter().map(|&c| rat(c)).collect()
    }

    fn basis_product(&self, i: usize, j: usize) -> TableElement {
        self.table[i][j].clone()
    }

    fn detect_flags(&self) -> DetectedFlags {
        let d = self.dimension;
        let products: Vec<Vec<TableElement>> = (0..d)
            .map(|i| (0..d).map(|j| self.basis_product(i, j)).collect())
            .collect();
        let right = |x: &TableElement, k: usize| self.mul(x, &self.basis(k));
        let left = |i: usize, x: &TableElement| self.mul(&self.basis(i), x);

        let commutative = (0..d).all(|i| (0..d).all(|j| products[i][j] == products[j][i]));

        // g3[i][j][k] = (e_i e_j) e_k - e_i (e_j e_k)
        let mut g3 = vec![self.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    g3[(i * d + j) * d + k] =
                        self.sub(&right(&products[i][j], k), &left(i, &products[j][k]));
                }
            }
        }
        let associative = g3.iter().all(|v| self.is_zero(v));

        // In characteristic 0 a ring is power-associative iff x²x = xx² and
        // x²x² = (x²x)x for all x (Albert). Both are homogeneous, so they hold
        // iff their full linearizations vanish on basis tuples.
        let power_associative = associative || {
            let cubic = multisets(d, 3).into_iter().all(|idx| {
                let sum = permutations(3).fold(self.zero(), |acc, p| {
                    let (a, b, c) = (idx[p.at(0)], idx[p.at(1)], idx[p.at(2)]);
                    self.add(&acc, &g3[(a * d + b) * d + c])
                });
                self.is_zero(&sum)
            });
            cubic && {
                // g4[i][j][k][l] = (e_i e_j)(e_k e_l) - ((e_i e_j) e_k) e_l
                let mut g4 = vec![self.zero(); d * d * d * d];
                for i in 0..d {
                    for j in 0..d {
                        for k in 0..d {
                            let left_part = right(&products[i][j], k);
                            for l in 0..d {
                                g4[((i * d + j) * d + k) * d + l] = self.sub(
                                    &self.mul(&products[i][j], &products[k][l]),
                                    &right(&left_part, l),
                                );
                            }
                        }
                    }
                }
                multisets(d, 4).into_iter().all(|idx| {
                    let sum = permutations(4).fold(self.zero(), |acc, p| {
                        let t: Vec<usize> = p.image().iter().map(|&s| idx[s]).collect();
                        self.add(&acc, &g4[((t[0] * d + t[1]) * d + t[2]) * d + t[3]])
                    });
                    self.is_zero(&sum)
                })
            }
        };

        let unit = (0..d).find(|&u| {
            (0..d).all(|i| products[u][i] == self.basis(i) && products[i][u] == self.basis(i))
        });

        DetectedFlags {
            commutative,
            associative,
            power_associative,
            unit,
        }
    }
}

struct DetectedFlags {
    commutative: bool,
    associative: bool,
    power_associative: bool,
    unit: Option<usize>,
}

/// Nondecreasing index tuples of length `k` over `0..d`.
fn multisets(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] + 1 < d) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[i];
        }
    }
}

impl Ring for TableAlgebra {
    type Elem = TableElement;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> TableElement {
        vec![Rational::zero(); self.dimension]
    }

    fn one(&self) -> Option<TableElement> {
        self.unit.map(|u| self.basis(u))
    }

    fn add(&self, a: &TableElement, b: &TableElement) -> TableElement {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(&self, a: &TableElement, b: &TableElement) -> TableElement {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    fn neg(&self, a: &TableElement) -> TableElement {
        a.iter().map(|x| -x).collect()
    }

    fn mul(&self, a: &TableElement, b: &TableElement) -> TableElement {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    fn div_by_int(&self, a: &TableElement, k: &BigInt) -> Result<TableElement> {
        self.descriptor.require_division_by(k)?;
        let k = Rational::from_integer(k.clone());
        Ok(a.iter().map(|x| x / &k).collect())
    }

    fn check(&self, a: &TableElement) -> Result<()> {
        if a.len() != self.dimension {
            return Err(Error::RingMismatch(format!(
                "{} coefficients for a {}-dimensional algebra",
                a.len(),
                self.dimension
            )));
        }
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<TableElement> {
        self.unit.map(|u| {
            let mut e = self.zero();
            e[u] = rat(k);
            e
        })
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> TableElement {
        (0..self.dimension).map(|_| random_rational(rng, bound)).collect()
    }

    fn render(&self, a: &TableElement) -> String {
        let names: Vec<String> = (0..self.dimension).map(|i| format!("e{i}")).collect();
        let names: Vec<&str> = names.iter().map(String::as_str).collect();
        render_basis_sum(a, &names)
    }

    fn encode(&self, a: &TableElement) -> Value {
        Value::Array(a.iter().map(|c| Value::String(c.to_string())).collect())
    }

    fn decode(&self, v: &Value) -> Result<TableElement> {
        decode_coefficients(v, self.dimension)
    }
}

/// The two-dimensional algebra `u·u = v, u·v = u, v·u = v, v·v = 0`, which is
/// not power-associative: `(uu)u = v` but `u(uu) = u`.
pub fn skew_cube_algebra() -> TableAlgebra {
    let t = |c: [i64; 2]| c.iter().map(|&x| rat(x)).collect::<Vec<_>>();
    make_table_algebra(
        "table:skew-cube",
        vec![vec![t([0, 1]), t([1, 0])], vec![t([0, 1]), t([0, 0])]],
    )
    .expect("well-formed 2x2x2 table")
}
