use num_bigint::BigInt;
use rand::RngCore;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Ring, RingDescriptor};

/// `m×m` matrices over a coefficient ring, used as ring elements themselves.
#[derive(Debug, Clone)]
pub struct MatrixRing<R> {
    m: usize,
    inner: R,
    descriptor: RingDescriptor,
}

impl<R: Ring> MatrixRing<R> {
    pub fn new(m: usize, inner: R) -> Result<Self> {
        if m == 0 {
            return Err(Error::DimensionMismatch("matrix ring block size must be >= 1".into()));
        }
        let d = inner.descriptor();
        let descriptor = RingDescriptor::new(
            format!("matrixring:{m}:{}", d.name),
            m == 1 && d.is_commutative,
            d.is_associative,
            d.is_power_associative && (m == 1 || d.is_associative),
            d.has_unit,
            d.characteristic,
        )?;
        Ok(Self { m, inner, descriptor })
    }

    pub fn block_size(&self) -> usize {
        self.m
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    pub fn from_entries(&self, entries: Vec<R::Elem>) -> Result<Vec<R::Elem>> {
        if entries.len() != self.m * self.m {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {0}x{0} block",
                self.m
            )));
        }
        Ok(entries)
    }
}

impl<R: Ring> Ring for MatrixRing<R> {
    type Elem = Vec<R::Elem>;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Self::Elem {
        vec![self.inner.zero(); self.m * self.m]
    }

    fn one(&self) -> Option<Self::Elem> {
        let one = self.inner.one()?;
        let mut e = self.zero();
        for i in 0..self.m {
            e[i * self.m + i] = one.clone();
        }
        Some(e)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.inner.add(x, y)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.inner.sub(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.inner.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let m = self.m;
        (0..m * m)
            .map(|idx| {
                let (i, j) = (idx / m, idx % m);
                let mut acc = self.inner.mul(&a[i * m], &b[j]);
                for k in 1..m {
                    acc = self.inner.add(&acc, &self.inner.mul(&a[i * m + k], &b[k * m + j]));
                }
                acc
            })
            .collect()
    }

    fn div_by_int(&self, a: &Self::Elem, k: &BigInt) -> Result<Self::Elem> {
        self.descriptor.require_division_by(k)?;
        a.iter().map(|x| self.inner.div_by_int(x, k)).collect()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|x| self.inner.is_zero(x))
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        if a.len() != self.m * self.m {
            return Err(Error::RingMismatch(format!(
                "{} entries in a {}x{} block",
                a.len(),
                self.m,
                self.m
            )));
        }
        a.iter().try_for_each(|x| self.inner.check(x))
    }

    fn from_int(&self, k: i64) -> Option<Self::Elem> {
        let c = self.inner.from_int(k)?;
        let mut e = self.zero();
        for i in 0..self.m {
            e[i * self.m + i] = c.clone();
        }
        Some(e)
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Self::Elem {
        (0..self.m * self.m)
            .map(|_| self.inner.random_element(rng, bound))
            .collect()
    }

    fn render(&self, a: &Self::Elem) -> String {
        let rows: Vec<String> = a
            .chunks(self.m)
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| self.inner.render(x)).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }

    fn encode(&self, a: &Self::Elem) -> Value {
        Value::Array(
            a.chunks(self.m)
                .map(|r| Value::Array(r.iter().map(|x| self.inner.encode(x)).collect()))
                .collect(),
        )
    }

    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        let rows = v
            .as_array()
            .filter(|r| r.len() == self.m)
            .ok_or_else(|| Error::Parse(format!("expected {} rows for a matrix-ring entry", self.m)))?;
        let mut out = Vec::with_capacity(self.m * self.m);
        for row in rows {
            let row = row
                .as_array()
                .filter(|r| r.len() == self.m)
                .ok_or_else(|| Error::Parse(format!("expected {} columns in a matrix-ring entry", self.m)))?;
            for x in row {
                out.push(self.inner.decode(x)?);
            }
        }
        Ok(out)
    }
}
