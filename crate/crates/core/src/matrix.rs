use rand::RngCore;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<E> {
    n: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(n: usize, entries: Vec<E>) -> Result<Self> {
        if n == 0 {
            return Err(Error::DimensionMismatch("matrix order must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        assert!(n >= 1);
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.n + j] = value;
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[E]> {
        self.entries.chunks(self.n)
    }

    pub fn map<F, T>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for j in 0..self.n {
            out.entries.swap(a * self.n + j, b * self.n + j);
        }
        out
    }

    pub fn swap_cols(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        for i in 0..self.n {
            out.entries.swap(i * self.n + a, i * self.n + b);
        }
        out
    }

    pub fn with_row(&self, i: usize, row: &[E]) -> Self {
        assert_eq!(row.len(), self.n);
        let mut out = self.clone();
        out.entries[i * self.n..(i + 1) * self.n].clone_from_slice(row);
        out
    }

    pub fn with_col(&self, j: usize, col: &[E]) -> Self {
        assert_eq!(col.len(), self.n);
        let mut out = self.clone();
        for (i, v) in col.iter().enumerate() {
            out.entries[i * self.n + j] = v.clone();
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// The matrix with row `r` and column `c` deleted; `None` for order 1.
    pub fn minor(&self, r: usize, c: usize) -> Option<Self> {
        if self.n == 1 {
            return None;
        }
        let entries = (0..self.n)
            .filter(|&i| i != r)
            .flat_map(|i| (0..self.n).filter(move |&j| j != c).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Some(Self {
            n: self.n - 1,
            entries,
        })
    }
}

pub fn identity<R: Ring + ?Sized>(ring: &R, n: usize) -> Result<Matrix<R::Elem>> {
    let one = ring.one().ok_or(Error::NoUnit)?;
    let zero = ring.zero();
    Ok(Matrix::from_fn(n, |i, j| if i == j { one.clone() } else { zero.clone() }))
}

pub fn zero_matrix<R: Ring + ?Sized>(ring: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, |_, _| ring.zero())
}

/// Product `(AB)_ij = Σ_k a_ik · b_kj`, left factor first.
pub fn mat_mul<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    b: &Matrix<R::Elem>,
) -> Result<Matrix<R::Elem>> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {0}x{0} by {1}x{1}",
            a.order(),
            b.order()
        )));
    }
    let n = a.order();
    Ok(Matrix::from_fn(n, |i, j| {
        (0..n).fold(ring.zero(), |acc, k| {
            ring.add(&acc, &ring.mul(a.get(i, k), b.get(k, j)))
        })
    }))
}

pub fn add_rows<R: Ring + ?Sized>(ring: &R, x: &[R::Elem], y: &[R::Elem]) -> Vec<R::Elem> {
    x.iter().zip(y).map(|(a, b)| ring.add(a, b)).collect()
}

pub fn random_matrix<R: Ring + ?Sized>(
    ring: &R,
    n: usize,
    rng: &mut dyn RngCore,
    bound: u32,
) -> Matrix<R::Elem> {
    Matrix::from_fn(n, |_, _| ring.random_element(rng, bound))
}

pub fn random_row<R: Ring + ?Sized>(
    ring: &R,
    n: usize,
    rng: &mut dyn RngCore,
    bound: u32,
) -> Vec<R::Elem> {
    (0..n).map(|_| ring.random_element(rng, bound)).collect()
}

/// Integer matrix embedded through `k ↦ k·1`.
pub fn from_ints<R: Ring + ?Sized>(ring: &R, rows: &[&[i64]]) -> Result<Matrix<R::Elem>> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&k| ring.from_int(k).ok_or(Error::NoUnit))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn encode_matrix<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Value {
    Value::Array(
        a.rows()
            .map(|r| Value::Array(r.iter().map(|e| ring.encode(e)).collect()))
            .collect(),
    )
}

pub fn decode_matrix<R: Ring + ?Sized>(ring: &R, v: &Value) -> Result<Matrix<R::Elem>> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("entries must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                .iter()
                .map(|e| ring.decode(e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

pub fn render_matrix<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> String {
    let rows: Vec<String> = a
        .rows()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|e| ring.render(e)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
