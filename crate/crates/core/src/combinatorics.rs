//! Permutations, parities, diagonals and subdiagonals, plus the counting
//! constants `n!` and the bracketing count `C_n`.

use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` as a machine integer; panics past `20!`.
pub fn factorial_u64(n: usize) -> u64 {
    (2..=n as u64)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .expect("n! overflows u64")
}

/// Number of bracketings of an `n`-fold product: `(2n-2)! / (n! (n-1)!)`.
pub fn catalan(n: usize) -> BigInt {
    assert!(n >= 1, "catalan is defined for n >= 1");
    factorial(2 * n - 2) / (factorial(n) * factorial(n - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn sign(self) -> i8 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    fn from_count(k: usize) -> Self {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A permutation of `{0, .., n-1}` stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
    parity: Parity,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
            parity: Parity::Even,
        }
    }

    /// Builds from a 0-based image array, rejecting non-bijections.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::DimensionMismatch(format!("{image:?} is not a permutation")));
            }
        }
        let parity = Parity::from_count(inversions(&image));
        Ok(Self { image, parity })
    }

    /// Builds from the 1-based notation `(σ(1), .., σ(n))`.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(Error::DimensionMismatch("1-based image contains 0".into()));
        }
        Self::from_image(image.iter().map(|v| v - 1).collect())
    }

    /// The permutation at lexicographic position `rank` among all `n!`.
    pub fn from_rank(n: usize, mut rank: u64) -> Self {
        assert!(rank < factorial_u64(n), "rank out of range");
        let mut pool: Vec<usize> = (0..n).collect();
        let mut image = Vec::with_capacity(n);
        for i in (0..n).rev() {
            let f = factorial_u64(i);
            let idx = (rank / f) as usize;
            rank %= f;
            image.push(pool.remove(idx));
        }
        let parity = Parity::from_count(inversions(&image));
        Self { image, parity }
    }

    pub fn rank(&self) -> u64 {
        let n = self.image.len();
        let mut rank = 0;
        for i in 0..n {
            let smaller_after = self.image[i + 1..].iter().filter(|&&v| v < self.image[i]).count();
            rank += smaller_after as u64 * factorial_u64(n - 1 - i);
        }
        rank
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn at(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn inverse(&self) -> Self {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Self {
            image,
            parity: self.parity,
        }
    }

    /// Advances to the lexicographic successor in place; false at the last one.
    fn advance(&mut self) -> bool {
        let a = &mut self.image;
        let n = a.len();
        if n < 2 {
            return false;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| a[i] < a[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("a[i+1] > a[i]");
        a.swap(i, j);
        a[i + 1..].reverse();
        // One transposition plus floor(len/2) from the reversal.
        let swaps = 1 + (n - i - 1) / 2;
        if swaps % 2 == 1 {
            self.parity = self.parity.flip();
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn inversions(image: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] > image[j] {
                count += 1;
            }
        }
    }
    count
}

/// Lexicographic stream over a contiguous rank range of `S_n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Permutation>,
    remaining: u64,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        self.remaining -= 1;
        if self.remaining > 0 {
            let mut succ = current.clone();
            if succ.advance() {
                self.next = Some(succ);
            }
        }
        Some(current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

/// All `n!` permutations in lexicographic order; the position is the rank.
pub fn permutations(n: usize) -> Permutations {
    permutation_range(n, 0..factorial_u64(n))
}

pub fn permutation_range(n: usize, ranks: Range<u64>) -> Permutations {
    assert!(n >= 1, "permutations require n >= 1");
    if ranks.is_empty() {
        return Permutations {
            next: None,
            remaining: 0,
        };
    }
    Permutations {
        next: Some(Permutation::from_rank(n, ranks.start)),
        remaining: ranks.end - ranks.start,
    }
}

/// Splits `0..n!` into at most `workers` nonempty contiguous blocks.
pub fn rank_blocks(n: usize, workers: usize) -> Vec<Range<u64>> {
    let total = factorial_u64(n);
    let parts = (workers.max(1) as u64).min(total);
    let base = total / parts;
    let extra = total % parts;
    let mut start = 0;
    (0..parts)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let block = start..start + len;
            start += len;
            block
        })
        .collect()
}

/// The diagonal sum `su(l(σ))` and the `n` leave-one-out sums
/// `su(l(σ)) - a_{jσ(j)}`, using `n-1` additions and `n` subtractions.
pub fn subdiagonal_sums<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    sigma: &Permutation,
) -> Result<(R::Elem, Vec<R::Elem>)> {
    let n = a.order();
    if sigma.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of {} points against a {n}x{n} matrix",
            sigma.len()
        )));
    }
    let mut full = a.get(0, sigma.at(0)).clone();
    for i in 1..n {
        full = ring.add(&full, a.get(i, sigma.at(i)));
    }
    let rest = (0..n).map(|j| ring.sub(&full, a.get(j, sigma.at(j)))).collect();
    Ok((full, rest))
}

/// A partial diagonal: the entries of `l(σ)` at `positions`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subdiagonal<E> {
    pub positions: Vec<usize>,
    pub columns: Vec<usize>,
    pub parent_parity: Parity,
    pub values: Vec<E>,
}

impl<E> Subdiagonal<E> {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

impl<E: Clone> Subdiagonal<E> {
    pub fn sum<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> E {
        self.values.iter().fold(ring.zero(), |acc, v| ring.add(&acc, v))
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `L_k` restricted to one parity, with one item per (parent, position subset)
/// pair, parents in rank order.
pub fn subdiagonals<'a, E: Clone>(
    a: &'a Matrix<E>,
    k: usize,
    parity: Parity,
) -> impl Iterator<Item = Subdiagonal<E>> + 'a {
    let n = a.order();
    assert!((1..=n).contains(&k), "subdiagonal length must lie in 1..=n");
    let subsets = k_subsets(n, k);
    permutations(n)
        .filter(move |s| s.parity() == parity)
        .flat_map(move |sigma| {
            subsets
                .clone()
                .into_iter()
                .map(move |positions| Subdiagonal {
                    columns: positions.iter().map(|&i| sigma.at(i)).collect(),
                    values: positions.iter().map(|&i| a.get(i, sigma.at(i)).clone()).collect(),
                    parent_parity: sigma.parity(),
                    positions,
                })
        })
}

/// The free variables `{γ_σ}`, indexed by lexicographic rank of `σ`.
#[derive(Debug, Clone, PartialEq)]
pub enum GammaAssignment<E> {
    Zero,
    Constant(E),
    Explicit(Vec<E>),
    /// Each `γ_σ` is drawn from stream `rank(σ)` of a ChaCha8 generator, zero
    /// with probability one half.
    Seeded(u64),
}

impl<E: Clone> GammaAssignment<E> {
    pub fn validate(&self, n: usize) -> Result<()> {
        if let GammaAssignment::Explicit(values) = self {
            let expected = factorial_u64(n) as usize;
            if values.len() != expected {
                return Err(Error::PayloadLength {
                    expected,
                    got: values.len(),
                });
            }
        }
        Ok(())
    }

    pub fn value<R: Ring<Elem = E> + ?Sized>(&self, ring: &R, rank: u64) -> E {
        match self {
            GammaAssignment::Zero => ring.zero(),
            GammaAssignment::Constant(g) => g.clone(),
            GammaAssignment::Explicit(values) => values[rank as usize].clone(),
            GammaAssignment::Seeded(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(rank);
                if rng.gen_bool(0.5) {
                    ring.zero()
                } else {
                    ring.random_element(&mut rng, 9)
                }
            }
        }
    }
}
