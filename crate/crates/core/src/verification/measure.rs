//! Operation counts against the predicted cost of the power-sum schedule.
//!
//! Predictions for order `n`:
//! - additions and subtractions: `(3n - 1)·n!`
//! - multiplications, repeated squaring: `n!·n·⌈log₂ n⌉`
//! - multiplications, reference curve: `(n+1)!·ln n`

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::counting::{CountingRing, OpCounts};
use crate::combinatorics::{factorial, GammaAssignment};
use crate::engines::{determinant, DetMethod};
use crate::error::Result;
use crate::matrix::{random_matrix, Matrix};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
pub struct OpCountReport {
    pub n: usize,
    pub method: DetMethod,
    pub ring: String,
    pub counts: OpCounts,
    pub predicted_additions: BigInt,
    pub predicted_multiplications: BigInt,
    pub predicted_multiplications_reference: f64,
}

fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

pub fn predicted_additions(n: usize) -> BigInt {
    BigInt::from(3 * n as i64 - 1) * factorial(n)
}

pub fn predicted_multiplications(n: usize) -> BigInt {
    factorial(n) * BigInt::from(n) * BigInt::from(ceil_log2(n))
}

pub fn predicted_multiplications_reference(n: usize) -> f64 {
    factorial(n + 1).to_f64().unwrap_or(f64::INFINITY) * (n as f64).ln()
}

fn ratio(measured: u64, predicted: &BigInt) -> Option<f64> {
    let p = predicted.to_f64()?;
    (p > 0.0).then(|| measured as f64 / p)
}

impl OpCountReport {
    pub fn new(n: usize, method: DetMethod, ring: &str, counts: OpCounts) -> Self {
        Self {
            n,
            method,
            ring: ring.to_string(),
            counts,
            predicted_additions: predicted_additions(n),
            predicted_multiplications: predicted_multiplications(n),
            predicted_multiplications_reference: predicted_multiplications_reference(n),
        }
    }

    /// `(additions + subtractions) / ((3n-1)·n!)`.
    pub fn addition_ratio(&self) -> Option<f64> {
        ratio(self.counts.additions + self.counts.subtractions, &self.predicted_additions)
    }

    /// `multiplications / (n!·n·⌈log₂ n⌉)`; `None` for `n < 2`.
    pub fn multiplication_ratio(&self) -> Option<f64> {
        ratio(self.counts.multiplications, &self.predicted_multiplications)
    }

    /// `multiplications / ((n+1)!·ln n)`; `None` for `n < 2`.
    pub fn reference_multiplication_ratio(&self) -> Option<f64> {
        let p = self.predicted_multiplications_reference;
        (p > 0.0 && p.is_finite()).then(|| self.counts.multiplications as f64 / p)
    }

    pub fn to_json(&self) -> Value {
        let fmt_ratio = |r: Option<f64>| r.map_or(Value::Null, |r| Value::String(format!("{r:.6}")));
        json!({
            "n": self.n.to_string(),
            "method": self.method.as_str(),
            "ring": self.ring,
            "additions": self.counts.additions.to_string(),
            "subtractions": self.counts.subtractions.to_string(),
            "negations": self.counts.negations.to_string(),
            "multiplications": self.counts.multiplications.to_string(),
            "multiplications_inside_pow": self.counts.multiplications_inside_pow.to_string(),
            "divisions": self.counts.divisions.to_string(),
            "predicted_additions": self.predicted_additions.to_string(),
            "predicted_multiplications": self.predicted_multiplications.to_string(),
            "predicted_multiplications_reference": format!("{:.3}", self.predicted_multiplications_reference),
            "addition_ratio": fmt_ratio(self.addition_ratio()),
            "multiplication_ratio": fmt_ratio(self.multiplication_ratio()),
            "reference_multiplication_ratio": fmt_ratio(self.reference_multiplication_ratio()),
        })
    }
}

/// Evaluates `method` on `a` under a counting wrapper; returns the value and
/// its operation counts.
pub fn measure<R: Ring + ?Sized>(
    ring: &R,
    method: DetMethod,
    a: &Matrix<R::Elem>,
    gamma: &GammaAssignment<R::Elem>,
    workers: usize,
) -> Result<(R::Elem, OpCountReport)> {
    let counting = CountingRing::new(ring);
    let value = determinant(&counting, a, method, gamma, workers)?;
    let report = OpCountReport::new(a.order(), method, ring.name(), counting.counts());
    Ok((value, report))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub report: OpCountReport,
    pub trials: usize,
    /// Every trial produced the same counts as the first.
    pub counts_stable: bool,
}

/// Measures `method` on `trials` seeded random matrices per order; the row
/// reports the first trial's counts.
pub fn bench<R: Ring + ?Sized>(
    ring: &R,
    method: DetMethod,
    orders: impl IntoIterator<Item = usize>,
    seed: u64,
    trials: usize,
    workers: usize,
) -> Result<Vec<BenchRow>> {
    orders
        .into_iter()
        .map(|n| {
            let mut first: Option<OpCountReport> = None;
            let mut stable = true;
            for trial in 0..trials.max(1) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 40);
                rng.set_stream(trial as u64);
                let a = random_matrix(ring, n, &mut rng, 5);
                let (_, report) = measure(ring, method, &a, &GammaAssignment::Zero, workers)?;
                match &first {
                    None => first = Some(report),
                    Some(f) => stable &= f.counts == report.counts,
                }
            }
            Ok(BenchRow {
                report: first.expect("at least one trial"),
                trials: trials.max(1),
                counts_stable: stable,
            })
        })
        .collect()
}
