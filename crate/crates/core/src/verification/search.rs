//! Randomized search for instances of determinant laws that fail outside the
//! commutative case.

use std::fmt;
use std::str::FromStr;

use super::{map_trials, trial_rng, Witness};
use crate::engines::{nonassoc_edet, power_sum_det};
use crate::error::{Error, Result};
use crate::matrix::{add_rows, mat_mul, random_matrix, random_row, Matrix};
use crate::ring::Ring;

/// Entries are integers in `-5..=5` so witnesses stay readable.
pub const COEFFICIENT_BOUND: u32 = 5;

const BATCH_PER_WORKER: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `edet(AB) = edet(A)·edet(B)`.
    Multiplicativity,
    /// `edet(A) = Σ_j (-1)^{1+j} a_{1j}·edet(A minor 1j)`.
    Laplace,
    /// Additivity of the bracketing-average determinant in one row.
    PolyadditivityNonassoc,
}

impl Claim {
    pub const ALL: [Claim; 3] = [
        Claim::Multiplicativity,
        Claim::Laplace,
        Claim::PolyadditivityNonassoc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Claim::Multiplicativity => "multiplicativity",
            Claim::Laplace => "laplace",
            Claim::PolyadditivityNonassoc => "polyadditivity-nonassoc",
        }
    }

    /// Multiplicativity and Laplace are searched over associative rings,
    /// polyadditivity over non-associative ones.
    pub fn check_pairing<R: Ring + ?Sized>(self, ring: &R, n: usize) -> Result<()> {
        let d = ring.descriptor();
        let ok = match self {
            Claim::Multiplicativity => d.is_associative && n >= 1,
            Claim::Laplace => d.is_associative && n >= 2,
            Claim::PolyadditivityNonassoc => !d.is_associative && n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidPairing {
                claim: format!("{} at n={n}", self.as_str()),
                ring: d.name.clone(),
            })
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found { trial: u64, witness: Box<Witness> },
    /// No witness within the budget; this says nothing about whether one exists.
    Exhausted { trials: u64 },
}

/// Tries seeded random instances `0..max_trials` in order and returns the
/// first violation. Trial `t` draws from stream `t` of `seed`, so
/// [`replay`] regenerates it.
pub fn search_counterexample<R: Ring + ?Sized>(
    ring: &R,
    claim: Claim,
    n: usize,
    seed: u64,
    max_trials: u64,
    workers: usize,
) -> Result<SearchOutcome> {
    claim.check_pairing(ring, n)?;
    let batch = BATCH_PER_WORKER * workers.max(1) as u64;
    let mut start = 0;
    while start < max_trials {
        let len = batch.min(max_trials - start);
        let results = map_trials(len, workers, |i| run_trial(ring, claim, n, seed, start + i));
        for (i, r) in results.into_iter().enumerate() {
            if let Some(witness) = r? {
                return Ok(SearchOutcome::Found {
                    trial: start + i as u64,
                    witness: Box::new(witness),
                });
            }
        }
        start += len;
    }
    Ok(SearchOutcome::Exhausted { trials: max_trials })
}

/// Re-runs a single search trial.
pub fn replay<R: Ring + ?Sized>(
    ring: &R,
    claim: Claim,
    n: usize,
    seed: u64,
    trial: u64,
) -> Result<Option<Witness>> {
    claim.check_pairing(ring, n)?;
    run_trial(ring, claim, n, seed, trial)
}

fn run_trial<R: Ring + ?Sized>(
    ring: &R,
    claim: Claim,
    n: usize,
    seed: u64,
    trial: u64,
) -> Result<Option<Witness>> {
    let ids = (seed, trial);
    let property = claim.as_str();
    match claim {
        Claim::Multiplicativity => multiplicativity_trial(ring, n, ids, property),
        Claim::Laplace => laplace_trial(ring, n, ids, property),
        Claim::PolyadditivityNonassoc => {
            row_additivity_trial(ring, n, ids, property, |m| nonassoc_edet(ring, m))
        }
    }
}

pub(crate) fn multiplicativity_trial<R: Ring + ?Sized>(
    ring: &R,
    n: usize,
    ids: (u64, u64),
    property: &str,
) -> Result<Option<Witness>> {
    let mut rng = trial_rng(ids.0, ids.1);
    let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
    let b = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
    let ab = mat_mul(ring, &a, &b)?;
    let lhs = power_sum_det(ring, &ab)?;
    let rhs = ring.mul(&power_sum_det(ring, &a)?, &power_sum_det(ring, &b)?);
    Ok((!ring.eq(&lhs, &rhs))
        .then(|| Witness::new(ring, property, n, ids, &[("A", &a), ("B", &b)], &lhs, &rhs)))
}

/// First-row expansion with the entry on the left of each minor.
pub fn first_row_expansion<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    let mut total = ring.zero();
    for j in 0..a.order() {
        let minor = a
            .minor(0, j)
            .ok_or_else(|| Error::DimensionMismatch("expansion needs order at least 2".into()))?;
        let term = ring.mul(a.get(0, j), &power_sum_det(ring, &minor)?);
        total = if j % 2 == 0 {
            ring.add(&total, &term)
        } else {
            ring.sub(&total, &term)
        };
    }
    Ok(total)
}

pub(crate) fn laplace_trial<R: Ring + ?Sized>(
    ring: &R,
    n: usize,
    ids: (u64, u64),
    property: &str,
) -> Result<Option<Witness>> {
    let mut rng = trial_rng(ids.0, ids.1);
    let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
    let lhs = power_sum_det(ring, &a)?;
    let rhs = first_row_expansion(ring, &a)?;
    Ok((!ring.eq(&lhs, &rhs)).then(|| Witness::new(ring, property, n, ids, &[("A", &a)], &lhs, &rhs)))
}

/// `f(A[r := x + y]) = f(A[r := x]) + f(A[r := y])` for a random row `r`.
pub(crate) fn row_additivity_trial<R, F>(
    ring: &R,
    n: usize,
    ids: (u64, u64),
    property: &str,
    f: F,
) -> Result<Option<Witness>>
where
    R: Ring + ?Sized,
    F: Fn(&Matrix<R::Elem>) -> Result<R::Elem>,
{
    use rand::Rng;
    let mut rng = trial_rng(ids.0, ids.1);
    let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
    let r = rng.gen_range(0..n);
    let x = random_row(ring, n, &mut rng, COEFFICIENT_BOUND);
    let y = random_row(ring, n, &mut rng, COEFFICIENT_BOUND);
    let ax = a.with_row(r, &x);
    let ay = a.with_row(r, &y);
    let axy = a.with_row(r, &add_rows(ring, &x, &y));
    let lhs = f(&axy)?;
    let rhs = ring.add(&f(&ax)?, &f(&ay)?);
    Ok((!ring.eq(&lhs, &rhs))
        .then(|| Witness::new(ring, property, n, ids, &[("A_x+y", &axy), ("A_x", &ax), ("A_y", &ay)], &lhs, &rhs)))
}
