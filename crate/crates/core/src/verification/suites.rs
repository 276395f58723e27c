//! Seeded property suites for the determinant laws.
//!
//! Each suite runs several clauses; each clause runs `trials` random
//! instances and keeps the first failing one as a witness. Clauses that are
//! expected to fail on a given ring are still run and reported, with
//! [`Expectation::Fails`].

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde_json::{json, Value};

use super::search::{laplace_trial, multiplicativity_trial, row_additivity_trial, COEFFICIENT_BOUND};
use super::{map_trials, trial_rng, Witness};
use crate::engines::{
    identity_residual, leibniz_det, nonassoc_edet, power_sum_det, sdet_barvinok, singularity_check,
};
use crate::error::{Error, Result};
use crate::matrix::{identity, random_matrix, zero_matrix, Matrix};
use crate::ring::Ring;

const NONSINGULAR_ATTEMPTS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Row additivity, antisymmetry, zero and equal rows, transpose for the
    /// power-sum determinant over associative rings; multiplicativity and
    /// first-row expansion as controls.
    Lemma3,
    /// Symmetrized double sum against power sums, and the unit matrix.
    Lemma4,
    /// The same row clauses for the bracketing-average determinant.
    Lemma6,
    /// Vanishing of the lower-exponent brackets.
    Corollary1,
    /// The power-sum singularity criterion.
    Corollary2,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Lemma3,
        Suite::Lemma4,
        Suite::Lemma6,
        Suite::Corollary1,
        Suite::Corollary2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Lemma3 => "lemma3",
            Suite::Lemma4 => "lemma4",
            Suite::Lemma6 => "lemma6",
            Suite::Corollary1 => "corollary1",
            Suite::Corollary2 => "corollary2",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    Holds,
    Fails,
    /// No claim either way; the outcome is reported as observed.
    Informational,
}

impl Expectation {
    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Holds => "holds",
            Expectation::Fails => "fails",
            Expectation::Informational => "informational",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub property: String,
    pub ring: String,
    pub n: usize,
    pub trials: u64,
    pub failures: u64,
    pub expectation: Expectation,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    pub fn meets_expectation(&self) -> bool {
        match self.expectation {
            Expectation::Holds => self.failures == 0,
            Expectation::Fails => self.failures > 0 && self.witness.is_some(),
            Expectation::Informational => true,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "property": self.property,
            "ring": self.ring,
            "n": self.n,
            "trials": self.trials.to_string(),
            "failures": self.failures.to_string(),
            "expectation": self.expectation.as_str(),
            "meets_expectation": self.meets_expectation(),
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

struct Ctx<'r, R: ?Sized> {
    ring: &'r R,
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
}

impl<R: Ring + ?Sized> Ctx<'_, R> {
    /// Clause `index` uses streams `index << 32 | trial`.
    fn clause<F>(&self, index: u64, property: &str, expectation: Expectation, trials: u64, f: F) -> Result<PropertyReport>
    where
        F: Fn((u64, u64), &str) -> Result<Option<Witness>> + Sync,
    {
        let results = map_trials(trials, self.workers, |t| f((self.seed, (index << 32) | t), property));
        let mut failures = 0;
        let mut witness = None;
        for r in results {
            if let Some(w) = r? {
                failures += 1;
                witness.get_or_insert(w);
            }
        }
        Ok(PropertyReport {
            property: property.to_string(),
            ring: self.ring.name().to_string(),
            n: self.n,
            trials,
            failures,
            expectation,
            witness,
        })
    }

    fn compare(
        &self,
        property: &str,
        ids: (u64, u64),
        matrices: &[(&str, &Matrix<R::Elem>)],
        lhs: R::Elem,
        rhs: R::Elem,
    ) -> Option<Witness> {
        (!self.ring.eq(&lhs, &rhs))
            .then(|| Witness::new(self.ring, property, self.n, ids, matrices, &lhs, &rhs))
    }
}

/// Runs every clause of `suite` on `trials` random matrices of order `n`.
///
/// Results do not depend on `workers`.
pub fn run_property_suite<R: Ring + ?Sized>(
    ring: &R,
    suite: Suite,
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<Vec<PropertyReport>> {
    let ctx = Ctx {
        ring,
        n,
        trials,
        seed,
        workers,
    };
    let d = ring.descriptor();
    match suite {
        Suite::Lemma3 => {
            if !d.is_associative {
                return Err(Error::RingNotAssociative(d.name.clone()));
            }
            let det = |m: &Matrix<R::Elem>| power_sum_det(ring, m);
            let mut reports = row_law_clauses(&ctx, "lemma3", Expectation::Holds, &det)?;
            let control = if d.is_commutative {
                Expectation::Holds
            } else {
                Expectation::Fails
            };
            reports.push(ctx.clause(5, "lemma3.multiplicativity", control, trials, |ids, p| {
                multiplicativity_trial(ring, n, ids, p)
            })?);
            reports.push(ctx.clause(6, "lemma3.laplace", control, trials, |ids, p| {
                laplace_trial(ring, n, ids, p)
            })?);
            Ok(reports)
        }
        Suite::Lemma4 => {
            if !d.is_associative {
                return Err(Error::RingNotAssociative(d.name.clone()));
            }
            let mut reports = vec![ctx.clause(0, "lemma4.sdet", Expectation::Holds, trials, |ids, p| {
                let a = random_matrix(ring, n, &mut trial_rng(ids.0, ids.1), COEFFICIENT_BOUND);
                Ok(ctx.compare(p, ids, &[("A", &a)], sdet_barvinok(ring, &a)?, power_sum_det(ring, &a)?))
            })?];
            if let Some(e) = ring.one() {
                let id = identity(ring, n)?;
                reports.push(ctx.clause(1, "lemma4.unit", Expectation::Holds, 1, |ids, p| {
                    Ok(ctx.compare(p, ids, &[("I", &id)], power_sum_det(ring, &id)?, e.clone()))
                })?);
            }
            Ok(reports)
        }
        Suite::Lemma6 => {
            let det = |m: &Matrix<R::Elem>| nonassoc_edet(ring, m);
            let additivity = if d.is_associative {
                Expectation::Holds
            } else if d.is_power_associative {
                Expectation::Informational
            } else {
                Expectation::Fails
            };
            row_law_clauses(&ctx, "lemma6", additivity, &det)
        }
        Suite::Corollary1 => (1..n)
            .map(|t| {
                let property = format!("corollary1.t={t}");
                ctx.clause(t as u64, &property, Expectation::Holds, trials, |ids, p| {
                    let a = random_matrix(ring, n, &mut trial_rng(ids.0, ids.1), COEFFICIENT_BOUND);
                    let residual = identity_residual(ring, &a, t as u32)?;
                    Ok(ctx.compare(p, ids, &[("A", &a)], residual, ring.zero()))
                })
            })
            .collect(),
        Suite::Corollary2 => {
            let singular = ctx.clause(0, "corollary2.singular", Expectation::Holds, trials, |ids, p| {
                let a = singular_matrix(ring, n, ids)?;
                let v = singularity_check(ring, &a)?;
                let det_zero = ring.is_zero(&leibniz_det(ring, &a)?);
                Ok((!(v.singular && det_zero))
                    .then(|| Witness::new(ring, p, n, ids, &[("A", &a)], &v.full_difference, &v.sub_difference)))
            })?;
            let nonsingular = ctx.clause(1, "corollary2.nonsingular", Expectation::Holds, trials, |ids, p| {
                let a = nonsingular_matrix(ring, n, ids)?;
                let v = singularity_check(ring, &a)?;
                Ok(v.singular
                    .then(|| Witness::new(ring, p, n, ids, &[("A", &a)], &v.full_difference, &v.sub_difference)))
            })?;
            Ok(vec![singular, nonsingular])
        }
    }
}

/// Clauses a to e: additivity in a row, antisymmetry under row and column
/// swaps, a zero row, two equal rows, and transposition.
fn row_law_clauses<R, F>(
    ctx: &Ctx<'_, R>,
    prefix: &str,
    additivity: Expectation,
    det: &F,
) -> Result<Vec<PropertyReport>>
where
    R: Ring + ?Sized,
    F: Fn(&Matrix<R::Elem>) -> Result<R::Elem> + Sync,
{
    let (ring, n, trials) = (ctx.ring, ctx.n, ctx.trials);
    if n < 2 {
        return Err(Error::DimensionMismatch(format!("{prefix} needs order at least 2")));
    }
    let draw = |ids: (u64, u64)| {
        let mut rng = trial_rng(ids.0, ids.1);
        let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
        let r = rng.gen_range(0..n);
        let s = (r + rng.gen_range(1..n)) % n;
        (a, r, s)
    };
    let p = |c: &str| format!("{prefix}.{c}");
    Ok(vec![
        ctx.clause(0, &p("a"), additivity, trials, |ids, p| {
            row_additivity_trial(ring, n, ids, p, det)
        })?,
        ctx.clause(1, &p("b"), Expectation::Holds, trials, |ids, p| {
            let (a, r, s) = draw(ids);
            let minus = ring.neg(&det(&a)?);
            let rows = a.swap_rows(r, s);
            if let Some(w) = ctx.compare(p, ids, &[("A", &a), ("A_swapped_rows", &rows)], det(&rows)?, minus.clone()) {
                return Ok(Some(w));
            }
            let cols = a.swap_cols(r, s);
            Ok(ctx.compare(p, ids, &[("A", &a), ("A_swapped_cols", &cols)], det(&cols)?, minus))
        })?,
        ctx.clause(2, &p("c"), Expectation::Holds, trials, |ids, p| {
            let (a, r, _) = draw(ids);
            let z = a.with_row(r, zero_matrix(ring, n).row(0));
            Ok(ctx.compare(p, ids, &[("A", &z)], det(&z)?, ring.zero()))
        })?,
        ctx.clause(3, &p("d"), Expectation::Holds, trials, |ids, p| {
            let (a, r, s) = draw(ids);
            let e = a.with_row(s, a.row(r));
            Ok(ctx.compare(p, ids, &[("A", &e)], det(&e)?, ring.zero()))
        })?,
        ctx.clause(4, &p("e"), Expectation::Holds, trials, |ids, p| {
            let (a, _, _) = draw(ids);
            Ok(ctx.compare(p, ids, &[("A", &a)], det(&a.transpose())?, det(&a)?))
        })?,
    ])
}

/// A random matrix whose row `r` is a combination of the others.
fn singular_matrix<R: Ring + ?Sized>(ring: &R, n: usize, ids: (u64, u64)) -> Result<Matrix<R::Elem>> {
    let mut rng = trial_rng(ids.0, ids.1);
    let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
    let r = rng.gen_range(0..n);
    let mut dependent = vec![ring.zero(); n];
    for i in (0..n).filter(|&i| i != r) {
        let c = ring.random_element(&mut rng, COEFFICIENT_BOUND);
        for (slot, x) in dependent.iter_mut().zip(a.row(i)) {
            *slot = ring.add(slot, &ring.mul(&c, x));
        }
    }
    Ok(a.with_row(r, &dependent))
}

fn nonsingular_matrix<R: Ring + ?Sized>(ring: &R, n: usize, ids: (u64, u64)) -> Result<Matrix<R::Elem>> {
    let mut rng = trial_rng(ids.0, ids.1);
    for _ in 0..NONSINGULAR_ATTEMPTS {
        let a = random_matrix(ring, n, &mut rng, COEFFICIENT_BOUND);
        if !ring.is_zero(&leibniz_det(ring, &a)?) {
            return Ok(a);
        }
    }
    Err(Error::Sampling(format!(
        "no nonsingular {n}x{n} matrix over {} in {NONSINGULAR_ATTEMPTS} draws",
        ring.name()
    )))
}
