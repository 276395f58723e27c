//! Operation counting, property suites and counterexample search.
//!
//! Every randomized trial draws from its own ChaCha8 stream, so a trial can be
//! replayed from `(seed, stream)` alone and results do not depend on how
//! trials are spread across threads.

pub mod counting;
pub mod measure;
pub mod search;
pub mod suites;

pub use counting::{CountingRing, OpCounts};
pub use measure::{bench, measure, BenchRow, OpCountReport};
pub use search::{replay, search_counterexample, Claim, SearchOutcome};
pub use suites::{run_property_suite, Expectation, PropertyReport, Suite};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::matrix::{encode_matrix, render_matrix, Matrix};
use crate::ring::Ring;

pub(crate) fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Runs `f` on `0..trials` split into contiguous blocks across `workers`
/// threads; results come back in trial order.
pub(crate) fn map_trials<T, F>(trials: u64, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync,
{
    let parts = (workers.max(1) as u64).min(trials.max(1));
    if parts <= 1 {
        return (0..trials).map(f).collect();
    }
    let base = trials / parts;
    let extra = trials % parts;
    let mut start = 0;
    let blocks: Vec<_> = (0..parts)
        .map(|i| {
            let len = base + u64::from(i < extra);
            let block = start..start + len;
            start += len;
            block
        })
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = blocks
            .into_iter()
            .map(|block| {
                let f = &f;
                scope.spawn(move || block.map(f).collect::<Vec<_>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("trial worker panicked"))
            .collect()
    })
}

/// A concrete instance where two sides of a claimed equation differ.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub property: String,
    pub ring: String,
    pub n: usize,
    pub seed: u64,
    pub stream: u64,
    /// Named input matrices, in the ring's JSON encoding.
    pub matrices: Vec<(String, Value)>,
    pub matrix_text: Vec<(String, String)>,
    pub lhs: Value,
    pub rhs: Value,
    pub lhs_text: String,
    pub rhs_text: String,
}

impl Witness {
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn new<R: Ring + ?Sized>(
        ring: &R,
        property: &str,
        n: usize,
        (seed, stream): (u64, u64),
        matrices: &[(&str, &Matrix<R::Elem>)],
        lhs: &R::Elem,
        rhs: &R::Elem,
    ) -> Self {
        Self {
            property: property.to_string(),
            ring: ring.name().to_string(),
            n,
            seed,
            stream,
            matrices: matrices
                .iter()
                .map(|(name, m)| (name.to_string(), encode_matrix(ring, m)))
                .collect(),
            matrix_text: matrices
                .iter()
                .map(|(name, m)| (name.to_string(), render_matrix(ring, m)))
                .collect(),
            lhs: ring.encode(lhs),
            rhs: ring.encode(rhs),
            lhs_text: ring.render(lhs),
            rhs_text: ring.render(rhs),
        }
    }

    pub fn to_json(&self) -> Value {
        let matrices: Map<String, Value> = self.matrices.iter().cloned().collect();
        let text: Map<String, Value> = self
            .matrix_text
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        json!({
            "property": self.property,
            "ring": self.ring,
            "n": self.n,
            "seed": self.seed.to_string(),
            "stream": self.stream.to_string(),
            "matrices": matrices,
            "matrix_text": text,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "lhs_text": self.lhs_text,
            "rhs_text": self.rhs_text,
        })
    }
}
