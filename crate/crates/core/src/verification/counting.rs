use std::cell::Cell;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use rand::RngCore;
use serde_json::Value;

use crate::error::Result;
use crate::ring::{ass_power_by_convolution, pow_by_squaring, Ring, RingDescriptor};

thread_local! {
    static POWER_DEPTH: Cell<u32> = const { Cell::new(0) };
}

/// Marks the current thread as inside a power computation until dropped.
struct PowerScope;

impl PowerScope {
    fn enter() -> Self {
        POWER_DEPTH.with(|d| d.set(d.get() + 1));
        PowerScope
    }
}

impl Drop for PowerScope {
    fn drop(&mut self) {
        POWER_DEPTH.with(|d| d.set(d.get() - 1));
    }
}

fn inside_power() -> bool {
    POWER_DEPTH.with(|d| d.get() > 0)
}

#[derive(Debug, Default)]
struct Counters {
    additions: AtomicU64,
    subtractions: AtomicU64,
    negations: AtomicU64,
    multiplications_in_pow: AtomicU64,
    multiplications_outside_pow: AtomicU64,
    divisions: AtomicU64,
}

fn bump(c: &AtomicU64) {
    c.fetch_add(1, Ordering::Relaxed);
}

/// Snapshot of a counting ring's tallies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub additions: u64,
    pub subtractions: u64,
    pub negations: u64,
    pub multiplications: u64,
    /// Multiplications performed inside `pow` / `ass_power`.
    pub multiplications_inside_pow: u64,
    pub divisions: u64,
}

/// Wraps a ring and tallies every arithmetic operation. Results are exactly
/// those of the inner ring.
///
/// Multiplications are attributed to powers through a per-thread scope entered
/// by `pow` and `ass_power`, so counting stays correct when engines split work
/// across threads.
#[derive(Debug)]
pub struct CountingRing<'a, R: ?Sized> {
    inner: &'a R,
    counters: Counters,
}

impl<'a, R: Ring + ?Sized> CountingRing<'a, R> {
    pub fn new(inner: &'a R) -> Self {
        Self {
            inner,
            counters: Counters::default(),
        }
    }

    pub fn inner(&self) -> &R {
        self.inner
    }

    pub fn counts(&self) -> OpCounts {
        let c = &self.counters;
        let load = |a: &AtomicU64| a.load(Ordering::Relaxed);
        let inside = load(&c.multiplications_in_pow);
        OpCounts {
            additions: load(&c.additions),
            subtractions: load(&c.subtractions),
            negations: load(&c.negations),
            multiplications: inside + load(&c.multiplications_outside_pow),
            multiplications_inside_pow: inside,
            divisions: load(&c.divisions),
        }
    }
}

impl<R: Ring + ?Sized> Ring for CountingRing<'_, R> {
    type Elem = R::Elem;

    fn descriptor(&self) -> &RingDescriptor {
        self.inner.descriptor()
    }

    fn zero(&self) -> R::Elem {
        self.inner.zero()
    }

    fn one(&self) -> Option<R::Elem> {
        self.inner.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        bump(&self.counters.additions);
        self.inner.add(a, b)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        bump(&self.counters.subtractions);
        self.inner.sub(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        bump(&self.counters.negations);
        self.inner.neg(a)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        if inside_power() {
            bump(&self.counters.multiplications_in_pow);
        } else {
            bump(&self.counters.multiplications_outside_pow);
        }
        self.inner.mul(a, b)
    }

    fn div_by_int(&self, a: &R::Elem, k: &BigInt) -> Result<R::Elem> {
        bump(&self.counters.divisions);
        self.inner.div_by_int(a, k)
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.inner.is_zero(a)
    }

    fn eq(&self, a: &R::Elem, b: &R::Elem) -> bool {
        self.inner.eq(a, b)
    }

    fn check(&self, a: &R::Elem) -> Result<()> {
        self.inner.check(a)
    }

    fn pow(&self, a: &R::Elem, n: u32) -> R::Elem {
        let _scope = PowerScope::enter();
        pow_by_squaring(self, a, n)
    }

    fn ass_power(&self, a: &R::Elem, n: u32) -> Result<R::Elem> {
        let _scope = PowerScope::enter();
        ass_power_by_convolution(self, a, n)
    }

    fn from_int(&self, k: i64) -> Option<R::Elem> {
        self.inner.from_int(k)
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> R::Elem {
        self.inner.random_element(rng, bound)
    }

    fn render(&self, a: &R::Elem) -> String {
        self.inner.render(a)
    }

    fn encode(&self, a: &R::Elem) -> Value {
        self.inner.encode(a)
    }

    fn decode(&self, v: &Value) -> Result<R::Elem> {
        self.inner.decode(v)
    }
}
