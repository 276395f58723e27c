//! Determinant engines over the ring contract.
//!
//! All power-sum engines share one schedule: for every permutation `σ` (in
//! lexicographic rank order) compute the diagonal sum `su(l(σ))` and its `n`
//! leave-one-out sums, map each through a power-like function, and accumulate
//! into four blocks keyed by subdiagonal length (`n` or `n-1`) and parent
//! parity. The determinant is
//!
//! ```text
//! det(A) = -(1/n!) { S_{n-1}^e - S_{n-1}^o + S_n^o - S_n^e }
//! ```
//!
//! where `S_k^p` sums `su(l)^n` over subdiagonals of length `k` with parent
//! parity `p`. Subdiagonals shorter than `n-1` cancel between parities and are
//! never enumerated.
//!
//! Accumulators start from the first term rather than from zero, so a sum of
//! `k` terms always costs `k-1` additions however the rank range is split
//! across workers; results and operation counts are identical for any worker
//! count.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::combinatorics::{
    catalan, factorial, permutation_range, permutations, rank_blocks, subdiagonal_sums,
    GammaAssignment, Parity,
};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingDescriptor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DetMethod {
    /// Signed sum of diagonal products.
    Leibniz,
    /// Polarized form with one free variable per permutation.
    B3,
    /// Power sums shifted by a single constant.
    B4,
    /// Plain power sums; the determinant over associative and
    /// power-associative rings.
    B5,
    /// Symmetrized double sum over row and column permutations.
    Sdet,
    /// Power sums with powers replaced by bracketing averages.
    Nonassoc,
}

impl DetMethod {
    pub const ALL: [DetMethod; 6] = [
        DetMethod::Leibniz,
        DetMethod::B3,
        DetMethod::B4,
        DetMethod::B5,
        DetMethod::Sdet,
        DetMethod::Nonassoc,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DetMethod::Leibniz => "leibniz",
            DetMethod::B3 => "b3",
            DetMethod::B4 => "b4",
            DetMethod::B5 => "b5",
            DetMethod::Sdet => "sdet",
            DetMethod::Nonassoc => "nonassoc",
        }
    }

    /// Checks the ring flags this method needs.
    pub fn check_admissible(self, d: &RingDescriptor) -> Result<()> {
        match self {
            DetMethod::Leibniz | DetMethod::B3 | DetMethod::B4 => require_commutative(d),
            DetMethod::B5 => require_power_associative(d),
            DetMethod::Sdet => require_associative(d),
            DetMethod::Nonassoc => Ok(()),
        }
    }
}

impl fmt::Display for DetMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DetMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DetMethod::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method `{s}`")))
    }
}

fn require_commutative(d: &RingDescriptor) -> Result<()> {
    if d.is_commutative {
        Ok(())
    } else {
        Err(Error::RingNotCommutative(d.name.clone()))
    }
}

fn require_associative(d: &RingDescriptor) -> Result<()> {
    if d.is_associative {
        Ok(())
    } else {
        Err(Error::RingNotAssociative(d.name.clone()))
    }
}

fn require_power_associative(d: &RingDescriptor) -> Result<()> {
    if d.is_power_associative {
        Ok(())
    } else {
        Err(Error::RingNotPowerAssociative(d.name.clone()))
    }
}

fn order_u32(a_order: usize) -> u32 {
    u32::try_from(a_order).expect("matrix order fits in u32")
}

fn add_opt<R: Ring + ?Sized>(ring: &R, acc: Option<R::Elem>, term: Option<R::Elem>) -> Option<R::Elem> {
    match (acc, term) {
        (Some(a), Some(t)) => Some(ring.add(&a, &t)),
        (a, None) => a,
        (None, t) => t,
    }
}

fn sub_opt<R: Ring + ?Sized>(ring: &R, a: Option<R::Elem>, b: Option<R::Elem>) -> Option<R::Elem> {
    match (a, b) {
        (Some(a), Some(b)) => Some(ring.sub(&a, &b)),
        (a, None) => a,
        (None, Some(b)) => Some(ring.neg(&b)),
    }
}

/// Sum of terms carrying a sign, kept as separate positive and negative parts.
#[derive(Debug, Clone)]
pub struct SignedSum<E> {
    positive: Option<E>,
    negative: Option<E>,
}

impl<E: Clone> Default for SignedSum<E> {
    fn default() -> Self {
        Self {
            positive: None,
            negative: None,
        }
    }
}

impl<E: Clone> SignedSum<E> {
    pub fn push<R: Ring<Elem = E> + ?Sized>(&mut self, ring: &R, positive: bool, term: E) {
        let slot = if positive {
            &mut self.positive
        } else {
            &mut self.negative
        };
        *slot = add_opt(ring, slot.take(), Some(term));
    }

    pub fn merge<R: Ring<Elem = E> + ?Sized>(self, ring: &R, other: Self) -> Self {
        Self {
            positive: add_opt(ring, self.positive, other.positive),
            negative: add_opt(ring, self.negative, other.negative),
        }
    }

    pub fn finish<R: Ring<Elem = E> + ?Sized>(self, ring: &R) -> E {
        sub_opt(ring, self.positive, self.negative).unwrap_or_else(|| ring.zero())
    }
}

/// The four power-sum blocks over subdiagonals of length `n-1` ("sub") and
/// `n` ("full"), split by parent parity.
#[derive(Debug, Clone)]
pub struct BlockSums<E> {
    pub sub_even: Option<E>,
    pub sub_odd: Option<E>,
    pub full_even: Option<E>,
    pub full_odd: Option<E>,
}

impl<E: Clone> Default for BlockSums<E> {
    fn default() -> Self {
        Self {
            sub_even: None,
            sub_odd: None,
            full_even: None,
            full_odd: None,
        }
    }
}

impl<E: Clone> BlockSums<E> {
    fn merge<R: Ring<Elem = E> + ?Sized>(self, ring: &R, other: Self) -> Self {
        Self {
            sub_even: add_opt(ring, self.sub_even, other.sub_even),
            sub_odd: add_opt(ring, self.sub_odd, other.sub_odd),
            full_even: add_opt(ring, self.full_even, other.full_even),
            full_odd: add_opt(ring, self.full_odd, other.full_odd),
        }
    }

    /// The four blocks as ring values (empty blocks are zero), in the order
    /// `(sub_even, sub_odd, full_odd, full_even)`.
    pub fn values<R: Ring<Elem = E> + ?Sized>(&self, ring: &R) -> [E; 4] {
        let v = |x: &Option<E>| x.clone().unwrap_or_else(|| ring.zero());
        [v(&self.sub_even), v(&self.sub_odd), v(&self.full_odd), v(&self.full_even)]
    }

    /// `S_{n-1}^e - S_{n-1}^o + S_n^o - S_n^e`, the bracket shared by every
    /// power-sum formula.
    pub fn alternating_total<R: Ring<Elem = E> + ?Sized>(self, ring: &R) -> E {
        let positive = add_opt(ring, self.sub_even, self.full_odd);
        let negative = add_opt(ring, self.sub_odd, self.full_even);
        sub_opt(ring, positive, negative).unwrap_or_else(|| ring.zero())
    }

    /// `-(bracket)`, computed as `(S_{n-1}^o + S_n^e) - (S_{n-1}^e + S_n^o)`.
    fn negated_total<R: Ring<Elem = E> + ?Sized>(self, ring: &R) -> E {
        let positive = add_opt(ring, self.sub_odd, self.full_even);
        let negative = add_opt(ring, self.sub_even, self.full_odd);
        sub_opt(ring, positive, negative).unwrap_or_else(|| ring.zero())
    }
}

/// Runs `work` over contiguous rank blocks of `S_n`, one scoped thread per
/// block, and returns the partial results in rank order.
fn over_rank_blocks<T, F>(n: usize, workers: usize, work: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(Range<u64>) -> Result<T> + Sync,
{
    let blocks = rank_blocks(n, workers);
    if blocks.len() == 1 {
        return Ok(vec![work(blocks[0].clone())?]);
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = blocks
            .into_iter()
            .map(|block| {
                let work = &work;
                scope.spawn(move || work(block))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("engine worker panicked"))
            .collect()
    })
}

/// Accumulates `term(su(l))` over all subdiagonals of length `n-1` and `n`.
pub fn power_blocks<R, F>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
    term: F,
) -> Result<BlockSums<R::Elem>>
where
    R: Ring + ?Sized,
    F: Fn(&R::Elem) -> Result<R::Elem> + Sync,
{
    let n = a.order();
    let partials = over_rank_blocks(n, workers, |ranks| {
        let mut blocks = BlockSums::default();
        for sigma in permutation_range(n, ranks) {
            let (full, rest) = subdiagonal_sums(ring, a, &sigma)?;
            let (sub_slot, full_slot) = match sigma.parity() {
                Parity::Even => (&mut blocks.sub_even, &mut blocks.full_even),
                Parity::Odd => (&mut blocks.sub_odd, &mut blocks.full_odd),
            };
            for s in &rest {
                *sub_slot = add_opt(ring, sub_slot.take(), Some(term(s)?));
            }
            *full_slot = add_opt(ring, full_slot.take(), Some(term(&full)?));
        }
        Ok(blocks)
    })?;
    Ok(partials
        .into_iter()
        .reduce(|acc, p| acc.merge(ring, p))
        .expect("at least one rank block"))
}

/// Definition of the determinant over a commutative ring:
/// `Σ_σ sign(σ) a_{1σ(1)} ⋯ a_{nσ(n)}`.
pub fn leibniz_det<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    leibniz_det_with(ring, a, 1)
}

pub fn leibniz_det_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    require_commutative(ring.descriptor())?;
    let n = a.order();
    let partials = over_rank_blocks(n, workers, |ranks| {
        let mut sum = SignedSum::default();
        for sigma in permutation_range(n, ranks) {
            let mut product = a.get(0, sigma.at(0)).clone();
            for i in 1..n {
                product = ring.mul(&product, a.get(i, sigma.at(i)));
            }
            sum.push(ring, sigma.parity() == Parity::Even, product);
        }
        Ok(sum)
    })?;
    Ok(merge_signed(ring, partials).finish(ring))
}

fn merge_signed<R: Ring + ?Sized>(ring: &R, partials: Vec<SignedSum<R::Elem>>) -> SignedSum<R::Elem> {
    partials
        .into_iter()
        .reduce(|acc, p| acc.merge(ring, p))
        .expect("at least one rank block")
}

/// The polarized determinant with one free variable `γ_σ` per permutation:
///
/// ```text
/// (1/n!) Σ_σ sign(σ) Σ_{S ⊆ [n]} (-1)^{n-|S|} (γ_σ + Σ_{j∈S} a_{jσ(j)})^n
/// ```
///
/// (the `S = ∅` term is `(-1)^n γ_σ^n`). Equals the determinant for every
/// assignment.
pub fn polarized_det<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    gamma: &GammaAssignment<R::Elem>,
) -> Result<R::Elem> {
    polarized_det_with(ring, a, gamma, 1)
}

pub fn polarized_det_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    gamma: &GammaAssignment<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    let d = ring.descriptor();
    require_commutative(d)?;
    let n = a.order();
    let n_fact = factorial(n);
    d.require_division_by(&n_fact)?;
    gamma.validate(n)?;
    let exponent = order_u32(n);
    let partials = over_rank_blocks(n, workers, |ranks| {
        let mut outer = SignedSum::default();
        let mut sums: Vec<R::Elem> = Vec::with_capacity(1 << n);
        for sigma in permutation_range(n, ranks.clone()) {
            let diagonal: Vec<&R::Elem> = (0..n).map(|i| a.get(i, sigma.at(i))).collect();
            sums.clear();
            sums.push(gamma.value(ring, sigma.rank()));
            let mut inner = SignedSum::default();
            inner.push(ring, n % 2 == 0, ring.pow(&sums[0], exponent));
            for mask in 1usize..(1 << n) {
                let low = mask.trailing_zeros() as usize;
                let s = ring.add(&sums[mask & (mask - 1)], diagonal[low]);
                let size = mask.count_ones() as usize;
                inner.push(ring, (n - size) % 2 == 0, ring.pow(&s, exponent));
                sums.push(s);
            }
            outer.push(ring, sigma.parity() == Parity::Even, inner.finish(ring));
        }
        Ok(outer)
    })?;
    ring.div_by_int(&merge_signed(ring, partials).finish(ring), &n_fact)
}

/// Power sums shifted by one constant: `(γ + su(l))^n` in every block.
pub fn uniform_gamma_det<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    gamma: &R::Elem,
) -> Result<R::Elem> {
    uniform_gamma_det_with(ring, a, gamma, 1)
}

pub fn uniform_gamma_det_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    gamma: &R::Elem,
    workers: usize,
) -> Result<R::Elem> {
    let d = ring.descriptor();
    require_commutative(d)?;
    let n = a.order();
    let n_fact = factorial(n);
    d.require_division_by(&n_fact)?;
    let exponent = order_u32(n);
    let blocks = power_blocks(ring, a, workers, |s| Ok(ring.pow(&ring.add(gamma, s), exponent)))?;
    ring.div_by_int(&blocks.negated_total(ring), &n_fact)
}

/// The power-sum determinant `-(1/n!){S_{n-1}^e - S_{n-1}^o + S_n^o - S_n^e}`
/// with `su(l)^n` by repeated squaring. Over associative rings this is the
/// noncommutative determinant; it also applies to power-associative rings,
/// where `a^n` is unambiguous.
pub fn power_sum_det<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    power_sum_det_with(ring, a, 1)
}

pub fn power_sum_det_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    let d = ring.descriptor();
    require_power_associative(d)?;
    let n = a.order();
    let n_fact = factorial(n);
    d.require_division_by(&n_fact)?;
    let exponent = order_u32(n);
    let blocks = power_blocks(ring, a, workers, |s| Ok(ring.pow(s, exponent)))?;
    ring.div_by_int(&blocks.negated_total(ring), &n_fact)
}

/// Symmetrized double sum
/// `(1/n!) Σ_μ Σ_σ sign(μ)sign(σ) a_{μ(1)σ(1)} ⋯ a_{μ(n)σ(n)}`,
/// `(n!)²` products; an oracle for small `n`.
pub fn sdet_barvinok<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    sdet_barvinok_with(ring, a, 1)
}

pub fn sdet_barvinok_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    let d = ring.descriptor();
    require_associative(d)?;
    let n = a.order();
    let n_fact = factorial(n);
    d.require_division_by(&n_fact)?;
    let partials = over_rank_blocks(n, workers, |ranks| {
        let mut sum = SignedSum::default();
        for mu in permutation_range(n, ranks) {
            for sigma in permutations(n) {
                let mut product = a.get(mu.at(0), sigma.at(0)).clone();
                for t in 1..n {
                    product = ring.mul(&product, a.get(mu.at(t), sigma.at(t)));
                }
                sum.push(ring, mu.parity() == sigma.parity(), product);
            }
        }
        Ok(sum)
    })?;
    ring.div_by_int(&merge_signed(ring, partials).finish(ring), &n_fact)
}

/// Average of all `C_n` bracketings of the `n`-fold product `a × ⋯ × a`.
pub fn ass_power<R: Ring + ?Sized>(ring: &R, a: &R::Elem, n: u32) -> Result<R::Elem> {
    if n == 0 {
        return Err(Error::ExponentOutOfRange { t: 0, max: u32::MAX });
    }
    ring.descriptor().require_division_by(&catalan(n as usize))?;
    ring.ass_power(a, n)
}

/// The power-sum determinant with `su(l)^n` replaced by the bracketing
/// average; defined over any ring with the needed integer divisions.
pub fn nonassoc_edet<R: Ring + ?Sized>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    nonassoc_edet_with(ring, a, 1)
}

pub fn nonassoc_edet_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    let d = ring.descriptor();
    let n = a.order();
    let n_fact = factorial(n);
    d.require_division_by(&n_fact)?;
    d.require_division_by(&catalan(n))?;
    let exponent = order_u32(n);
    let blocks = power_blocks(ring, a, workers, |s| ring.ass_power(s, exponent))?;
    ring.div_by_int(&blocks.negated_total(ring), &n_fact)
}

/// The alternating power-sum bracket with exponent `t`; zero for
/// `1 <= t <= n-1` over commutative rings.
pub fn identity_residual<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    t: u32,
) -> Result<R::Elem> {
    identity_residual_with(ring, a, t, 1)
}

pub fn identity_residual_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    t: u32,
    workers: usize,
) -> Result<R::Elem> {
    require_commutative(ring.descriptor())?;
    let max = order_u32(a.order()) - 1;
    if t == 0 || t > max {
        return Err(Error::ExponentOutOfRange { t, max });
    }
    let blocks = power_blocks(ring, a, workers, |s| Ok(ring.pow(s, t)))?;
    Ok(blocks.alternating_total(ring))
}

/// Outcome of the power-sum singularity criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularityVerdict<E> {
    pub singular: bool,
    /// `S_n^e - S_n^o`.
    pub full_difference: E,
    /// `S_{n-1}^e - S_{n-1}^o`.
    pub sub_difference: E,
}

/// `det(A) = 0` iff `S_n^e - S_n^o = S_{n-1}^e - S_{n-1}^o`.
pub fn singularity_check<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
) -> Result<SingularityVerdict<R::Elem>> {
    singularity_check_with(ring, a, 1)
}

pub fn singularity_check_with<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    workers: usize,
) -> Result<SingularityVerdict<R::Elem>> {
    require_commutative(ring.descriptor())?;
    let exponent = order_u32(a.order());
    let blocks = power_blocks(ring, a, workers, |s| Ok(ring.pow(s, exponent)))?;
    let full_difference =
        sub_opt(ring, blocks.full_even, blocks.full_odd).unwrap_or_else(|| ring.zero());
    let sub_difference =
        sub_opt(ring, blocks.sub_even, blocks.sub_odd).unwrap_or_else(|| ring.zero());
    Ok(SingularityVerdict {
        singular: ring.eq(&full_difference, &sub_difference),
        full_difference,
        sub_difference,
    })
}

/// Evaluates `method`, checking admissibility first. `gamma` is used by `b3`
/// (any mode) and `b4` (`Zero` or `Constant` only).
pub fn determinant<R: Ring + ?Sized>(
    ring: &R,
    a: &Matrix<R::Elem>,
    method: DetMethod,
    gamma: &GammaAssignment<R::Elem>,
    workers: usize,
) -> Result<R::Elem> {
    method.check_admissible(ring.descriptor())?;
    match method {
        DetMethod::Leibniz => leibniz_det_with(ring, a, workers),
        DetMethod::B3 => polarized_det_with(ring, a, gamma, workers),
        DetMethod::B4 => {
            let g = match gamma {
                GammaAssignment::Zero => ring.zero(),
                GammaAssignment::Constant(g) => g.clone(),
                _ => {
                    return Err(Error::GammaMode(
                        "b4 takes a single constant gamma".into(),
                    ))
                }
            };
            uniform_gamma_det_with(ring, a, &g, workers)
        }
        DetMethod::B5 => power_sum_det_with(ring, a, workers),
        DetMethod::Sdet => sdet_barvinok_with(ring, a, workers),
        DetMethod::Nonassoc => nonassoc_edet_with(ring, a, workers),
    }
}

/// The division needed by `method` at order `n`: `n!`, times `C_n` for the
/// bracketing average.
pub fn required_divisors(method: DetMethod, n: usize) -> Vec<BigInt> {
    match method {
        DetMethod::Leibniz => vec![],
        DetMethod::Nonassoc => vec![factorial(n), catalan(n)],
        _ => vec![factorial(n)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{skew_cube_algebra, MatrixRing, Octonions, Quaternions};
    use crate::matrix::{from_ints, identity};
    use crate::prime_field::PrimeField;
    use crate::rational::{rat, Rationals};

    #[test]
    fn two_by_two_examples() {
        let q = Rationals::new();
        let a = from_ints(&q, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(leibniz_det(&q, &a).unwrap(), rat(-2));
        assert_eq!(power_sum_det(&q, &a).unwrap(), rat(-2));
        assert_eq!(sdet_barvinok(&q, &a).unwrap(), rat(-2));
        assert_eq!(uniform_gamma_det(&q, &a, &rat(0)).unwrap(), rat(-2));
        assert_eq!(
            polarized_det(&q, &a, &GammaAssignment::Constant(rat(7))).unwrap(),
            rat(-2)
        );
        assert_eq!(nonassoc_edet(&q, &a).unwrap(), rat(-2));
    }

    #[test]
    fn block_values_for_small_cases() {
        let q = Rationals::new();
        // Hand expansion: sub blocks 1+16 and 4+9, full blocks 25 and 25.
        let a = from_ints(&q, &[&[1, 2], &[3, 4]]).unwrap();
        let b = power_blocks(&q, &a, 1, |s| Ok(q.pow(s, 2))).unwrap();
        assert_eq!(b.values(&q), [rat(17), rat(13), rat(25), rat(25)]);
        // I_3: sub even 3·2³, sub odd 3·(0+1+1), full odd 3·1, full even 3³.
        let i3 = identity(&q, 3).unwrap();
        let b = power_blocks(&q, &i3, 1, |s| Ok(q.pow(s, 3))).unwrap();
        assert_eq!(b.values(&q), [rat(24), rat(6), rat(3), rat(27)]);
        assert_eq!(power_sum_det(&q, &i3).unwrap(), rat(1));
    }

    #[test]
    fn identities_are_one() {
        let q = Rationals::new();
        for n in 1..=6 {
            let i = identity(&q, n).unwrap();
            assert_eq!(leibniz_det(&q, &i).unwrap(), rat(1), "n={n}");
            assert_eq!(power_sum_det(&q, &i).unwrap(), rat(1), "n={n}");
        }
        let i2 = identity(&q, 2).unwrap();
        assert_eq!(uniform_gamma_det(&q, &i2, &rat(1)).unwrap(), rat(1));
    }

    #[test]
    fn quaternion_example() {
        let h = Quaternions::new();
        let a = Matrix::from_rows(vec![
            vec![Quaternions::i(), Quaternions::j()],
            vec![Quaternions::k(), h.one().unwrap()],
        ])
        .unwrap();
        assert_eq!(power_sum_det(&h, &a).unwrap(), Quaternions::i());
        assert_eq!(sdet_barvinok(&h, &a).unwrap(), Quaternions::i());
        assert!(matches!(leibniz_det(&h, &a), Err(Error::RingNotCommutative(_))));
    }

    #[test]
    fn ass_power_examples() {
        let t = skew_cube_algebra();
        let u = t.basis(0);
        // (uu)u = v and u(uu) = u; the average over C_3 = 2 bracketings.
        assert_eq!(ass_power(&t, &u, 3).unwrap(), vec![crate::rational::ratio(1, 2); 2]);
        assert_eq!(ass_power(&t, &u, 1).unwrap(), u);
        let o = Octonions::new();
        let x = Octonions::from_ints([1, 2, -1, 0, 3, 1, 0, -2]);
        assert_eq!(ass_power(&o, &x, 3).unwrap(), o.pow(&x, 3));
    }

    #[test]
    fn admissibility() {
        let t = skew_cube_algebra();
        let a = Matrix::from_fn(2, |i, j| t.basis((i + j) % 2));
        assert!(matches!(power_sum_det(&t, &a), Err(Error::RingNotPowerAssociative(_))));
        assert!(matches!(sdet_barvinok(&t, &a), Err(Error::RingNotAssociative(_))));
        assert!(nonassoc_edet(&t, &a).is_ok());
        let o = Octonions::new();
        let b = Matrix::from_fn(2, |i, j| Octonions::basis(i + 2 * j + 1));
        assert_eq!(power_sum_det(&o, &b).unwrap(), nonassoc_edet(&o, &b).unwrap());
    }

    #[test]
    fn division_unavailable_in_small_characteristic() {
        let f = PrimeField::new(3).unwrap();
        let a = identity(&f, 3).unwrap();
        assert!(matches!(power_sum_det(&f, &a), Err(Error::DivisionUnavailable { .. })));
        assert_eq!(leibniz_det(&f, &a).unwrap(), 1);
        let f7 = PrimeField::new(7).unwrap();
        let b = from_ints(&f7, &[&[1, 2, 0], &[3, 4, 5], &[6, 0, 1]]).unwrap();
        assert_eq!(power_sum_det(&f7, &b).unwrap(), leibniz_det(&f7, &b).unwrap());
        // Nonassoc at n = 4 needs C_4 = 5 invertible.
        let f5 = PrimeField::new(5).unwrap();
        let c = identity(&f5, 4).unwrap();
        assert!(matches!(nonassoc_edet(&f5, &c), Err(Error::DivisionUnavailable { .. })));
    }

    #[test]
    fn residual_and_singularity() {
        let q = Rationals::new();
        let i3 = identity(&q, 3).unwrap();
        let b = power_blocks(&q, &i3, 1, |s| Ok(s.clone())).unwrap();
        assert_eq!(b.values(&q), [rat(6), rat(6), rat(3), rat(3)]);
        assert_eq!(identity_residual(&q, &i3, 1).unwrap(), rat(0));
        assert_eq!(identity_residual(&q, &i3, 2).unwrap(), rat(0));
        assert!(matches!(identity_residual(&q, &i3, 3), Err(Error::ExponentOutOfRange { .. })));
        assert!(matches!(identity_residual(&q, &i3, 0), Err(Error::ExponentOutOfRange { .. })));
        assert!(!singularity_check(&q, &i3).unwrap().singular);
        let s = from_ints(&q, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(singularity_check(&q, &s).unwrap().singular);
    }

    #[test]
    fn lemma_unit_over_matrix_ring() {
        let r = MatrixRing::new(2, Rationals::new()).unwrap();
        for n in 2..=4 {
            let i = identity(&r, n).unwrap();
            assert_eq!(power_sum_det(&r, &i).unwrap(), r.one().unwrap());
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let q = Rationals::new();
        let a = from_ints(&q, &[&[3, -1, 4, 1], &[5, 9, -2, 6], &[5, 3, 5, -8], &[9, 7, 9, 3]]).unwrap();
        let reference = leibniz_det(&q, &a).unwrap();
        for w in [1, 2, 3, 4, 7, 24, 100] {
            assert_eq!(leibniz_det_with(&q, &a, w).unwrap(), reference);
            assert_eq!(power_sum_det_with(&q, &a, w).unwrap(), reference);
            assert_eq!(
                polarized_det_with(&q, &a, &GammaAssignment::Seeded(5), w).unwrap(),
                reference
            );
            assert_eq!(sdet_barvinok_with(&q, &a, w).unwrap(), reference);
        }
    }

    #[test]
    fn gamma_modes() {
        let q = Rationals::new();
        let a = from_ints(&q, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        let det = leibniz_det(&q, &a).unwrap();
        let explicit: Vec<_> = (0..6).map(|k| rat(k * k - 3)).collect();
        for g in [
            GammaAssignment::Zero,
            GammaAssignment::Constant(rat(-5)),
            GammaAssignment::Explicit(explicit),
            GammaAssignment::Seeded(99),
        ] {
            assert_eq!(polarized_det(&q, &a, &g).unwrap(), det);
        }
        assert!(matches!(
            polarized_det(&q, &a, &GammaAssignment::Explicit(vec![rat(1); 5])),
            Err(Error::PayloadLength { expected: 6, got: 5 })
        ));
        assert!(matches!(
            determinant(&q, &a, DetMethod::B4, &GammaAssignment::Seeded(1), 1),
            Err(Error::GammaMode(_))
        ));
    }

    #[test]
    fn method_names_round_trip() {
        for m in DetMethod::ALL {
            assert_eq!(m.as_str().parse::<DetMethod>().unwrap(), m);
        }
        assert!("b6".parse::<DetMethod>().is_err());
    }
}
