//! Symbolic rings over the indeterminates of a generic `n×n` matrix:
//! commutative polynomials in `x_ij` and the free associative algebra on
//! noncommuting letters `a_ij`. Both hold expanded normal forms only.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{parse_rational, random_rational, rat, Rational};
use crate::ring::{Ring, RingDescriptor};

/// Largest order a symbolic ring can name (`x99`).
pub const MAX_SYMBOLIC_ORDER: usize = 9;
/// Caps for generic matrices, bounding the expansion of `(Σ letters)^n`.
pub const MAX_GENERIC_COMMUTATIVE: usize = 4;
pub const MAX_GENERIC_FREE: usize = 3;

/// Exponent vector over `x_11, .., x_nn`, row-major.
pub type Monomial = Vec<u16>;
/// Sequence of letter indices into `a_11, .., a_nn`, row-major.
pub type Word = Vec<u16>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Combination<K: Ord>(BTreeMap<K, Rational>);

pub type CommutativePolynomial = Combination<Monomial>;
pub type FreeAlgebraElement = Combination<Word>;

impl<K: Ord + Clone> Combination<K> {
    pub fn terms(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficient(&self, key: &K) -> Rational {
        self.0.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    fn from_terms(terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (k, c) in terms {
            accumulate(&mut map, k, c);
        }
        Self(map)
    }

    fn add(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (k, c) in &other.0 {
            accumulate(&mut map, k.clone(), c.clone());
        }
        Self(map)
    }

    fn neg(&self) -> Self {
        Self(self.0.iter().map(|(k, c)| (k.clone(), -c)).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (k, c) in &other.0 {
            accumulate(&mut map, k.clone(), -c);
        }
        Self(map)
    }

    fn product_by(&self, other: &Self, combine: impl Fn(&K, &K) -> K) -> Self {
        let mut map = BTreeMap::new();
        for (ka, ca) in &self.0 {
            for (kb, cb) in &other.0 {
                accumulate(&mut map, combine(ka, kb), ca * cb);
            }
        }
        Self(map)
    }

    fn divided(&self, k: &BigInt) -> Self {
        let k = Rational::from_integer(k.clone());
        Self(self.0.iter().map(|(m, c)| (m.clone(), c / &k)).collect())
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn variable_name(prefix: char, n: usize, index: usize) -> String {
    format!("{prefix}{}{}", index / n + 1, index % n + 1)
}

/// Renders `Σ c·factors` with `+`/`-` separators; `factors` yields `(name, power)`.
fn render_terms<'a, K: Ord + 'a>(
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    factors: impl Fn(&K) -> Vec<(String, u32)>,
) -> String {
    let mut out = String::new();
    for (key, c) in terms {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = c.abs();
        let parts: Vec<String> = factors(key)
            .into_iter()
            .map(|(name, p)| if p == 1 { name } else { format!("{name}^{p}") })
            .collect();
        if parts.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&parts.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `term (± term)*`, each term a `*`-product of rationals and
/// `name^k` factors; returns coefficient and factor list per term, in order.
fn parse_terms(
    text: &str,
    prefix: char,
    n: usize,
) -> Result<Vec<(Rational, Vec<(usize, u32)>)>> {
    let bad = |m: String| Error::Parse(format!("`{text}`: {m}"));
    let mut terms = Vec::new();
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty expression".into()));
    }
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in compact.chars() {
        match ch {
            '+' | '-' if current.is_empty() => negative ^= ch == '-',
            '+' | '-' if current.ends_with('*') || current.ends_with('^') => {
                return Err(bad("sign inside a product".into()));
            }
            '+' | '-' => {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    if current.is_empty() {
        return Err(bad("expression ends with an operator".into()));
    }
    pieces.push((negative, current));

    for (negative, piece) in pieces {
        let mut coefficient = Rational::one();
        let mut factors = Vec::new();
        for factor in piece.split('*') {
            if factor.is_empty() {
                return Err(bad("empty factor".into()));
            }
            if factor.starts_with(prefix) {
                let (name, power) = match factor.split_once('^') {
                    Some((name, p)) => (
                        name,
                        p.parse::<u32>()
                            .ok()
                            .filter(|&p| p >= 1)
                            .ok_or_else(|| bad(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let digits: Vec<usize> = name[1..]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()
                    .ok_or_else(|| bad(format!("bad variable `{name}`")))?;
                match digits.as_slice() {
                    [i, j] if (1..=n).contains(i) && (1..=n).contains(j) => {
                        factors.push(((i - 1) * n + (j - 1), power));
                    }
                    _ => return Err(bad(format!("variable `{name}` outside the {n}x{n} generic matrix"))),
                }
            } else {
                coefficient *= parse_rational(factor).map_err(|_| bad(format!("bad factor `{factor}`")))?;
            }
        }
        terms.push((if negative { -coefficient } else { coefficient }, factors));
    }
    Ok(terms)
}

fn decode_expression(v: &Value) -> Result<&str> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected an expression string, got {v}")))
}

/// `Q[x_11, .., x_nn]`.
#[derive(Debug, Clone)]
pub struct PolyRing {
    n: usize,
    descriptor: RingDescriptor,
}

impl PolyRing {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_SYMBOLIC_ORDER).contains(&n) {
            return Err(Error::OrderTooLarge { n, max: MAX_SYMBOLIC_ORDER });
        }
        Ok(Self {
            n,
            descriptor: RingDescriptor::new(format!("poly:{n}"), true, true, true, true, 0)?,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn variable(&self, i: usize, j: usize) -> CommutativePolynomial {
        let mut m = vec![0u16; self.n * self.n];
        m[i * self.n + j] = 1;
        Combination::from_terms([(m, Rational::one())])
    }

    pub fn constant(&self, c: Rational) -> CommutativePolynomial {
        Combination::from_terms([(vec![0u16; self.n * self.n], c)])
    }

    pub fn parse(&self, text: &str) -> Result<CommutativePolynomial> {
        let terms = parse_terms(text, 'x', self.n)?;
        Ok(Combination::from_terms(terms.into_iter().map(|(c, factors)| {
            let mut m = vec![0u16; self.n * self.n];
            for (v, p) in factors {
                m[v] += p as u16;
            }
            (m, c)
        })))
    }

    pub fn total_degree(&self, m: &Monomial) -> u32 {
        m.iter().map(|&e| e as u32).sum()
    }
}

impl Ring for PolyRing {
    type Elem = CommutativePolynomial;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Self::Elem {
        Combination::default()
    }

    fn one(&self) -> Option<Self::Elem> {
        Some(self.constant(Rational::one()))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.product_by(b, |x, y| x.iter().zip(y).map(|(p, q)| p + q).collect())
    }

    fn div_by_int(&self, a: &Self::Elem, k: &BigInt) -> Result<Self::Elem> {
        self.descriptor.require_division_by(k)?;
        Ok(a.divided(k))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        if a.terms().any(|(m, c)| m.len() != self.n * self.n || c.is_zero()) {
            return Err(Error::RingMismatch(format!("polynomial not over {}", self.descriptor.name)));
        }
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<Self::Elem> {
        Some(self.constant(rat(k)))
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Self::Elem {
        let v = rng.gen_range(0..self.n * self.n);
        let linear = self.variable(v / self.n, v % self.n);
        let c = self.constant(random_rational(rng, bound));
        self.add(&self.mul(&self.constant(random_rational(rng, bound)), &linear), &c)
    }

    fn render(&self, a: &Self::Elem) -> String {
        // Graded order: higher total degree first, then reverse lexicographic keys.
        let mut terms: Vec<_> = a.terms().collect();
        terms.sort_by(|(x, _), (y, _)| {
            self.total_degree(y).cmp(&self.total_degree(x)).then_with(|| y.cmp(x))
        });
        render_terms(terms.into_iter(), |m| {
            m.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| (variable_name('x', self.n, v), e as u32))
                .collect()
        })
    }

    fn encode(&self, a: &Self::Elem) -> Value {
        Value::String(self.render(a))
    }

    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        self.parse(decode_expression(v)?)
    }
}

/// The free associative algebra `Q<a_11, .., a_nn>`.
#[derive(Debug, Clone)]
pub struct FreeAlgebra {
    n: usize,
    descriptor: RingDescriptor,
}

impl FreeAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        if !(1..=MAX_SYMBOLIC_ORDER).contains(&n) {
            return Err(Error::OrderTooLarge { n, max: MAX_SYMBOLIC_ORDER });
        }
        Ok(Self {
            n,
            descriptor: RingDescriptor::new(format!("free:{n}"), n == 1, true, true, true, 0)?,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn letter(&self, i: usize, j: usize) -> FreeAlgebraElement {
        Combination::from_terms([(vec![(i * self.n + j) as u16], Rational::one())])
    }

    pub fn constant(&self, c: Rational) -> FreeAlgebraElement {
        Combination::from_terms([(Vec::new(), c)])
    }

    pub fn parse(&self, text: &str) -> Result<FreeAlgebraElement> {
        let terms = parse_terms(text, 'a', self.n)?;
        Ok(Combination::from_terms(terms.into_iter().map(|(c, factors)| {
            let word = factors
                .into_iter()
                .flat_map(|(v, p)| std::iter::repeat(v as u16).take(p as usize))
                .collect();
            (word, c)
        })))
    }
}

impl Ring for FreeAlgebra {
    type Elem = FreeAlgebraElement;

    fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    fn zero(&self) -> Self::Elem {
        Combination::default()
    }

    fn one(&self) -> Option<Self::Elem> {
        Some(self.constant(Rational::one()))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.sub(b)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.product_by(b, |x, y| x.iter().chain(y).copied().collect())
    }

    fn div_by_int(&self, a: &Self::Elem, k: &BigInt) -> Result<Self::Elem> {
        self.descriptor.require_division_by(k)?;
        Ok(a.divided(k))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }

    fn check(&self, a: &Self::Elem) -> Result<()> {
        let letters = (self.n * self.n) as u16;
        if a.terms().any(|(w, c)| w.iter().any(|&l| l >= letters) || c.is_zero()) {
            return Err(Error::RingMismatch(format!("word not over {}", self.descriptor.name)));
        }
        Ok(())
    }

    fn from_int(&self, k: i64) -> Option<Self::Elem> {
        Some(self.constant(rat(k)))
    }

    fn random_element(&self, rng: &mut dyn RngCore, bound: u32) -> Self::Elem {
        let v = rng.gen_range(0..self.n * self.n);
        let linear = self.letter(v / self.n, v % self.n);
        let c = self.constant(random_rational(rng, bound));
        self.add(&self.mul(&self.constant(random_rational(rng, bound)), &linear), &c)
    }

    fn render(&self, a: &Self::Elem) -> String {
        let mut terms: Vec<_> = a.terms().collect();
        terms.sort_by(|(x, _), (y, _)| y.len().cmp(&x.len()).then_with(|| x.cmp(y)));
        render_terms(terms.into_iter(), |w| {
            let mut runs: Vec<(String, u32)> = Vec::new();
            let mut last: Option<u16> = None;
            for &l in w {
                match runs.last_mut() {
                    Some(run) if last == Some(l) => run.1 += 1,
                    _ => runs.push((variable_name('a', self.n, l as usize), 1)),
                }
                last = Some(l);
            }
            runs
        })
    }

    fn encode(&self, a: &Self::Elem) -> Value {
        Value::String(self.render(a))
    }

    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        self.parse(decode_expression(v)?)
    }
}

/// The generic matrix `(x_ij)` over `Q[x_11, .., x_nn]`, `n <= 4`.
pub fn generic_commutative_matrix(n: usize) -> Result<(PolyRing, Matrix<CommutativePolynomial>)> {
    if n == 0 || n > MAX_GENERIC_COMMUTATIVE {
        return Err(Error::OrderTooLarge { n, max: MAX_GENERIC_COMMUTATIVE });
    }
    let ring = PolyRing::new(n)?;
    let m = Matrix::from_fn(n, |i, j| ring.variable(i, j));
    Ok((ring, m))
}

/// The generic matrix `(a_ij)` over the free algebra, `n <= 3`.
pub fn generic_free_matrix(n: usize) -> Result<(FreeAlgebra, Matrix<FreeAlgebraElement>)> {
    if n == 0 || n > MAX_GENERIC_FREE {
        return Err(Error::OrderTooLarge { n, max: MAX_GENERIC_FREE });
    }
    let ring = FreeAlgebra::new(n)?;
    let m = Matrix::from_fn(n, |i, j| ring.letter(i, j));
    Ok((ring, m))
}

/// Either flavour of generic matrix together with its ring.
#[derive(Debug, Clone)]
pub enum SymbolicMatrix {
    Commutative(PolyRing, Matrix<CommutativePolynomial>),
    Free(FreeAlgebra, Matrix<FreeAlgebraElement>),
}

pub fn free_symbolic_matrix(n: usize, commutative: bool) -> Result<SymbolicMatrix> {
    if commutative {
        generic_commutative_matrix(n).map(|(r, m)| SymbolicMatrix::Commutative(r, m))
    } else {
        generic_free_matrix(n).map(|(r, m)| SymbolicMatrix::Free(r, m))
    }
}
