#![allow(dead_code)]

use edet_core::rational::Rational;
use edet_core::Ring;
use num_traits::{One, Zero};

/// Determinant by fraction-exact Gaussian elimination.
pub fn elimination_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col].clone();
        for r in col + 1..n {
            let factor = m[r][col].clone() / m[col][col].clone();
            for c in col..n {
                let delta = factor.clone() * m[col][c].clone();
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Determinant modulo a prime by elimination with Fermat inverses.
pub fn elimination_det_mod(rows: &[Vec<u64>], p: u64) -> u64 {
    let n = rows.len();
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inv = |a: u64| {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = mulmod(det, m[col][col]);
        let pinv = inv(m[col][col]);
        for r in col + 1..n {
            let factor = mulmod(m[r][col], pinv);
            for c in col..n {
                let delta = mulmod(factor, m[col][c]);
                m[r][c] = (m[r][c] + p - delta) % p;
            }
        }
    }
    det
}

/// All permutations of `0..n` with their inversion-count sign.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, inversions % 2 == 0)
        })
        .collect()
}

/// Every bracketing of the `n`-fold product `a × ⋯ × a`, enumerated
/// recursively by the outermost split.
pub fn all_bracketings<R: Ring>(ring: &R, a: &R::Elem, n: usize) -> Vec<R::Elem> {
    if n == 1 {
        return vec![a.clone()];
    }
    let mut out = Vec::new();
    for i in 1..n {
        let left = all_bracketings(ring, a, i);
        let right = all_bracketings(ring, a, n - i);
        for l in &left {
            for r in &right {
                out.push(ring.mul(l, r));
            }
        }
    }
    out
}
