use std::collections::HashMap;

use super::WeightPolynomial;
use crate::error::{Error, Result};

/// Skew-symmetric matrix over `Z[t]`, stored by its strict upper triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    size: usize,
    upper: Vec<WeightPolynomial>,
}

impl SkewMatrix {
    pub fn zeros(size: usize) -> Self {
        Self {
            size,
            upper: vec![WeightPolynomial::zero(); size * size.saturating_sub(1) / 2],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.size);
        // row-major strict upper triangle
        i * (2 * self.size - i - 1) / 2 + (j - i - 1)
    }

    /// Sets `a[i][j]` (0-indexed, `i < j`); `a[j][i]` is its negation.
    pub fn set(&mut self, i: usize, j: usize, value: WeightPolynomial) {
        assert!(i < j, "set the upper triangle only");
        let idx = self.index(i, j);
        self.upper[idx] = value;
    }

    /// Entry `a[i][j]` for any `i, j`.
    pub fn get(&self, i: usize, j: usize) -> WeightPolynomial {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.upper[self.index(i, j)].clone(),
            Greater => -&self.upper[self.index(j, i)],
            Equal => WeightPolynomial::zero(),
        }
    }

    fn upper_ref(&self, i: usize, j: usize) -> &WeightPolynomial {
        &self.upper[self.index(i, j)]
    }

    pub fn to_dense(&self) -> Vec<Vec<WeightPolynomial>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

/// Pfaffian by expansion along the first remaining index,
/// `Pf(A) = sum_j (-1)^j a_{1,j} Pf(A without 1, j)` (1-indexed `j >= 2`),
/// memoized on the set of remaining indices. `Pf` of the empty matrix is 1.
pub fn pfaffian(a: &SkewMatrix) -> Result<WeightPolynomial> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::OddSize(n));
    }
    assert!(n <= 32, "pfaffian memo keys are 32-bit index sets");
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_rec(a, full, &mut memo))
}

fn pf_rec(a: &SkewMatrix, set: u32, memo: &mut HashMap<u32, WeightPolynomial>) -> WeightPolynomial {
    if set == 0 {
        return WeightPolynomial::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1 << first);
    let mut acc = WeightPolynomial::zero();
    let mut sign_positive = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = a.upper_ref(first, j);
        if !entry.is_zero() {
            let sub = pf_rec(a, rest & !(1 << j), memo);
            let term = entry * &sub;
            if sign_positive {
                acc += term;
            } else {
                acc -= &term;
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(set, acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> WeightPolynomial {
        WeightPolynomial::from(v)
    }

    #[test]
    fn two_by_two() {
        let mut a = SkewMatrix::zeros(2);
        a.set(0, 1, WeightPolynomial::from_i64s(&[3, 1]));
        assert_eq!(pfaffian(&a).unwrap(), WeightPolynomial::from_i64s(&[3, 1]));
        assert_eq!(a.get(1, 0), WeightPolynomial::from_i64s(&[-3, -1]));
    }

    #[test]
    fn four_by_four_expansion() {
        // a12 a34 - a13 a24 + a14 a23 with distinct primes
        let vals = [(0, 1, 2), (0, 2, 3), (0, 3, 5), (1, 2, 7), (1, 3, 11), (2, 3, 13)];
        let mut a = SkewMatrix::zeros(4);
        for &(i, j, v) in &vals {
            a.set(i, j, c(v));
        }
        assert_eq!(pfaffian(&a).unwrap(), c(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn empty_and_odd() {
        assert_eq!(pfaffian(&SkewMatrix::zeros(0)).unwrap(), WeightPolynomial::one());
        assert!(matches!(pfaffian(&SkewMatrix::zeros(3)), Err(Error::OddSize(3))));
    }
}
