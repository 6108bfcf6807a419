use std::collections::BTreeMap;
use std::ops::Mul;

use crate::algebra::WeightPolynomial;
use crate::error::{Error, Result};

/// Laurent polynomial in `X_1..X_v` with coefficients in `Z[t]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Vec<i32>, WeightPolynomial>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        Self::term(vars, vec![0; vars], WeightPolynomial::one())
    }

    pub fn term(vars: usize, exps: Vec<i32>, coeff: WeightPolynomial) -> Self {
        assert_eq!(exps.len(), vars);
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// `X_i` (1-indexed).
    pub fn var(vars: usize, i: usize) -> Self {
        let mut e = vec![0; vars];
        e[i - 1] = 1;
        Self::term(vars, e, WeightPolynomial::one())
    }

    pub fn constant(vars: usize, c: WeightPolynomial) -> Self {
        Self::term(vars, vec![0; vars], c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let slot = out.terms.entry(e.clone()).or_insert_with(WeightPolynomial::zero);
            *slot += c.clone();
            if slot.is_zero() {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn coefficient(&self, exps: &[i32]) -> WeightPolynomial {
        self.terms.get(exps).cloned().unwrap_or_else(WeightPolynomial::zero)
    }

    /// Coefficient of `X_1^0 ... X_v^0`, a polynomial in `t`.
    pub fn constant_term(&self) -> WeightPolynomial {
        self.coefficient(&vec![0; self.vars])
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let slot = out.terms.entry(e).or_insert_with(WeightPolynomial::zero);
                *slot += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }
}

/// Constant term in `X_1..X_{n-1}` of
/// `Σ_{l <= j_1 < ... < j_{n-1} <= r} Π_i (t + X_i) X_i^(-j_i) Π_{i<j} (1 + X_i + X_i X_j)(X_j - X_i)`.
///
/// The `j`-independent factor is expanded once; each tuple then multiplies
/// it by a single monomial. Orders above 4 are refused.
pub fn ct_oracle(n: usize, l: usize, r: usize) -> Result<WeightPolynomial> {
    if n > 4 {
        return Err(Error::NTooLarge(n));
    }
    super::check_window(n, l, r)?;
    let v = n - 1;
    let t = LaurentPoly::constant(v, WeightPolynomial::t());
    let one = LaurentPoly::one(v);
    let mut base = LaurentPoly::one(v);
    for i in 1..=v {
        base = &base * &t.add(&LaurentPoly::var(v, i));
    }
    for i in 1..=v {
        for j in i + 1..=v {
            let xi = LaurentPoly::var(v, i);
            let xj = LaurentPoly::var(v, j);
            let f = one.add(&xi).add(&(&xi * &xj));
            base = &base * &f;
            base = &base * &xj.add(&xi.neg());
        }
    }
    let mut acc = WeightPolynomial::zero();
    for tuple in super::subsets(r - l + 1, v) {
        let exps: Vec<i32> = tuple.iter().map(|&x| -((x - 1 + l) as i32)).collect();
        let mono = LaurentPoly::term(v, exps, WeightPolynomial::one());
        acc += (&base * &mono).constant_term();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::detsum_genpoly;

    #[test]
    fn small_orders() {
        assert_eq!(ct_oracle(3, 0, 2).unwrap(), WeightPolynomial::from_i64s(&[1, 2, 2]));
        assert_eq!(ct_oracle(2, 0, 1).unwrap(), detsum_genpoly(2, 0, 1).unwrap());
        assert_eq!(ct_oracle(4, 1, 4).unwrap().eval_one(), 28.into());
        assert!(matches!(ct_oracle(5, 1, 5), Err(Error::NTooLarge(5))));
    }

    #[test]
    fn arithmetic() {
        let x = LaurentPoly::var(2, 1);
        let y = LaurentPoly::var(2, 2);
        let p = &x.add(&y) * &x.add(&y.neg());
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&[2, 0]), WeightPolynomial::one());
        assert_eq!(p.coefficient(&[0, 2]), -WeightPolynomial::one());
        let inv = LaurentPoly::term(2, vec![-2, 0], WeightPolynomial::one());
        assert_eq!((&p * &inv).constant_term(), WeightPolynomial::one());
        assert!(x.add(&x.neg()).is_empty());
    }
}
