//! Univariate polynomials in the weight variable `t` with big-integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A polynomial `c_0 + c_1 t + ... + c_d t^d` over the integers.
///
/// Coefficients are stored in ascending order and the vector never ends in
/// a zero, so the zero polynomial is the empty vector and structural
/// equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightPolynomial {
    coeffs: Vec<BigInt>,
}

impl WeightPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Value at `t = 1`, i.e. the total count carried by a generating polynomial.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divide by `t^k`; `None` unless the low `k` coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.coeffs.len() {
            return None;
        }
        Some(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// `t^d * p(1/t)`: reverses the coefficient vector padded to length `d + 1`.
    ///
    /// Panics if `d` is below the degree.
    pub fn reversed(&self, d: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(self.coeffs.len() <= d + 1, "reversal degree below polynomial degree");
        let mut coeffs = vec![BigInt::zero(); d + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[d - i] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exact division. Returns `None` if `divisor` does not divide `self`
    /// over the integers (or is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let lead = divisor.leading_coeff()?;
        let dd = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Ascending coefficients as decimal strings, the JSON rendering.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Debug for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeightPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}")?;
                    }
                    if d == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for WeightPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for WeightPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn add(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        WeightPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn sub(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        WeightPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn mul(self, rhs: &WeightPolynomial) -> WeightPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return WeightPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        WeightPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &WeightPolynomial {
    type Output = WeightPolynomial;
    fn neg(self) -> WeightPolynomial {
        WeightPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for WeightPolynomial {
            type Output = WeightPolynomial;
            fn $method(self, rhs: WeightPolynomial) -> WeightPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&WeightPolynomial> for WeightPolynomial {
            type Output = WeightPolynomial;
            fn $method(self, rhs: &WeightPolynomial) -> WeightPolynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for WeightPolynomial {
    type Output = WeightPolynomial;
    fn neg(self) -> WeightPolynomial {
        -&self
    }
}

impl AddAssign<&WeightPolynomial> for WeightPolynomial {
    fn add_assign(&mut self, rhs: &WeightPolynomial) {
        *self = &*self + rhs;
    }
}

impl AddAssign for WeightPolynomial {
    fn add_assign(&mut self, rhs: WeightPolynomial) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&WeightPolynomial> for WeightPolynomial {
    fn sub_assign(&mut self, rhs: &WeightPolynomial) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for WeightPolynomial {
    fn sum<I: Iterator<Item = WeightPolynomial>>(iter: I) -> Self {
        iter.fold(WeightPolynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> WeightPolynomial {
        WeightPolynomial::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a - &a, WeightPolynomial::zero());
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(p(&[1, 2, 2]).eval_one(), BigInt::from(5));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]);
        let b = p(&[2, -3, 1]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[3]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn reversal_and_shifts() {
        assert_eq!(p(&[1, 2, 3]).reversed(3), p(&[0, 3, 2, 1]));
        assert_eq!(p(&[0, 1, 2]).shift_down(1), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 2]).shift_down(1), None);
        assert_eq!(p(&[1, 2]).shift_up(2), p(&[0, 0, 1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 2, 2]).to_string(), "1 + 2t + 2t^2");
        assert_eq!(p(&[0, -1, 0, 1]).to_string(), "-t + t^3");
        assert_eq!(WeightPolynomial::zero().to_string(), "0");
    }
}
