//! Closed-form generating functions: the determinant sum, the Pfaffian, and
//! a small-order constant-term oracle.

mod laurent;

use rayon::prelude::*;

use crate::algebra::{binom, det, pfaffian, SkewMatrix, WeightPolynomial};
use crate::error::{Error, Result};

pub use laurent::{ct_oracle, LaurentPoly};

/// Parameters of a single binomial entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EntryParams {
    pub n: usize,
    pub l: usize,
    pub r: usize,
    /// End index in `1..=r+1`.
    pub e: usize,
    /// Start index in `1..=n-1`.
    pub j: usize,
}

/// `t·C(j-1, e-j) - t·C(j-1, r-e-l+2n-1-j) + C(j-1, e-1-j) - C(j-1, r-e-l+2n-j)`.
pub fn entry(p: EntryParams) -> WeightPolynomial {
    let (n, l, r, e, j) = (p.n as i64, p.l as i64, p.r as i64, p.e as i64, p.j as i64);
    let a = (j - 1) as u64;
    let refl = r - e - l + 2 * n - 1 - j;
    let north = binom(a, e - j) - binom(a, refl);
    let east = binom(a, e - 1 - j) - binom(a, refl + 1);
    WeightPolynomial::from_coeffs(vec![east, north])
}

fn entry_at(n: usize, l: usize, r: usize, e: usize, j: usize) -> WeightPolynomial {
    entry(EntryParams { n, l, r, e, j })
}

/// `0 <= l <= n-2 < r <= 2n-3`.
pub fn check_window(n: usize, l: usize, r: usize) -> Result<()> {
    if n < 2 || l + 2 > n || r + 2 <= n || r + 3 > 2 * n {
        return Err(Error::ParamRange(format!(
            "need 0 <= l <= n-2 < r <= 2n-3, got n={n} l={l} r={r}"
        )));
    }
    Ok(())
}

/// The window above plus `l + r < 2n-2` and `r - l > n-3`.
pub fn check_theorem_range(n: usize, l: usize, r: usize) -> Result<()> {
    check_window(n, l, r)?;
    if l + r + 2 >= 2 * n || r + 3 <= n + l {
        return Err(Error::ParamRange(format!(
            "need l+r < 2n-2 and r-l > n-3, got n={n} l={l} r={r}"
        )));
    }
    Ok(())
}

/// Whether `(n, l, r)` lies in the main theorem's range.
pub fn in_theorem_range(n: usize, l: usize, r: usize) -> bool {
    check_theorem_range(n, l, r).is_ok()
}

/// All theorem-range `(l, r)` for order `n`.
pub fn theorem_grid(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for r in n - 1..=2 * n - 3 {
        for l in 0..=n - 2 {
            if in_theorem_range(n, l, r) {
                out.push((l, r));
            }
        }
    }
    out
}

/// Strictly increasing `k`-subsets of `1..=m` in colexicographic order.
pub(crate) fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
        if cur.len() == k {
            let mut s = cur.clone();
            s.reverse();
            out.push(s);
            return;
        }
        let need = k - cur.len();
        let top = cur.last().map_or(m, |&x| x - 1);
        for x in need..=top {
            cur.push(x);
            rec(m, k, out, cur);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, &mut out, &mut Vec::new());
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// The `(n-1) x (n-1)` matrix `entry(e_i, j)` for one end tuple.
pub fn endpoint_matrix(n: usize, l: usize, r: usize, ends: &[usize]) -> Vec<Vec<WeightPolynomial>> {
    ends.iter()
        .map(|&e| (1..n).map(|j| entry_at(n, l, r, e, j)).collect())
        .collect()
}

/// `Σ_{1 <= e_1 < ... < e_{n-1} <= r+1} det(entry(e_i, j))`, which is
/// `Σ t^(rho-1)` over the `(n, l, r)` ASPs.
pub fn detsum_genpoly(n: usize, l: usize, r: usize) -> Result<WeightPolynomial> {
    check_window(n, l, r)?;
    let terms: Vec<WeightPolynomial> = subsets(r + 1, n - 1)
        .par_iter()
        .map(|ends| det(&endpoint_matrix(n, l, r, ends)))
        .collect();
    Ok(terms.into_iter().sum())
}

fn check_index(n: usize, j: usize) -> Result<()> {
    if j == 0 || j >= n {
        return Err(Error::ParamRange(format!("start index {j} outside 1..={}", n - 1)));
    }
    Ok(())
}

/// `Σ_{e1 < e2} (entry(e1, i)·entry(e2, j) - entry(e2, i)·entry(e1, j))` for `i < j`.
pub fn pair_gf(n: usize, l: usize, r: usize, i: usize, j: usize) -> Result<WeightPolynomial> {
    check_window(n, l, r)?;
    check_index(n, i)?;
    check_index(n, j)?;
    if i >= j {
        return Err(Error::ParamRange(format!("pair_gf needs i < j, got {i}, {j}")));
    }
    let ei: Vec<_> = (1..=r + 1).map(|e| entry_at(n, l, r, e, i)).collect();
    let ej: Vec<_> = (1..=r + 1).map(|e| entry_at(n, l, r, e, j)).collect();
    let mut acc = WeightPolynomial::zero();
    for a in 0..=r {
        for b in a + 1..=r {
            acc += &ei[a] * &ej[b];
            acc -= &(&ei[b] * &ej[a]);
        }
    }
    Ok(acc)
}

/// `Σ_e entry(e, j)`.
pub fn single_gf(n: usize, l: usize, r: usize, j: usize) -> Result<WeightPolynomial> {
    check_window(n, l, r)?;
    check_index(n, j)?;
    Ok((1..=r + 1).map(|e| entry_at(n, l, r, e, j)).sum())
}

/// The skew matrix whose Pfaffian gives the generating function: pair sums
/// for `i < j < n`, and for even `n` an extra last column of single sums.
pub fn pfaffian_matrix(n: usize, l: usize, r: usize) -> Result<SkewMatrix> {
    check_window(n, l, r)?;
    let size = if n % 2 == 1 { n - 1 } else { n };
    let mut b = SkewMatrix::zeros(size);
    for i in 1..n {
        for j in i + 1..n {
            b.set(i - 1, j - 1, pair_gf(n, l, r, i, j)?);
        }
    }
    if n.is_multiple_of(2) {
        for j in 1..n {
            b.set(j - 1, n - 1, single_gf(n, l, r, j)?);
        }
    }
    Ok(b)
}

/// `t · Pf(B)`, which is `Σ t^tau` over `(0, n, r+2-n, r-l)` Magog pentagons.
pub fn pfaffian_genpoly(n: usize, l: usize, r: usize) -> Result<WeightPolynomial> {
    check_theorem_range(n, l, r)?;
    let pf = pfaffian(&pfaffian_matrix(n, l, r)?)?;
    Ok(pf.shift_up(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> WeightPolynomial {
        WeightPolynomial::from_i64s(v)
    }

    #[test]
    fn entries_by_hand() {
        assert_eq!(entry_at(3, 0, 2, 1, 1), p(&[0, 1]));
        assert_eq!(entry_at(3, 0, 2, 3, 1), p(&[]));
        assert_eq!(entry_at(3, 0, 2, 3, 2), p(&[1, 1]));
        assert_eq!(entry_at(3, 0, 2, 2, 1), p(&[1]));
    }

    #[test]
    fn determinant_sums() {
        assert_eq!(detsum_genpoly(3, 0, 2).unwrap(), p(&[1, 2, 2]));
        assert_eq!(detsum_genpoly(3, 1, 2).unwrap(), p(&[1, 1, 1]));
        assert_eq!(detsum_genpoly(4, 0, 3).unwrap().eval_one(), 14.into());
        assert!(matches!(detsum_genpoly(3, 0, 4), Err(Error::ParamRange(_))));
        assert!(matches!(detsum_genpoly(3, 2, 3), Err(Error::ParamRange(_))));
        assert!(matches!(detsum_genpoly(3, 0, 1), Err(Error::ParamRange(_))));
    }

    #[test]
    fn pair_and_single() {
        assert_eq!(pair_gf(3, 0, 2, 1, 2).unwrap(), p(&[1, 2, 2]));
        assert_eq!(single_gf(3, 0, 2, 1).unwrap(), p(&[1, 1]));
        assert!(pair_gf(3, 0, 2, 2, 1).is_err());
        assert!(single_gf(3, 0, 2, 3).is_err());
    }

    #[test]
    fn pfaffians() {
        assert_eq!(pfaffian_genpoly(3, 0, 2).unwrap(), p(&[0, 1, 2, 2]));
        assert_eq!(
            pfaffian_genpoly(4, 0, 3).unwrap(),
            detsum_genpoly(4, 0, 3).unwrap().shift_up(1)
        );
        assert_eq!(pfaffian_genpoly(5, 1, 6).unwrap().eval_one(), 345.into());
        // l + r = 2n - 2 is outside the theorem
        assert!(pfaffian_genpoly(4, 2, 4).is_err());
    }

    #[test]
    fn colex_subsets() {
        assert_eq!(
            subsets(4, 2),
            vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn theorem_grid_small() {
        assert_eq!(theorem_grid(3), vec![(0, 2), (1, 2), (0, 3)]);
        assert!(theorem_grid(4).contains(&(1, 4)));
        assert!(!theorem_grid(4).contains(&(2, 4)));
    }
}
