use super::WeightPolynomial;

/// Determinant of a square matrix over `Z[t]`, given as rows.
///
/// Sizes up to 3 are expanded directly; larger matrices go through
/// fraction-free (Bareiss) elimination, where every division is exact.
/// The empty matrix has determinant 1.
pub fn det(m: &[Vec<WeightPolynomial>]) -> WeightPolynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "det of a non-square matrix");
    match n {
        0 => WeightPolynomial::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        3 => {
            let minor = |a: usize, b: usize| &m[1][a] * &m[2][b] - &m[1][b] * &m[2][a];
            &m[0][0] * &minor(1, 2) - &m[0][1] * &minor(0, 2) + &m[0][2] * &minor(0, 1)
        }
        _ => bareiss(m.to_vec()),
    }
}

fn bareiss(mut a: Vec<Vec<WeightPolynomial>>) -> WeightPolynomial {
    let n = a.len();
    let mut negate = false;
    let mut prev = WeightPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return WeightPolynomial::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step must divide exactly");
            }
            a[i][k] = WeightPolynomial::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> WeightPolynomial {
        WeightPolynomial::from(v)
    }

    #[test]
    fn identity_and_empty() {
        let id: Vec<Vec<_>> = (0..5)
            .map(|i| (0..5).map(|j| c((i == j) as i64)).collect())
            .collect();
        assert_eq!(det(&id), WeightPolynomial::one());
        assert_eq!(det(&id[..3].iter().map(|r| r[..3].to_vec()).collect::<Vec<_>>()), WeightPolynomial::one());
        assert_eq!(det(&[]), WeightPolynomial::one());
    }

    #[test]
    fn two_by_two_in_t() {
        let t = WeightPolynomial::t();
        let m = vec![vec![t.clone(), c(0)], vec![c(1), t.clone()]];
        assert_eq!(det(&m), &t * &t);
    }

    #[test]
    fn needs_pivoting() {
        // permutation matrix of a 4-cycle, sign -1
        let mut m = vec![vec![c(0); 4]; 4];
        for i in 0..4 {
            m[i][(i + 1) % 4] = c(1);
        }
        assert_eq!(det(&m), c(-1));
        let mut singular = m.clone();
        singular[3] = singular[2].clone();
        assert_eq!(det(&singular), c(0));
    }
}
