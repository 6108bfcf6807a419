use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::WeightPolynomial;
use crate::error::{Error, Result};
use crate::objects::AstTriangle;

/// Row-by-row search state. Column state per absolute column: 0 before any
/// non-zero, otherwise the last non-zero entry (so the partial sum is 1
/// exactly when the state is 1).
struct Search<'a, F> {
    n: usize,
    rows: Vec<Vec<i8>>,
    cols: Vec<i8>,
    emit: &'a mut F,
}

impl<F: FnMut(&[Vec<i8>])> Search<'_, F> {
    fn row(&mut self, i: usize) {
        if i > self.n {
            (self.emit)(&self.rows);
            return;
        }
        self.cell(i, i, 0);
    }

    /// Fills row `i` from absolute column `c` on; `sum` is the row prefix sum.
    fn cell(&mut self, i: usize, c: usize, sum: i8) {
        let n = self.n;
        if c > 2 * n - i {
            if sum == 1 {
                self.row(i + 1);
            }
            return;
        }
        let col = self.cols[c];
        // values in increasing order give lexicographic output
        for v in [-1i8, 0, 1] {
            let ok = match v {
                -1 => sum == 1 && col == 1,
                0 => true,
                _ => sum == 0 && col != 1,
            };
            if !ok {
                continue;
            }
            self.rows[i - 1][c - i] = v;
            if v != 0 {
                self.cols[c] = v;
            }
            self.cell(i, c + 1, sum + v);
            self.cols[c] = col;
        }
        self.rows[i - 1][c - i] = 0;
    }
}

fn blank(n: usize) -> Vec<Vec<i8>> {
    (1..=n).map(|i| vec![0; 2 * (n - i) + 1]).collect()
}

/// Top-row branches in lexicographic order: the top row has a single 1, and
/// placing it further right gives a smaller row.
fn branches(n: usize) -> Vec<usize> {
    (1..2 * n).rev().collect()
}

fn search_branch(n: usize, top: usize, emit: &mut impl FnMut(&[Vec<i8>])) {
    let mut rows = blank(n);
    rows[0][top - 1] = 1;
    let mut cols = vec![0i8; 2 * n];
    cols[top] = 1;
    let mut s = Search {
        n,
        rows,
        cols,
        emit,
    };
    s.row(2);
}

/// Visits every AST of order `n` in lexicographic order (top row first).
pub fn for_each_ast(n: usize, mut f: impl FnMut(&[Vec<i8>])) {
    if n == 0 {
        return;
    }
    for top in branches(n) {
        search_branch(n, top, &mut f);
    }
}

/// All ASTs of order `n`, lexicographically ordered. Top-row branches are
/// searched in parallel and concatenated in branch order.
pub fn enumerate_asts(n: usize) -> Vec<AstTriangle> {
    if n == 0 {
        return Vec::new();
    }
    branches(n)
        .into_par_iter()
        .map(|top| {
            let mut out = Vec::new();
            search_branch(n, top, &mut |rows| out.push(AstTriangle::from_valid_rows(rows.to_vec())));
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn count_asts(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    branches(n)
        .into_par_iter()
        .map(|top| {
            let mut c = 0u64;
            search_branch(n, top, &mut |_| c += 1);
            c
        })
        .sum()
}

/// Distribution of ASTs of one order by zero-margin window and rho.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AstCensus {
    n: usize,
    /// `(l*, r*, rho) -> count`; order 1 has no window and is stored under
    /// `(0, 0, 1)` only for totals.
    cells: BTreeMap<(usize, usize, usize), u64>,
}

impl AstCensus {
    pub fn new(n: usize) -> Self {
        let maps: Vec<BTreeMap<(usize, usize, usize), u64>> = branches(n.max(1))
            .into_par_iter()
            .map(|top| {
                let mut m = BTreeMap::new();
                search_branch(n, top, &mut |rows| {
                    let t = AstTriangle::from_valid_rows(rows.to_vec());
                    let (lo, hi) = t.zero_margins().unwrap_or((0, 0));
                    *m.entry((lo, hi, t.rho())).or_insert(0) += 1;
                });
                m
            })
            .collect();
        let mut cells = BTreeMap::new();
        for m in maps {
            for (k, v) in m {
                *cells.entry(k).or_insert(0) += v;
            }
        }
        Self { n, cells }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn total(&self) -> u64 {
        self.cells.values().sum()
    }

    pub fn cells(&self) -> &BTreeMap<(usize, usize, usize), u64> {
        &self.cells
    }

    /// `Σ t^(rho-1)` over the `(n, l, r)` ASPs.
    pub fn genpoly(&self, l: usize, r: usize) -> WeightPolynomial {
        let mut coeffs = vec![0i64; self.n];
        for (&(lo, hi, rho), &c) in &self.cells {
            if l <= lo && hi <= r {
                coeffs[rho - 1] += c as i64;
            }
        }
        WeightPolynomial::from_i64s(&coeffs)
    }
}

fn check_window(n: usize, r: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::ParamRange(format!("windows need n >= 2, got n = {n}")));
    }
    if r > 2 * n - 3 {
        return Err(Error::ParamRange(format!("r = {r} exceeds 2n-3 = {}", 2 * n - 3)));
    }
    Ok(())
}

/// `Σ t^(rho-1)` over `(n, l, r)` ASPs by brute enumeration; any window
/// inside `[0, 2n-3]`, the zero polynomial when `l > r`.
pub fn asp_genpoly(n: usize, l: usize, r: usize) -> Result<WeightPolynomial> {
    check_window(n, r)?;
    if l > r {
        return Ok(WeightPolynomial::zero());
    }
    Ok(AstCensus::new(n).genpoly(l, r))
}

/// All `(n, l, r)` ASPs in lexicographic order.
pub fn enumerate_asps(n: usize, l: usize, r: usize) -> Result<Vec<AstTriangle>> {
    check_window(n, r)?;
    Ok(enumerate_asts(n).into_iter().filter(|t| t.is_asp(l, r)).collect())
}
