use super::paths::{LatticePath, Step};
use super::tuples::PathTuple;
use crate::error::{Error, Result, Violation};
use crate::formulas::check_theorem_range;
use crate::objects::{GtPattern, MagogPentagon, MagogShape};

/// A path tuple with path `j` translated by `(-j, +j)`, so every path starts
/// on the antidiagonal through the origin's column and the paths may touch.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KissingTuple {
    n: usize,
    l: usize,
    r: usize,
    paths: Vec<LatticePath>,
}

impl KissingTuple {
    pub fn shift(t: &PathTuple) -> Self {
        let (n, l, r) = t.params();
        let paths = (1..)
            .zip(t.paths())
            .map(|(j, p): (i64, _)| p.translate(-j, j))
            .collect();
        Self { n, l, r, paths }
    }

    /// Undoes [`KissingTuple::shift`], revalidating the result.
    pub fn unshift(&self) -> Result<PathTuple> {
        let paths = (1..)
            .zip(&self.paths)
            .map(|(j, p): (i64, _)| p.translate(j, -j))
            .collect();
        PathTuple::new(self.n, self.l, self.r, paths)
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    /// Whether path `j` stays weakly right of path `j-1` on every
    /// antidiagonal they share.
    pub fn is_kissing(&self) -> bool {
        self.paths.windows(2).all(|w| {
            let lower = w[0].vertices();
            let upper = w[1].vertices();
            // upper starts one antidiagonal earlier
            lower.iter().zip(&upper[1..]).all(|(a, b)| b.0 >= a.0)
        })
    }
}

/// Parameters `(n, l, r)` of the Magog shape `(0, n, r+2-n, r-l)`.
pub fn magog_shape_for(n: usize, l: usize, r: usize) -> Result<MagogShape> {
    check_theorem_range(n, l, r)?;
    MagogShape::new(0, n, r + 2 - n, r - l)
}

/// Inverse of [`magog_shape_for`].
pub fn params_of_shape(s: MagogShape) -> Result<(usize, usize, usize)> {
    if s.m != 0 || s.k + s.n < 2 || s.lambda > s.k + s.n - 2 {
        return Err(Error::ParamRange(format!(
            "Magog shape ({},{},{},{}) does not come from a path tuple",
            s.m, s.n, s.k, s.lambda
        )));
    }
    let r = s.k + s.n - 2;
    let l = r - s.lambda;
    check_theorem_range(s.n, l, r)?;
    Ok((s.n, l, r))
}

/// `c[i][k]` = number of entries `<= i` in row `k`, for `1 <= i, k <= n`.
fn counts_from_paths(t: &PathTuple) -> Vec<Vec<usize>> {
    let n = t.params().0;
    let mut c: Vec<Vec<usize>> = (0..=n).map(|i| (0..=n).map(|k| k.min(i)).collect()).collect();
    for i in 1..n {
        let path = &t.paths()[n - i - 1];
        let mut cur = i;
        for (s, step) in (1..).zip(&path.steps) {
            if *step == Step::North {
                cur += 1;
            }
            c[i][i + s] = cur;
        }
    }
    c
}

/// The Gelfand-Tsetlin pattern of a path tuple.
pub fn to_gt(t: &PathTuple) -> GtPattern {
    let n = t.params().0;
    let c = counts_from_paths(t);
    let rows = (1..=n)
        .map(|k| {
            (0..k)
                .map(|idx| (1..=n).find(|&i| idx < c[i][k]).unwrap() as u32)
                .collect()
        })
        .collect();
    GtPattern::new(rows).expect("path tuples give Gelfand-Tsetlin patterns")
}

/// Checks the ones that the `(n, l, r)` path picture forces.
pub fn check_forced_ones(g: &GtPattern, l: usize, r: usize) -> Result<()> {
    let n = g.order();
    for k in 1..=n {
        for j in 1..=k {
            let by_column = j + n >= r + 3;
            let by_diagonal = n + 2 * j >= r + 2 - l + k;
            if (by_column || by_diagonal) && g.get(k, j) != 1 {
                return Err(Error::reject(Violation::Forced, format!("a({k},{j}) must be 1")));
            }
        }
    }
    Ok(())
}

/// Path tuple of a Gelfand-Tsetlin pattern whose forced ones hold.
pub fn from_gt(g: &GtPattern, l: usize, r: usize) -> Result<PathTuple> {
    let n = g.order();
    check_theorem_range(n, l, r)?;
    check_forced_ones(g, l, r)?;
    let count = |i: usize, k: usize| g.rows()[k - 1].iter().filter(|&&v| v as usize <= i).count();
    let paths = (1..n)
        .map(|j| {
            let i = n - j;
            let steps = (1..=j)
                .map(|s| {
                    if count(i, i + s) > count(i, i + s - 1) {
                        Step::North
                    } else {
                        Step::East
                    }
                })
                .collect();
            LatticePath::new(super::paths::start_point(j), steps)
        })
        .collect();
    PathTuple::new(n, l, r, paths)
}

/// Reads `a(p, q)` for `q <= r+2-n` as the Magog entry at `(p, q)`.
pub fn gt_to_magog(g: &GtPattern, l: usize, r: usize) -> Result<MagogPentagon> {
    let n = g.order();
    let shape = magog_shape_for(n, l, r)?;
    check_forced_ones(g, l, r)?;
    let full = (1..=shape.k)
        .map(|q| (q..=n).map(|p| g.get(p, q)).collect())
        .collect();
    MagogPentagon::from_trapezoid(shape, &full)
}

/// Inverse of [`gt_to_magog`]; the remaining entries are 1.
pub fn magog_to_gt(p: &MagogPentagon) -> Result<GtPattern> {
    let s = p.shape();
    params_of_shape(s)?;
    let full = p.complete();
    let by_index = (1..=s.n)
        .map(|k| {
            (1..=k)
                .map(|j| if j <= s.k { full[j - 1][k - j] } else { 1 })
                .collect()
        })
        .collect();
    GtPattern::from_indexed(by_index)
}
