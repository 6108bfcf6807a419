use std::collections::HashSet;

use serde::Serialize;

use super::paths::{all_step_sequences, end_point, line_offset, start_point, LatticePath, Point};
use crate::algebra::{det, WeightPolynomial};
use crate::error::{Error, Result, Violation};
use crate::formulas::{check_theorem_range, check_window, endpoint_matrix};

/// Non-intersecting paths `S_j -> E_{e_j}`, `j = 1..n-1`, with the lowest
/// path weakly above the line `y = x + l - r - 2n + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathTuple {
    n: usize,
    l: usize,
    r: usize,
    paths: Vec<LatticePath>,
}

impl PathTuple {
    pub fn new(n: usize, l: usize, r: usize, paths: Vec<LatticePath>) -> Result<Self> {
        check_window(n, l, r)?;
        if paths.len() != n - 1 {
            return Err(Error::reject(Violation::Shape, format!("{} paths, expected {}", paths.len(), n - 1)));
        }
        let mut seen: HashSet<Point> = HashSet::new();
        let mut last_e = 0;
        for (j, p) in (1..).zip(&paths) {
            if p.start != start_point(j) {
                return Err(Error::reject(Violation::Path, format!("path {j} starts at {:?}", p.start)));
            }
            let (x, y) = p.end();
            if x != -y || x <= last_e as i64 || x > r as i64 + 1 {
                return Err(Error::reject(Violation::Path, format!("path {j} ends at {:?}", (x, y))));
            }
            last_e = x as usize;
            for v in p.vertices() {
                if !seen.insert(v) {
                    return Err(Error::reject(Violation::Path, format!("paths meet at {v:?}")));
                }
            }
        }
        if !paths[n - 2].above_line(line_offset(n, l, r)) {
            return Err(Error::reject(Violation::Path, "lowest path crosses the line"));
        }
        Ok(Self { n, l, r, paths })
    }

    pub fn params(&self) -> (usize, usize, usize) {
        (self.n, self.l, self.r)
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    /// End indices `e_1 < ... < e_{n-1}`.
    pub fn ends(&self) -> Vec<usize> {
        self.paths.iter().map(|p| p.end().0 as usize).collect()
    }

    /// Number of paths whose last step is North.
    pub fn weight(&self) -> usize {
        self.paths.iter().filter(|p| p.ends_north()).count()
    }
}

/// Depth-first over paths `1..n-1`, optionally pinned to given ends.
fn search(
    n: usize,
    l: usize,
    r: usize,
    pinned: Option<&[usize]>,
    f: &mut impl FnMut(&[LatticePath]),
) {
    let offset = line_offset(n, l, r);
    let candidates: Vec<Vec<LatticePath>> = (1..n)
        .map(|j| {
            all_step_sequences(j)
                .into_iter()
                .map(|s| LatticePath::new(start_point(j), s))
                .filter(|p| {
                    let e = p.end().0 as usize;
                    e <= r + 1 && pinned.is_none_or(|ends| p.end() == end_point(ends[j - 1]))
                })
                .filter(|p| j < n - 1 || p.above_line(offset))
                .collect()
        })
        .collect();
    fn rec(
        j: usize,
        candidates: &[Vec<LatticePath>],
        chosen: &mut Vec<LatticePath>,
        used: &mut HashSet<Point>,
        f: &mut impl FnMut(&[LatticePath]),
    ) {
        if j > candidates.len() {
            f(chosen);
            return;
        }
        let last_e = chosen.last().map_or(0, |p| p.end().0);
        for p in &candidates[j - 1] {
            if p.end().0 <= last_e {
                continue;
            }
            let verts = p.vertices();
            if verts.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(verts.iter().copied());
            chosen.push(p.clone());
            rec(j + 1, candidates, chosen, used, f);
            chosen.pop();
            for v in &verts {
                used.remove(v);
            }
        }
    }
    rec(1, &candidates, &mut Vec::new(), &mut HashSet::new(), f);
}

/// All path tuples for `(n, l, r)` in the theorem range.
pub fn enumerate_tuples(n: usize, l: usize, r: usize) -> Result<Vec<PathTuple>> {
    check_theorem_range(n, l, r)?;
    let mut out = Vec::new();
    search(n, l, r, None, &mut |ps| {
        out.push(PathTuple {
            n,
            l,
            r,
            paths: ps.to_vec(),
        })
    });
    Ok(out)
}

/// `Σ t^weight` over all path tuples.
pub fn tuples_genpoly(n: usize, l: usize, r: usize) -> Result<WeightPolynomial> {
    check_theorem_range(n, l, r)?;
    let mut coeffs = vec![0i64; n];
    search(n, l, r, None, &mut |ps| {
        coeffs[ps.iter().filter(|p| p.ends_north()).count()] += 1
    });
    Ok(WeightPolynomial::from_i64s(&coeffs))
}

/// Determinant of single-path sums against the brute count of
/// non-intersecting tuples with exactly these ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LgvReport {
    pub ends: Vec<usize>,
    #[serde(serialize_with = "crate::verify::ser_poly")]
    pub det: WeightPolynomial,
    #[serde(serialize_with = "crate::verify::ser_poly")]
    pub brute: WeightPolynomial,
    pub pass: bool,
}

pub fn lgv_check(n: usize, l: usize, r: usize, ends: &[usize]) -> Result<LgvReport> {
    check_window(n, l, r)?;
    if ends.len() != n - 1
        || ends.windows(2).any(|w| w[0] >= w[1])
        || ends.first().is_some_and(|&e| e == 0)
        || ends.last().is_some_and(|&e| e > r + 1)
    {
        return Err(Error::ParamRange(format!("ends {ends:?} are not increasing in 1..={}", r + 1)));
    }
    let d = det(&endpoint_matrix(n, l, r, ends));
    let mut coeffs = vec![0i64; n];
    search(n, l, r, Some(ends), &mut |ps| {
        coeffs[ps.iter().filter(|p| p.ends_north()).count()] += 1
    });
    let brute = WeightPolynomial::from_i64s(&coeffs);
    Ok(LgvReport {
        ends: ends.to_vec(),
        pass: d == brute,
        det: d,
        brute,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::paths::Step::*;

    #[test]
    fn order_three() {
        assert_eq!(tuples_genpoly(3, 0, 2).unwrap(), WeightPolynomial::from_i64s(&[1, 2, 2]));
        let all = enumerate_tuples(3, 0, 2).unwrap();
        assert_eq!(all.len(), 5);
        let first = all.iter().find(|t| t.ends() == vec![1, 2]).unwrap();
        assert_eq!(first.weight(), 2);
        assert_eq!(first.paths()[1].steps, vec![North, North]);
    }

    #[test]
    fn order_two() {
        assert_eq!(tuples_genpoly(2, 0, 1).unwrap(), WeightPolynomial::from_i64s(&[1, 1]));
    }

    #[test]
    fn lgv_small() {
        let rep = lgv_check(3, 0, 2, &[1, 2]).unwrap();
        assert_eq!(rep.det, WeightPolynomial::from_i64s(&[0, 0, 1]));
        assert!(rep.pass);
        let rep = lgv_check(3, 0, 2, &[2, 3]).unwrap();
        assert_eq!(rep.det, WeightPolynomial::from_i64s(&[1, 1]));
        assert!(rep.pass);
        assert!(lgv_check(3, 0, 2, &[2, 2]).is_err());
    }

    #[test]
    fn tuple_validation() {
        let p1 = LatticePath::new(start_point(1), vec![North]);
        let p2 = LatticePath::new(start_point(2), vec![North, North]);
        assert!(PathTuple::new(3, 0, 2, vec![p1.clone(), p2]).is_ok());
        // path 2 ends at E_4, past r + 1
        let bad = LatticePath::new(start_point(2), vec![East, East]);
        let err = PathTuple::new(3, 0, 2, vec![p1, bad]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Path));
    }
}
