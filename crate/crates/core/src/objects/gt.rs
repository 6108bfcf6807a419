//! Gelfand-Tsetlin patterns with first-diagonal bound `a(k,1) <= k`.

use std::fmt;

use super::text;
use crate::error::{Error, Result, Violation};

/// A Gelfand-Tsetlin pattern of order `n`.
///
/// Row `k` has `k` entries `a(k,j)`, with `j` counted from the right. Rows
/// are stored left to right, so `a(k,j) = rows[k-1][k-j]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GtPattern {
    rows: Vec<Vec<u32>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        for (k, row) in (1..).zip(&rows) {
            if row.len() != k {
                return Err(Error::reject(
                    Violation::Shape,
                    format!("row {k} has {} entries", row.len()),
                ));
            }
        }
        let g = Self { rows };
        let n = g.order();
        for k in 1..=n {
            for j in 1..=k {
                let v = g.get(k, j);
                if v == 0 {
                    return Err(Error::reject(Violation::Positivity, format!("a({k},{j})")));
                }
                if k < n && v > g.get(k + 1, j) {
                    return Err(Error::reject(
                        Violation::Diagonal,
                        format!("a({k},{j}) > a({},{j})", k + 1),
                    ));
                }
                if k < n && g.get(k + 1, j + 1) > v {
                    return Err(Error::reject(
                        Violation::Diagonal,
                        format!("a({},{}) > a({k},{j})", k + 1, j + 1),
                    ));
                }
            }
            if g.get(k, 1) as usize > k {
                return Err(Error::reject(Violation::Bound, format!("a({k},1) > {k}")));
            }
        }
        Ok(g)
    }

    /// Builds a pattern from `a(k,j)` indexed as `by_index[k-1][j-1]`.
    pub fn from_indexed(by_index: Vec<Vec<u32>>) -> Result<Self> {
        Self::new(
            by_index
                .into_iter()
                .map(|mut r| {
                    r.reverse();
                    r
                })
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// Rows left to right.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `a(k,j)`, 1-indexed with `j` from the right.
    pub fn get(&self, k: usize, j: usize) -> u32 {
        self.rows[k - 1][k - j]
    }

    pub fn to_text(&self) -> String {
        text::render(&format!("GT {}", self.order()), &self.rows)
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src.lines();
        let n = text::header(&mut lines, "GT", 1)?[0];
        Self::new(text::rows(lines, n)?)
    }
}

impl fmt::Debug for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| text::join(r)).collect();
        write!(f, "GtPattern({})", rows.join(" / "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accessors_and_validation() {
        let g = GtPattern::new(vec![vec![1], vec![1, 2], vec![1, 2, 2]]).unwrap();
        assert_eq!(g.get(3, 1), 2);
        assert_eq!(g.get(3, 3), 1);
        let err = GtPattern::new(vec![vec![2]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Bound));
        // a(2,2)=2 exceeds a(1,1)=1
        let err = GtPattern::new(vec![vec![1], vec![2, 2]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Diagonal));
        let err = GtPattern::new(vec![vec![1], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Shape));
        let via_index = GtPattern::from_indexed(vec![vec![1], vec![2, 1], vec![2, 2, 1]]).unwrap();
        assert_eq!(via_index, g);
    }

    #[test]
    fn text_round_trip() {
        let g = GtPattern::new(vec![vec![1], vec![1, 1]]).unwrap();
        assert_eq!(g.to_text(), "GT 2\n1\n1 1\n");
        assert_eq!(GtPattern::from_text(&g.to_text()).unwrap(), g);
    }
}
