//! Gog trapezoids and pentagons (the first `k` columns of a monotone triangle).

use std::collections::BTreeMap;
use std::fmt;

use super::text;
use crate::error::{Error, Result, Violation};

/// Shape of an `(m, n, k, l)` Gog pentagon; `l = 0` is the plain trapezoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GogShape {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl GogShape {
    pub fn new(m: usize, n: usize, k: usize, l: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::ParamRange(format!(
                "Gog shape needs 1 <= k <= n, got n={n} k={k}"
            )));
        }
        Ok(Self { m, n, k, l })
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.k.min(self.n + 1 - i)
    }

    /// Cells of the fixed top-left pattern, where `a(i,j) = j`.
    pub fn is_forced(&self, i: usize, j: usize) -> bool {
        i + j <= self.l + 1
    }

    /// Upper bound on the last column, where it applies.
    pub fn bound(&self, i: usize) -> Option<usize> {
        (i <= self.n + 1 - self.k).then(|| self.m + self.k + i - 1)
    }
}

/// A validated Gog pentagon, stored with its fixed pattern filled in;
/// `rows[i-1][j-1] = a(i,j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GogPentagon {
    shape: GogShape,
    rows: Vec<Vec<u32>>,
}

impl GogPentagon {
    /// Validates a completed array (fixed pattern included).
    pub fn new(shape: GogShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.n {
            return Err(Error::reject(
                Violation::Shape,
                format!("{} rows, expected {}", rows.len(), shape.n),
            ));
        }
        for (i, row) in (1..).zip(&rows) {
            if row.len() != shape.row_len(i) {
                return Err(Error::reject(
                    Violation::Shape,
                    format!("row {i} has {} cells, expected {}", row.len(), shape.row_len(i)),
                ));
            }
        }
        check(&shape, &rows)?;
        Ok(Self { shape, rows })
    }

    /// Builds a pentagon from its free cells `(i, j) -> value`.
    pub fn from_free(shape: GogShape, free: &BTreeMap<(usize, usize), u32>) -> Result<Self> {
        let mut rows = Vec::with_capacity(shape.n);
        for i in 1..=shape.n {
            let mut row = Vec::with_capacity(shape.row_len(i));
            for j in 1..=shape.row_len(i) {
                if shape.is_forced(i, j) {
                    row.push(j as u32);
                } else {
                    let v = free.get(&(i, j)).ok_or_else(|| {
                        Error::reject(Violation::Membership, format!("free cell ({i},{j}) missing"))
                    })?;
                    row.push(*v);
                }
            }
            rows.push(row);
        }
        if let Some(&(i, j)) = free
            .keys()
            .find(|&&(i, j)| i == 0 || i > shape.n || j == 0 || j > shape.row_len(i) || shape.is_forced(i, j))
        {
            return Err(Error::reject(Violation::Membership, format!("({i},{j}) is not a free cell")));
        }
        Self::new(shape, rows)
    }

    pub(crate) fn from_valid_rows(shape: GogShape, rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(check(&shape, &rows).is_ok());
        Self { shape, rows }
    }

    pub fn shape(&self) -> GogShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    /// Entries outside the fixed pattern.
    pub fn free_entries(&self) -> BTreeMap<(usize, usize), u32> {
        let mut out = BTreeMap::new();
        for (i, row) in (1..).zip(&self.rows) {
            for (j, &v) in (1..).zip(row) {
                if !self.shape.is_forced(i, j) {
                    out.insert((i, j), v);
                }
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let s = self.shape;
        text::render(&format!("GOG {} {} {} {}", s.m, s.n, s.k, s.l), &self.rows)
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src.lines();
        let h = text::header(&mut lines, "GOG", 4)?;
        let shape = GogShape::new(h[0], h[1], h[2], h[3])?;
        let rows = text::rows(lines, shape.n)?;
        Self::new(shape, rows)
    }
}

fn check(s: &GogShape, rows: &[Vec<u32>]) -> Result<()> {
    for i in 1..=s.n {
        for j in 1..=s.row_len(i) {
            let v = rows[i - 1][j - 1];
            let at = || format!("a({i},{j})");
            if s.is_forced(i, j) && v as usize != j {
                return Err(Error::reject(Violation::Forced, format!("{} must be {j}", at())));
            }
            if v == 0 {
                return Err(Error::reject(Violation::Positivity, at()));
            }
            if j > 1 && rows[i - 1][j - 2] >= v {
                return Err(Error::reject(Violation::Row, at()));
            }
            if i > 1 && rows[i - 2][j - 1] > v {
                return Err(Error::reject(Violation::Column, at()));
            }
            if i > 1 && j < rows[i - 2].len() && v > rows[i - 2][j] {
                return Err(Error::reject(
                    Violation::Diagonal,
                    format!("{} > a({},{})", at(), i - 1, j + 1),
                ));
            }
            if j == s.k {
                if let Some(b) = s.bound(i) {
                    if v as usize > b {
                        return Err(Error::reject(Violation::Bound, format!("{} > {b}", at())));
                    }
                }
            }
        }
    }
    Ok(())
}

impl fmt::Debug for GogPentagon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shape;
        write!(f, "GogPentagon({},{},{},{}: ", s.m, s.n, s.k, s.l)?;
        let rows: Vec<String> = self.rows.iter().map(|r| text::join(r)).collect();
        write!(f, "{})", rows.join(" / "))
    }
}
