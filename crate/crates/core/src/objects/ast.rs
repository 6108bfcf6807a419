//! Alternating sign triangles and their column statistics.

use std::fmt;

use super::text::join;
use crate::error::{Error, Result, Violation};

/// An alternating sign triangle of order `n`.
///
/// Row `i` (1-indexed from the top) holds `2(n-i)+1` entries occupying the
/// absolute columns `i..=2n-i` of a width-`(2n-1)` grid. The central column
/// is `n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AstTriangle {
    n: usize,
    rows: Vec<Vec<i8>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnClass {
    AllZero,
    /// Has non-zero entries but sums to zero.
    ZeroSum,
    /// Sums to one, bottom entry 0.
    One10,
    /// Sums to one, bottom entry 1.
    One11,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Central,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnInfo {
    /// Absolute column, 1-indexed.
    pub column: usize,
    pub class: ColumnClass,
    pub side: Side,
    /// `0..=2n-3` for non-central columns, skipping the central one.
    pub label: Option<usize>,
}

impl ColumnInfo {
    pub fn is_one_column(&self) -> bool {
        matches!(self.class, ColumnClass::One10 | ColumnClass::One11)
    }
}

/// Per-column classification of a triangle, indexed by absolute column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnProfile {
    pub columns: Vec<ColumnInfo>,
}

impl ColumnProfile {
    pub fn by_label(&self, label: usize) -> Option<&ColumnInfo> {
        self.columns.iter().find(|c| c.label == Some(label))
    }
}

impl AstTriangle {
    /// Validates a triangular array given as rows of entries.
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::reject(Violation::Shape, "no rows"));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = 2 * (n - i) - 1;
            if row.len() != want {
                return Err(Error::reject(
                    Violation::Shape,
                    format!("row {} has {} entries, expected {want}", i + 1, row.len()),
                ));
            }
            if let Some(j) = row.iter().position(|v| !(-1..=1).contains(v)) {
                return Err(Error::reject(Violation::Entry, format!("row {}, entry {}", i + 1, j + 1)));
            }
        }
        let t = Self { n, rows };
        // alternation along rows
        for i in 1..=n {
            let mut last = 0i8;
            for c in i..=2 * n - i {
                let v = t.get(i, c);
                if v != 0 {
                    if v == last {
                        return Err(Error::reject(Violation::Alternation, format!("row {i}, column {c}")));
                    }
                    last = v;
                }
            }
        }
        // alternation along columns, topmost non-zero is 1
        for c in 1..2 * n {
            let mut last = 0i8;
            for i in 1..=t.column_height(c) {
                let v = t.get(i, c);
                if v != 0 {
                    if last == 0 && v != 1 {
                        return Err(Error::reject(
                            Violation::TopmostNonzero,
                            format!("column {c}, row {i}"),
                        ));
                    }
                    if v == last {
                        return Err(Error::reject(Violation::Alternation, format!("column {c}, row {i}")));
                    }
                    last = v;
                }
            }
        }
        for (i, row) in t.rows.iter().enumerate() {
            let s: i32 = row.iter().map(|&v| v as i32).sum();
            if s != 1 {
                return Err(Error::reject(Violation::RowSum, format!("row {} sums to {s}", i + 1)));
            }
        }
        Ok(t)
    }

    /// Wraps rows already known to be valid (enumeration output).
    pub(crate) fn from_valid_rows(rows: Vec<Vec<i8>>) -> Self {
        debug_assert!(Self::new(rows.clone()).is_ok());
        Self { n: rows.len(), rows }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Number of cells in absolute column `c`.
    pub fn column_height(&self, c: usize) -> usize {
        c.min(2 * self.n - c)
    }

    /// Entry at row `i`, absolute column `c` (both 1-indexed); 0 outside the triangle.
    pub fn get(&self, i: usize, c: usize) -> i8 {
        if i == 0 || i > self.n || c < i || c > 2 * self.n - i {
            return 0;
        }
        self.rows[i - 1][c - i]
    }

    pub fn column_label(&self, c: usize) -> Option<usize> {
        use std::cmp::Ordering::*;
        match c.cmp(&self.n) {
            Less => Some(c - 1),
            Equal => None,
            Greater => Some(c - 2),
        }
    }

    pub fn column_profile(&self) -> ColumnProfile {
        let n = self.n;
        let columns = (1..2 * n)
            .map(|c| {
                let h = self.column_height(c);
                let entries: Vec<i8> = (1..=h).map(|i| self.get(i, c)).collect();
                let sum: i32 = entries.iter().map(|&v| v as i32).sum();
                let class = if entries.iter().all(|&v| v == 0) {
                    ColumnClass::AllZero
                } else if sum == 0 {
                    ColumnClass::ZeroSum
                } else if entries[h - 1] == 1 {
                    ColumnClass::One11
                } else {
                    ColumnClass::One10
                };
                let side = match c.cmp(&n) {
                    std::cmp::Ordering::Less => Side::Left,
                    std::cmp::Ordering::Equal => Side::Central,
                    std::cmp::Ordering::Greater => Side::Right,
                };
                ColumnInfo {
                    column: c,
                    class,
                    side,
                    label: self.column_label(c),
                }
            })
            .collect();
        ColumnProfile { columns }
    }

    /// `#(11-columns left of centre) + #(10-columns right of centre) + 1`.
    pub fn rho(&self) -> usize {
        1 + self
            .column_profile()
            .columns
            .iter()
            .filter(|c| {
                matches!(
                    (c.side, c.class),
                    (Side::Left, ColumnClass::One11) | (Side::Right, ColumnClass::One10)
                )
            })
            .count()
    }

    /// Smallest and largest label of a non-central column that is not all
    /// zero. `None` for order 1, which has no non-central columns.
    pub fn zero_margins(&self) -> Option<(usize, usize)> {
        let labels: Vec<usize> = self
            .column_profile()
            .columns
            .iter()
            .filter(|c| c.class != ColumnClass::AllZero)
            .filter_map(|c| c.label)
            .collect();
        Some((*labels.iter().min()?, *labels.iter().max()?))
    }

    /// Whether this triangle is an `(n, l, r)` alternating sign pentagon.
    pub fn is_asp(&self, l: usize, r: usize) -> bool {
        match self.zero_margins() {
            Some((lo, hi)) => l <= lo && hi <= r,
            None => false,
        }
    }

    /// Mirror image along the central column.
    pub fn reflect(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().rev().copied().collect())
            .collect();
        Self { n: self.n, rows }
    }

    /// Canonical text form: header `AST n`, then one row per line.
    pub fn to_text(&self) -> String {
        super::text::render(&format!("AST {}", self.n), &self.rows)
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = super::text::header(&mut lines, "AST", 1)?;
        let n = header[0];
        let rows = super::text::rows::<i8>(lines, n)?;
        Self::new(rows)
    }
}

impl fmt::Debug for AstTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AstTriangle(")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, " / ")?;
            }
            write!(f, "{}", join(row))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ast(rows: &[&[i8]]) -> AstTriangle {
        AstTriangle::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// The order-6 triangle with margins (3, 8). Its 11-columns left of
    /// centre sit at labels 3 and 4 and there is no 10-column on the right,
    /// so rho is 3 (the printed caption says 2).
    pub(crate) fn asp_6_3_8() -> AstTriangle {
        ast(&[
            &[0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, -1, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0, 0],
            &[1, -1, 0, 0, 1],
            &[1, -1, 1],
            &[1],
        ])
    }

    #[test]
    fn validates_labelled_order_four_example() {
        let t = ast(&[&[0, 0, 0, 1, 0, 0, 0], &[1, 0, -1, 0, 1], &[1, 0, 0], &[1]]);
        assert_eq!(t.order(), 4);
        let labels: Vec<_> = (1..=7).map(|c| t.column_label(c)).collect();
        assert_eq!(labels, vec![Some(0), Some(1), Some(2), None, Some(3), Some(4), Some(5)]);
    }

    #[test]
    fn order_one() {
        let t = ast(&[&[1]]);
        assert_eq!(t.rho(), 1);
        assert_eq!(t.zero_margins(), None);
    }

    #[test]
    fn rejects_negative_topmost() {
        let err = AstTriangle::new(vec![vec![1, 0, 0], vec![-1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::TopmostNonzero));
    }

    #[test]
    fn rejects_bad_shapes_and_sums() {
        let err = AstTriangle::new(vec![vec![1, 0], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Shape));
        let err = AstTriangle::new(vec![vec![1, 0, 1], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Alternation));
        let err = AstTriangle::new(vec![vec![0, 0, 0], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::RowSum));
        let err = AstTriangle::new(vec![vec![0, 2, 0], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Entry));
        // column 2 reads 1, 1 downwards
        let err = AstTriangle::new(vec![vec![0, 1, 0], vec![1]]).unwrap_err();
        assert_eq!(err.violation(), Some(Violation::Alternation));
    }

    #[test]
    fn rho_of_listed_order_three_triangles() {
        assert_eq!(ast(&[&[1, 0, 0, 0, 0], &[1, 0, 0], &[1]]).rho(), 3);
        assert_eq!(ast(&[&[0, 1, 0, 0, 0], &[0, 0, 1], &[1]]).rho(), 1);
        assert_eq!(ast(&[&[0, 0, 1, 0, 0], &[1, -1, 1], &[1]]).rho(), 2);
        assert_eq!(ast(&[&[1, 0, 0, 0, 0], &[0, 0, 1], &[1]]).rho(), 2);
    }

    #[test]
    fn column_profile_of_fifth_listed_triangle() {
        let t = ast(&[&[0, 0, 0, 1, 0], &[1, 0, 0], &[1]]);
        let p = t.column_profile();
        let col = p.by_label(2).unwrap();
        assert_eq!(col.column, 4);
        assert_eq!(col.class, ColumnClass::One10);
        assert_eq!(col.side, Side::Right);
        let central = &p.columns[2];
        assert_eq!((central.side, central.class), (Side::Central, ColumnClass::One11));
        assert_eq!(p.columns.iter().filter(|c| c.is_one_column()).count(), 3);
    }

    #[test]
    fn pentagon_example_margins_and_rho() {
        let t = asp_6_3_8();
        assert_eq!(t.zero_margins(), Some((3, 8)));
        assert_eq!(t.rho(), 3);
        assert!(t.is_asp(3, 8));
        assert!(!t.is_asp(4, 8));
        let p = t.column_profile();
        for label in [0, 1, 2, 9] {
            assert_eq!(p.by_label(label).unwrap().class, ColumnClass::AllZero);
        }
    }

    #[test]
    fn zero_margin_examples() {
        // non-zero non-central columns sit at labels 0 and 2
        let t = ast(&[&[1, 0, 0, 0, 0], &[0, 0, 1], &[1]]);
        assert_eq!(t.zero_margins(), Some((0, 2)));
        assert_eq!(ast(&[&[1, 0, 0], &[1]]).zero_margins(), Some((0, 0)));
    }

    #[test]
    fn reflection() {
        let t = ast(&[&[1, 0, 0, 0, 0], &[1, 0, 0], &[1]]);
        let r = t.reflect();
        assert_eq!(r, ast(&[&[0, 0, 0, 0, 1], &[0, 0, 1], &[1]]));
        assert_eq!(r.rho(), 1);
        assert_eq!(r.reflect(), t);
        let sym = ast(&[&[0, 0, 1, 0, 0], &[1, -1, 1], &[1]]);
        assert_eq!(sym.reflect(), sym);
        assert_eq!(sym.rho(), 2);
        let big = asp_6_3_8();
        assert_eq!(big.reflect().zero_margins(), Some((9 - 8, 9 - 3)));
    }

    #[test]
    fn text_round_trip() {
        let t = asp_6_3_8();
        let text = t.to_text();
        assert!(text.starts_with("AST 6\n0 0 0 0 0 1 0 0 0 0 0\n"));
        assert_eq!(AstTriangle::from_text(&text).unwrap(), t);
    }
}
