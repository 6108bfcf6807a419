//! Alternating sign matrices, their corner statistics and the monotone
//! triangle correspondence.

use std::fmt;

use super::gog::{GogPentagon, GogShape};
use super::text;
use crate::error::{Error, Result, Violation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    rows: Vec<Vec<i8>>,
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::reject(Violation::Shape, "no rows"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::reject(Violation::Shape, format!("row {} has {} entries", i + 1, row.len())));
            }
            if let Some(j) = row.iter().position(|v| !(-1..=1).contains(v)) {
                return Err(Error::reject(Violation::Entry, format!("({},{})", i + 1, j + 1)));
            }
        }
        let line_ok = |it: &mut dyn Iterator<Item = i8>| -> (bool, i32) {
            let mut last = -1i8;
            let mut sum = 0;
            for v in it.filter(|&v| v != 0) {
                if v == last {
                    return (false, sum);
                }
                last = v;
                sum += v as i32;
            }
            (true, sum)
        };
        for (i, row) in rows.iter().enumerate() {
            let (alt, sum) = line_ok(&mut row.iter().copied());
            if !alt {
                return Err(Error::reject(Violation::Alternation, format!("row {}", i + 1)));
            }
            if sum != 1 {
                return Err(Error::reject(Violation::RowSum, format!("row {}", i + 1)));
            }
        }
        for j in 0..n {
            let (alt, sum) = line_ok(&mut rows.iter().map(|r| r[j]));
            if !alt {
                return Err(Error::reject(Violation::Alternation, format!("column {}", j + 1)));
            }
            if sum != 1 {
                return Err(Error::reject(Violation::ColumnSum, format!("column {}", j + 1)));
            }
        }
        Ok(Self { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Entry `(i, j)`, 1-indexed.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i - 1][j - 1]
    }

    /// Length of the initial run of all-zero south-east diagonals
    /// `{(i, n-m+i)}`, `m = 1, 2, ...`, starting at the top-right corner.
    pub fn t_r(&self) -> usize {
        let n = self.order();
        (1..=n)
            .take_while(|&m| (1..=m).all(|i| self.get(i, n - m + i) == 0))
            .count()
    }

    /// Length of the initial run of all-zero south-west diagonals
    /// `{(i, m+1-i)}` starting at the top-left corner.
    pub fn t_l(&self) -> usize {
        let n = self.order();
        (1..=n)
            .take_while(|&m| (1..=m).all(|i| self.get(i, m + 1 - i) == 0))
            .count()
    }

    /// Column of the 1 in the top row.
    pub fn rho(&self) -> usize {
        1 + self.rows[0].iter().position(|&v| v == 1).expect("top row has a 1")
    }

    pub fn reflect(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Self { rows }
    }

    pub fn to_text(&self) -> String {
        text::render(&format!("ASM {}", self.order()), &self.rows)
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src.lines();
        let n = text::header(&mut lines, "ASM", 1)?[0];
        Self::new(text::rows(lines, n)?)
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| text::join(r)).collect();
        write!(f, "Asm({})", rows.join(" / "))
    }
}

/// Monotone triangle of an order-`n` matrix over `{-1,0,1}`: row `i` lists
/// the columns where rows `i..=n` sum to 1.
pub fn asm_to_gog(a: &Asm) -> Result<GogPentagon> {
    partial_sums_to_gog(a.rows())
}

/// Same map on an unvalidated square array; rejects partial sums outside `{0,1}`.
pub fn partial_sums_to_gog(rows: &[Vec<i8>]) -> Result<GogPentagon> {
    let n = rows.len();
    let mut acc = vec![0i32; n];
    let mut out = vec![Vec::new(); n];
    for i in (0..n).rev() {
        for (j, s) in acc.iter_mut().enumerate() {
            *s += rows[i][j] as i32;
            if !(0..=1).contains(s) {
                return Err(Error::reject(
                    Violation::PartialSum,
                    format!("rows {}..{n}, column {}", i + 1, j + 1),
                ));
            }
        }
        out[i] = (1..=n as u32).filter(|&j| acc[j as usize - 1] == 1).collect();
    }
    GogPentagon::new(GogShape::new(0, n, n, 0)?, out)
}

/// Inverse of [`asm_to_gog`] on `(0, n, n)` Gog trapezoids.
pub fn gog_to_asm(g: &GogPentagon) -> Result<Asm> {
    let s = g.shape();
    if s.k != s.n {
        return Err(Error::ParamRange(format!("need a full (0,n,n) trapezoid, got k={}", s.k)));
    }
    let n = s.n;
    let indicator = |i: usize| -> Vec<i8> {
        let mut v = vec![0i8; n];
        if i <= n {
            for &c in &g.rows()[i - 1] {
                v[c as usize - 1] = 1;
            }
        }
        v
    };
    let rows = (1..=n)
        .map(|i| {
            let (a, b) = (indicator(i), indicator(i + 1));
            a.iter().zip(&b).map(|(x, y)| x - y).collect()
        })
        .collect();
    Asm::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn asm(rows: &[&[i8]]) -> Asm {
        Asm::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn identity(n: usize) -> Asm {
        Asm::new((0..n).map(|i| (0..n).map(|j| (i == j) as i8).collect()).collect()).unwrap()
    }

    #[test]
    fn statistics() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        assert_eq!(a.t_r(), 1);
        assert_eq!(a.t_l(), 1);
        assert_eq!(a.rho(), 2);
        let id = identity(3);
        assert_eq!((id.t_r(), id.t_l(), id.rho()), (2, 0, 1));
        let seven = asm(&[
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 1, 0, -1, 1, 0, 0],
            &[1, -1, 0, 1, -1, 1, 0],
            &[0, 0, 1, -1, 0, 0, 1],
            &[0, 1, -1, 1, 0, 0, 0],
            &[0, 0, 1, -1, 1, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
        ]);
        assert_eq!(seven.rho(), 4);
    }

    #[test]
    fn rejections() {
        let e = Asm::new(vec![vec![0, 1], vec![0, 1]]).unwrap_err();
        assert_eq!(e.violation(), Some(Violation::ColumnSum));
        let e = Asm::new(vec![vec![1, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(e.violation(), Some(Violation::Alternation));
        let e = Asm::new(vec![vec![-1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]).unwrap_err();
        assert_eq!(e.violation(), Some(Violation::Alternation));
        let e = partial_sums_to_gog(&[vec![1, 0], vec![1, 0]]).unwrap_err();
        assert_eq!(e.violation(), Some(Violation::PartialSum));
    }

    #[test]
    fn order_six_triangle() {
        let a = asm(&[
            &[0, 0, 1, 0, 0, 0],
            &[1, 0, -1, 1, 0, 0],
            &[0, 0, 1, -1, 0, 1],
            &[0, 1, -1, 1, 0, 0],
            &[0, 0, 1, -1, 1, 0],
            &[0, 0, 0, 1, 0, 0],
        ]);
        let g = asm_to_gog(&a).unwrap();
        let want: Vec<Vec<u32>> = vec![
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 2, 4, 5, 6],
            vec![2, 3, 5, 6],
            vec![2, 4, 5],
            vec![3, 5],
            vec![4],
        ];
        assert_eq!(g.rows(), want.as_slice());
        assert_eq!(gog_to_asm(&g).unwrap(), a);
    }

    #[test]
    fn identity_triangle() {
        let g = asm_to_gog(&identity(4)).unwrap();
        assert_eq!(g.rows(), &[vec![1, 2, 3, 4], vec![2, 3, 4], vec![3, 4], vec![4]]);
    }

    #[test]
    fn text_round_trip() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        assert_eq!(a.to_text(), "ASM 3\n0 1 0\n1 -1 1\n0 1 0\n");
        assert_eq!(Asm::from_text(&a.to_text()).unwrap(), a);
        assert_eq!(a.reflect(), a);
    }
}
