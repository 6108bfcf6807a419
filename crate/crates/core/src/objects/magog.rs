//! Magog trapezoids and pentagons.

use std::fmt;

use super::text;
use crate::error::{Error, Result, Violation};

/// Shape of an `(m, n, k, λ)` Magog pentagon.
///
/// Cells are `(p, q)` with `q` the row (`1..=k`) and `p` the position
/// (`q..=n` in the full trapezoid). The pentagon keeps the cells whose
/// diagonal index `n + 2q - 1 - p` is at most `λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagogShape {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
}

impl MagogShape {
    pub fn new(m: usize, n: usize, k: usize, lambda: usize) -> Result<Self> {
        if k == 0 || k > n || lambda == 0 {
            return Err(Error::ParamRange(format!(
                "Magog shape needs 1 <= k <= n and lambda >= 1, got m={m} n={n} k={k} lambda={lambda}"
            )));
        }
        Ok(Self { m, n, k, lambda })
    }

    pub fn diagonal(&self, p: usize, q: usize) -> usize {
        self.n + 2 * q - 1 - p
    }

    /// First kept position of row `q`; rows may be empty (`> n`).
    pub fn row_start(&self, q: usize) -> usize {
        q.max((self.n + 2 * q).saturating_sub(1 + self.lambda))
    }

    pub fn row_len(&self, q: usize) -> usize {
        (self.n + 1).saturating_sub(self.row_start(q))
    }

    pub fn contains(&self, p: usize, q: usize) -> bool {
        (1..=self.k).contains(&q) && p <= self.n && p >= self.row_start(q)
    }

    pub fn cell_count(&self) -> usize {
        (1..=self.k).map(|q| self.row_len(q)).sum()
    }
}

/// A validated Magog pentagon; `rows[q-1]` lists positions `row_start(q)..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MagogPentagon {
    shape: MagogShape,
    rows: Vec<Vec<u32>>,
}

/// The full `(m, n, k)` trapezoid with every cell present; `rows[q-1][p-q]`.
pub type Trapezoid = Vec<Vec<u32>>;

impl MagogPentagon {
    pub fn new(shape: MagogShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.k {
            return Err(Error::reject(
                Violation::Membership,
                format!("{} rows, expected {}", rows.len(), shape.k),
            ));
        }
        for (q, row) in (1..).zip(&rows) {
            if row.len() != shape.row_len(q) {
                return Err(Error::reject(
                    Violation::Membership,
                    format!("row {q} has {} cells, expected {}", row.len(), shape.row_len(q)),
                ));
            }
            if let Some(i) = row.iter().position(|&v| v == 0) {
                return Err(Error::reject(
                    Violation::Positivity,
                    format!("a({},{q})", shape.row_start(q) + i),
                ));
            }
        }
        let pent = Self {
            shape,
            rows,
        };
        check_trapezoid(&shape, &pent.complete())?;
        Ok(pent)
    }

    pub(crate) fn from_valid_trapezoid(shape: MagogShape, full: &Trapezoid) -> Self {
        let rows = (1..=shape.k)
            .map(|q| full[q - 1][shape.row_start(q).min(shape.n + 1) - q..].to_vec())
            .collect();
        Self {
            shape,
            rows,
        }
    }

    /// Cuts a full trapezoid down to the pentagon, checking that every cut
    /// cell is 1 and that the trapezoid conditions hold.
    pub fn from_trapezoid(shape: MagogShape, full: &Trapezoid) -> Result<Self> {
        for q in 1..=shape.k {
            let row = full.get(q - 1).ok_or_else(|| {
                Error::reject(Violation::Membership, format!("missing row {q}"))
            })?;
            if row.len() != shape.n + 1 - q {
                return Err(Error::reject(Violation::Membership, format!("row {q}")));
            }
            for p in q..shape.row_start(q).min(shape.n + 1) {
                if row[p - q] != 1 {
                    return Err(Error::reject(Violation::Forced, format!("a({p},{q}) is cut but not 1")));
                }
            }
        }
        let pent = Self::from_valid_trapezoid(shape, full);
        check_trapezoid(&shape, &pent.complete())?;
        Ok(pent)
    }

    pub fn shape(&self) -> MagogShape {
        self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry at a kept cell.
    pub fn get(&self, p: usize, q: usize) -> Option<u32> {
        let s = self.shape();
        s.contains(p, q).then(|| self.rows[q - 1][p - s.row_start(q)])
    }

    /// The ones-completion: the full trapezoid with cut cells set to 1.
    pub fn complete(&self) -> Trapezoid {
        let s = self.shape();
        (1..=s.k)
            .map(|q| {
                let cut = s.row_start(q).min(s.n + 1) - q;
                let mut row = vec![1; cut];
                row.extend_from_slice(&self.rows[q - 1]);
                row
            })
            .collect()
    }

    /// `n + Σ (ā(n-1, i) - ā(n, i))` over the completion, for `i <= min(k, n-1)`.
    pub fn tau(&self) -> usize {
        let s = self.shape();
        tau_of(&s, &self.complete())
    }

    pub fn to_text(&self) -> String {
        let s = self.shape();
        text::render(&format!("MAGOG {} {} {} {}", s.m, s.n, s.k, s.lambda), &self.rows)
    }

    pub fn from_text(src: &str) -> Result<Self> {
        let mut lines = src.lines();
        let h = text::header(&mut lines, "MAGOG", 4)?;
        let shape = MagogShape::new(h[0], h[1], h[2], h[3])?;
        let rows = text::rows(lines, shape.k)?;
        Self::new(shape, rows)
    }
}

pub(crate) fn tau_of(s: &MagogShape, full: &Trapezoid) -> usize {
    let n = s.n;
    let mut tau = n as i64;
    for i in 1..=s.k.min(n - 1) {
        let row = &full[i - 1];
        tau += row[n - 1 - i] as i64 - row[n - i] as i64;
    }
    assert!(tau >= 1, "tau out of range on a valid pentagon");
    tau as usize
}

/// Row, display-column and first-row bound conditions on a full trapezoid.
pub(crate) fn check_trapezoid(s: &MagogShape, full: &Trapezoid) -> Result<()> {
    for q in 1..=s.k {
        for p in q..=s.n {
            let v = full[q - 1][p - q];
            if v == 0 {
                return Err(Error::reject(Violation::Positivity, format!("a({p},{q})")));
            }
            if p > q && full[q - 1][p - 1 - q] > v {
                return Err(Error::reject(Violation::Row, format!("a({},{q}) > a({p},{q})", p - 1)));
            }
            if q > 1 && full[q - 2][p - q] < v {
                return Err(Error::reject(
                    Violation::Column,
                    format!("a({},{}) < a({p},{q})", p - 1, q - 1),
                ));
            }
            if q == 1 && v as usize > s.m + p {
                return Err(Error::reject(Violation::Bound, format!("a({p},1) > {}", s.m + p)));
            }
        }
    }
    Ok(())
}

impl fmt::Debug for MagogPentagon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.shape();
        write!(f, "MagogPentagon({},{},{},{}: ", s.m, s.n, s.k, s.lambda)?;
        let rows: Vec<String> = self.rows.iter().map(|r| text::join(r)).collect();
        write!(f, "{})", rows.join(" / "))
    }
}
