use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::factorization_string;
use crate::enumerate::AstCensus;
use crate::error::{Error, Result};
use crate::formulas::{check_window, detsum_genpoly, in_theorem_range};

/// Printed `(n, l, r)`-ASP counts for `n = 4..7`; `PRINTED[n-4][r-(n-1)][l]`.
const PRINTED: [&[&[&str]]; 4] = [
    &[
        &["2·7", "3^2", "0"],
        &["5·7", "2^2·7", "3^2"],
        &["2·3·7", "5·73", "2·7"],
    ],
    &[
        &["2·3·7", "2^2·7", "0", "0"],
        &["3·73", "2^3·23", "2^3·3^2", "0"],
        &["3^2·43", "3·5·23", "2^3·23", "2^2·7"],
        &["3·11·13", "3^2·43", "3·73", "2·3·7"],
    ],
    &[
        &["2^2·3·11", "2·3^2·5", "0", "0", "0"],
        &["2·797", "5^3·11", "3·199", "0", "0"],
        &["2·11·13·17", "5^2·179", "2·5^3·11", "3·199", "0"],
        &["7^2·11·13", "2·11·13·23", "5^2·179", "5^6·11", "2·3^2·5"],
        &["2^2·11·13^2", "7^2·11·13", "2·11·13·17", "2·797", "2^2·3·11"],
    ],
    &[
        &["3·11·13", "3^3·11", "0", "0", "0", "0"],
        &["5·13·199", "11·1031", "3^2·11·53", "0", "0", "0"],
        &["5·11·13·107", "3·11·13·167", "2·11^2·197", "11·31·37", "0", "0"],
        &["2^3·3·13^2·41", "13·12253", "13^2·709", "2·11^2·197", "3^2·11·53", "0"],
        &["2^5·3·13^3", "2^2·7·13^2·43", "13·12253", "3·11·13·167", "11·1031", "3^3·11"],
        &["2^2·13^2·17·19", "2^5·3·13^3", "2^3·3·13^2·41", "5·11·13·107", "5·13·199", "3·11·13"],
    ],
];

/// The printed factorization of the `(n, l, r)` cell, if the tables have one.
pub fn printed_value(n: usize, l: usize, r: usize) -> Option<&'static str> {
    let rows = PRINTED.get(n.checked_sub(4)?)?;
    rows.get(r.checked_sub(n - 1)?)?.get(l).copied()
}

/// Evaluates a factorization such as `2^2·7` (also accepts `*` as separator).
pub fn parse_factorization(s: &str) -> Result<BigInt> {
    let s = s.trim();
    if s == "0" {
        return Ok(BigInt::zero());
    }
    let mut acc = BigInt::one();
    for part in s.split(['·', '*']) {
        let (base, exp) = part.split_once('^').unwrap_or((part, "1"));
        let base: BigInt = base.trim().parse().map_err(|_| Error::Parse(format!("bad factor {part:?}")))?;
        let exp: u32 = exp.trim().parse().map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?;
        acc *= num_traits::pow(base, exp as usize);
    }
    Ok(acc)
}

/// Number of `(n, l, r)`-ASPs from the determinant sum.
///
/// Cells with `l + r >= 2n-2` are read off the mirror cell
/// `(2n-3-r, 2n-3-l)`; cells with `r - l <= n-3` are empty.
pub fn formula_count(n: usize, l: usize, r: usize) -> Result<BigInt> {
    check_window(n, l, r)?;
    if in_theorem_range(n, l, r) {
        return Ok(detsum_genpoly(n, l, r)?.eval_one());
    }
    if r + 3 <= n + l {
        return Ok(BigInt::zero());
    }
    let (ml, mr) = (2 * n - 3 - r, 2 * n - 3 - l);
    Ok(detsum_genpoly(n, ml, mr)?.eval_one())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableCell {
    pub n: usize,
    pub l: usize,
    pub r: usize,
    #[serde(serialize_with = "super::ser_big")]
    pub computed: BigInt,
    pub factorization: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "super::ser_opt_big")]
    pub brute: Option<BigInt>,
    pub erratum: bool,
}

impl TableCell {
    /// The brute count, when present, agrees with the formula.
    pub fn cross_check_ok(&self) -> bool {
        self.brute.as_ref().is_none_or(|b| *b == self.computed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub n: usize,
    pub cells: Vec<TableCell>,
}

impl Table {
    pub fn errata(&self) -> impl Iterator<Item = &TableCell> {
        self.cells.iter().filter(|c| c.erratum)
    }

    pub fn get(&self, l: usize, r: usize) -> Option<&TableCell> {
        self.cells.iter().find(|c| c.l == l && c.r == r)
    }
}

/// Grid of ASP counts for `r = n-1..=2n-3`, `l = 0..=n-2`, rows by `r`.
/// With `cross_check`, orders up to 6 are recounted by enumerating ASTs.
pub fn compute_table(n: usize, cross_check: bool) -> Result<Table> {
    check_window(n, 0, n - 1)?;
    let census = (cross_check && n <= 6).then(|| AstCensus::new(n));
    let grid: Vec<(usize, usize)> = (n - 1..=2 * n - 3)
        .flat_map(|r| (0..=n - 2).map(move |l| (l, r)))
        .collect();
    let cells = grid
        .par_iter()
        .map(|&(l, r)| {
            let computed = formula_count(n, l, r)?;
            let expected = printed_value(n, l, r);
            let erratum = match expected {
                Some(e) => parse_factorization(e)? != computed,
                None => false,
            };
            Ok(TableCell {
                n,
                l,
                r,
                factorization: factorization_string(&computed, "·"),
                brute: census.as_ref().map(|c| c.genpoly(l, r).eval_one()),
                computed,
                expected,
                erratum,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Table { n, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_factorization("2^2·7").unwrap(), 28.into());
        assert_eq!(parse_factorization("5^6*11").unwrap(), 171875.into());
        assert_eq!(parse_factorization("0").unwrap(), 0.into());
        assert!(parse_factorization("2^x").is_err());
    }

    #[test]
    fn printed_lookup() {
        assert_eq!(printed_value(4, 1, 5), Some("5·73"));
        assert_eq!(printed_value(7, 0, 6), Some("3·11·13"));
        assert_eq!(printed_value(4, 3, 5), None);
        assert_eq!(printed_value(3, 0, 2), None);
    }

    #[test]
    fn order_four_table() {
        let t = compute_table(4, true).unwrap();
        assert_eq!(t.cells.len(), 9);
        assert!(t.cells.iter().all(|c| c.cross_check_ok()));
        let errata: Vec<_> = t.errata().map(|c| (c.l, c.r)).collect();
        assert_eq!(errata, vec![(1, 5)]);
        assert_eq!(t.get(1, 5).unwrap().computed, 35.into());
        assert_eq!(t.get(1, 5).unwrap().factorization, "5·7");
    }
}
