use num_bigint::BigInt;

use crate::error::Result;
use crate::objects::{gog_to_asm, Asm, GogPentagon, GogShape};

/// Visits the completed rows of every Gog pentagon of the given shape in
/// lexicographic order.
///
/// A cell `(i, j)` is at least its left neighbour plus one and the entry
/// above it, and at most the diagonal entry `a(i-1, j+1)`; the first row
/// is capped by `m + j` and the last column by its bound.
pub fn for_each_gog(shape: GogShape, mut f: impl FnMut(&[Vec<u32>])) {
    let mut rows: Vec<Vec<u32>> = (1..=shape.n).map(|i| vec![0; shape.row_len(i)]).collect();
    fill(&shape, &mut rows, 1, 1, &mut f);
}

fn fill(s: &GogShape, rows: &mut Vec<Vec<u32>>, i: usize, j: usize, f: &mut impl FnMut(&[Vec<u32>])) {
    if i > s.n {
        f(rows);
        return;
    }
    if j > s.row_len(i) {
        fill(s, rows, i + 1, 1, f);
        return;
    }
    let mut lo = 1u32;
    if j > 1 {
        lo = lo.max(rows[i - 1][j - 2] + 1);
    }
    let mut hi = u32::MAX;
    if i > 1 {
        lo = lo.max(rows[i - 2][j - 1]);
        if j < rows[i - 2].len() {
            hi = hi.min(rows[i - 2][j]);
        }
    } else {
        hi = hi.min((s.m + j) as u32);
    }
    if j == s.k {
        if let Some(b) = s.bound(i) {
            hi = hi.min(b as u32);
        }
    }
    debug_assert!(hi < u32::MAX, "every Gog cell has a finite upper bound");
    if s.is_forced(i, j) {
        let v = j as u32;
        if lo <= v && v <= hi {
            rows[i - 1][j - 1] = v;
            fill(s, rows, i, j + 1, f);
        }
        return;
    }
    for v in lo..=hi {
        rows[i - 1][j - 1] = v;
        fill(s, rows, i, j + 1, f);
    }
}

pub fn enumerate_gog(shape: GogShape) -> Vec<GogPentagon> {
    let mut out = Vec::new();
    for_each_gog(shape, |rows| out.push(GogPentagon::from_valid_rows(shape, rows.to_vec())));
    out
}

/// Number of `(m, n, k, l)` Gog pentagons.
pub fn gog_count(m: usize, n: usize, k: usize, l: usize) -> Result<BigInt> {
    let shape = GogShape::new(m, n, k, l)?;
    let mut c = 0u64;
    for_each_gog(shape, |_| c += 1);
    Ok(c.into())
}

/// All ASMs of order `n`, ordered lexicographically by monotone triangle.
pub fn enumerate_asms(n: usize) -> Vec<Asm> {
    if n == 0 {
        return Vec::new();
    }
    let shape = GogShape::new(0, n, n, 0).expect("k = n is a valid shape");
    let mut out = Vec::new();
    for_each_gog(shape, |rows| {
        let g = GogPentagon::from_valid_rows(shape, rows.to_vec());
        out.push(gog_to_asm(&g).expect("monotone triangles give ASMs"));
    });
    out
}

/// Number of order-`n` ASMs with `t_r >= x`.
pub fn asm_count_tr_at_least(n: usize, x: usize) -> BigInt {
    enumerate_asms(n).iter().filter(|a| a.t_r() >= x).count().into()
}
