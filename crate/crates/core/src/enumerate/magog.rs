use crate::algebra::WeightPolynomial;
use crate::error::Result;
use crate::objects::{tau_of, MagogPentagon, MagogShape, Trapezoid};

/// Visits the ones-completion of every pentagon of the given shape, in
/// lexicographic order of the kept cells.
///
/// Cells are filled row by row. A cell `(p, q)` lies between its left
/// neighbour `a(p-1, q)` and the display-column entry above it
/// `a(p-1, q-1)`, and the first row is capped by `m + p`. Cut cells are a
/// prefix of their row and are fixed to 1.
pub fn for_each_magog(shape: MagogShape, mut f: impl FnMut(&Trapezoid)) {
    let mut full: Trapezoid = (1..=shape.k).map(|q| vec![0; shape.n + 1 - q]).collect();
    fill(&shape, &mut full, 1, 1, &mut f);
}

fn fill(s: &MagogShape, full: &mut Trapezoid, q: usize, p: usize, f: &mut impl FnMut(&Trapezoid)) {
    if q > s.k {
        f(full);
        return;
    }
    if p > s.n {
        fill(s, full, q + 1, q + 1, f);
        return;
    }
    let lo = if p > q { full[q - 1][p - 1 - q] } else { 1 };
    let hi = if q > 1 {
        full[q - 2][p - q]
    } else {
        (s.m + p) as u32
    };
    let (lo, hi) = if p < s.row_start(q) { (lo, hi.min(1)) } else { (lo, hi) };
    for v in lo..=hi {
        full[q - 1][p - q] = v;
        fill(s, full, q, p + 1, f);
    }
}

pub fn enumerate_magog(shape: MagogShape) -> Vec<MagogPentagon> {
    let mut out = Vec::new();
    for_each_magog(shape, |full| out.push(MagogPentagon::from_valid_trapezoid(shape, full)));
    out
}

/// `Σ t^(tau-1)` over all `(m, n, k, λ)` Magog pentagons.
pub fn magog_genpoly(m: usize, n: usize, k: usize, lambda: usize) -> Result<WeightPolynomial> {
    let shape = MagogShape::new(m, n, k, lambda)?;
    let mut coeffs = vec![0i64; n];
    for_each_magog(shape, |full| coeffs[tau_of(&shape, full) - 1] += 1);
    Ok(WeightPolynomial::from_i64s(&coeffs))
}
