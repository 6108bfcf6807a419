use asp_core::algebra::{binom, det, factorize, pfaffian, SkewMatrix};
use asp_core::bijections::{enumerate_tuples, from_gt, gt_to_magog, magog_to_gt, to_gt, KissingTuple};
use asp_core::enumerate::{enumerate_asms, enumerate_asts, enumerate_magog};
use asp_core::formulas::theorem_grid;
use asp_core::objects::{asm_to_gog, gog_to_asm, Asm, AstTriangle, GtPattern, MagogPentagon, MagogShape};
use asp_core::WeightPolynomial;
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = WeightPolynomial> {
    prop::collection::vec(-6i64..=6, 0..4).prop_map(|c| WeightPolynomial::from_i64s(&c))
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<WeightPolynomial>>> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(poly(), n), n))
}

/// Cofactor expansion along the first row.
fn cofactor_det(m: &[Vec<WeightPolynomial>]) -> WeightPolynomial {
    let n = m.len();
    if n == 0 {
        return WeightPolynomial::one();
    }
    let mut acc = WeightPolynomial::zero();
    for col in 0..n {
        let minor: Vec<Vec<WeightPolynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * &cofactor_det(&minor);
        if col % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Perfect-matching expansion along the first index.
fn matching_pfaffian(a: &SkewMatrix, idx: &[usize]) -> WeightPolynomial {
    if idx.is_empty() {
        return WeightPolynomial::one();
    }
    let mut acc = WeightPolynomial::zero();
    for k in 1..idx.len() {
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let term = &a.get(idx[0], idx[k]) * &matching_pfaffian(a, &rest);
        if k % 2 == 1 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn skew(max_half: usize) -> impl Strategy<Value = SkewMatrix> {
    (1..=max_half).prop_flat_map(|h| {
        let n = 2 * h;
        prop::collection::vec(poly(), n * (n - 1) / 2).prop_map(move |vals| {
            let mut a = SkewMatrix::zeros(n);
            let mut it = vals.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    a.set(i, j, it.next().unwrap());
                }
            }
            a
        })
    })
}

proptest! {
    #[test]
    fn determinant_matches_cofactor_expansion(m in square(5)) {
        prop_assert_eq!(det(&m), cofactor_det(&m));
    }

    #[test]
    fn pfaffian_matches_matchings_and_squares_to_det(a in skew(3)) {
        let pf = pfaffian(&a).unwrap();
        let idx: Vec<usize> = (0..a.size()).collect();
        prop_assert_eq!(&pf, &matching_pfaffian(&a, &idx));
        prop_assert_eq!(&pf * &pf, det(&a.to_dense()));
    }

    #[test]
    fn polynomial_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).eval_one(), a.eval_one() * b.eval_one());
        prop_assert_eq!(a.shift_up(2).shift_down(2), Some(a.clone()));
    }

    #[test]
    fn binomial_symmetry_and_pascal(a in 1u64..60, b in -5i64..65) {
        prop_assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b));
        if (0..=a as i64).contains(&b) {
            prop_assert_eq!(binom(a, b), binom(a, a as i64 - b));
        }
    }

    #[test]
    fn factorization_multiplies_back(v in 1u64..2_000_000) {
        let f = factorize(&BigInt::from(v));
        let back = f.iter().fold(BigInt::from(1), |acc, &(p, e)| acc * num_traits::pow(BigInt::from(p), e as usize));
        prop_assert_eq!(back, BigInt::from(v));
        prop_assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn ast_reflection_is_an_involution(n in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let all = enumerate_asts(n);
        let t = pick.get(&all);
        let back = t.reflect().reflect();
        prop_assert_eq!(&back, t);
        prop_assert_eq!(t.rho() + t.reflect().rho(), n + 1);
        prop_assert_eq!(&AstTriangle::from_text(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn asm_gog_round_trip(n in 1usize..=5, pick in any::<prop::sample::Index>()) {
        let all = enumerate_asms(n);
        let a = pick.get(&all);
        let g = asm_to_gog(a).unwrap();
        prop_assert_eq!(&gog_to_asm(&g).unwrap(), a);
        prop_assert_eq!(&Asm::from_text(&a.to_text()).unwrap(), a);
        prop_assert_eq!(a.reflect().reflect(), a.clone());
    }

    #[test]
    fn magog_text_round_trip(k in 1usize..=4, lambda in 1usize..=6, pick in any::<prop::sample::Index>()) {
        let shape = MagogShape::new(0, 4, k, lambda).unwrap();
        let all = enumerate_magog(shape);
        let m = pick.get(&all);
        prop_assert_eq!(&MagogPentagon::from_text(&m.to_text()).unwrap(), m);
        prop_assert_eq!(&MagogPentagon::from_trapezoid(shape, &m.complete()).unwrap(), m);
        prop_assert!(m.tau() >= 1 && m.tau() <= 4);
    }

    #[test]
    fn path_chain_round_trips_at_order_five(cell in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let grid = theorem_grid(5);
        let &(l, r) = cell.get(&grid);
        let tuples = enumerate_tuples(5, l, r).unwrap();
        let t = pick.get(&tuples);
        let k = KissingTuple::shift(t);
        prop_assert!(k.is_kissing());
        prop_assert_eq!(&k.unshift().unwrap(), t);
        let g = to_gt(t);
        prop_assert_eq!(&GtPattern::from_text(&g.to_text()).unwrap(), &g);
        prop_assert_eq!(&from_gt(&g, l, r).unwrap(), t);
        let m = gt_to_magog(&g, l, r).unwrap();
        prop_assert_eq!(m.tau(), t.weight() + 1);
        prop_assert_eq!(magog_to_gt(&m).unwrap(), g);
        // only the lowest path can reach the line
        let offset = asp_core::bijections::line_offset(5, l, r);
        for p in &t.paths()[..3] {
            prop_assert!(p.vertices().iter().all(|&(x, y)| y > x + offset));
        }
    }
}
