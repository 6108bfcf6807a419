use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// `binom(a, b)` with `binom(a, b) = 0` for `b < 0` or `b > a`.
pub fn binom(a: u64, b: i64) -> BigInt {
    if b < 0 || b as u64 > a {
        return BigInt::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// Prime factorization by trial division, ascending primes.
///
/// Panics on zero.
pub fn factorize(v: &BigInt) -> Vec<(u64, u32)> {
    assert!(*v > BigInt::zero(), "factorize expects a positive integer");
    if let Some(small) = v.to_u64() {
        return factorize_u64(small);
    }
    let mut out = Vec::new();
    let mut rest = v.clone();
    let mut p: u64 = 2;
    while BigInt::from(p) * BigInt::from(p) <= rest {
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        let last = rest.to_u64().expect("cofactor past trial-division range");
        out.push((last, 1));
    }
    out
}

fn factorize_u64(mut v: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= v {
        let mut e = 0;
        while v.is_multiple_of(p) {
            v /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if v > 1 {
        out.push((v, 1));
    }
    out
}

/// Renders a count as `p1^a1<sep>p2^a2...`; `0` and `1` render as themselves.
pub fn factorization_string(v: &BigInt, sep: &str) -> String {
    if v.is_zero() {
        return "0".into();
    }
    if v.is_one() {
        return "1".into();
    }
    factorize(v)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect::<Vec<_>>()
        .join(sep)
}

/// Number of `n x n` alternating sign matrices, `prod_{i<n} (3i+1)! / (n+i)!`.
pub fn asm_product_formula(n: u64) -> BigInt {
    let fact = |m: u64| (1..=m).fold(BigInt::one(), |acc, k| acc * k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= fact(3 * i + 1);
        den *= fact(n + i);
    }
    num / den
}

pub fn catalan(n: u64) -> BigInt {
    binom(2 * n, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn factorizations() {
        assert_eq!(factorize(&BigInt::from(28)), vec![(2, 2), (7, 1)]);
        assert_eq!(
            factorize(&BigInt::from(4862)),
            vec![(2, 1), (11, 1), (13, 1), (17, 1)]
        );
        assert_eq!(factorize(&BigInt::from(1)), vec![]);
        assert_eq!(factorization_string(&BigInt::from(1375), "·"), "5^3·11");
        assert_eq!(factorization_string(&BigInt::from(0), "*"), "0");
    }

    #[test]
    fn product_formula() {
        let got: Vec<_> = (1..=7).map(asm_product_formula).collect();
        let want = [1, 2, 7, 42, 429, 7436, 218348].map(BigInt::from);
        assert_eq!(got, want);
        assert_eq!(catalan(5), BigInt::from(42));
    }
}
