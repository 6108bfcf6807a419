//! Exact arithmetic: integer polynomials in the weight `t`, determinants
//! and Pfaffians over them, binomials, and small factorizations.

mod det;
mod numbers;
mod pfaffian;
mod poly;

pub use det::det;
pub use numbers::{asm_product_formula, binom, catalan, factorization_string, factorize};
pub use pfaffian::{pfaffian, SkewMatrix};
pub use poly::WeightPolynomial;
