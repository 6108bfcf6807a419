//! Backtracking enumerators and generating polynomials for every object class.

mod ast;
mod gog;
mod magog;

pub use ast::{asp_genpoly, count_asts, enumerate_asps, enumerate_asts, for_each_ast, AstCensus};
pub use gog::{asm_count_tr_at_least, enumerate_asms, enumerate_gog, for_each_gog, gog_count};
pub use magog::{enumerate_magog, for_each_magog, magog_genpoly};
