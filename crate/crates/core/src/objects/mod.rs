//! Validated domain types: triangles, pentagons, patterns and matrices.

mod asm;
mod ast;
mod gog;
mod gt;
mod magog;
pub(crate) mod text;

pub use asm::{asm_to_gog, gog_to_asm, partial_sums_to_gog, Asm};
pub use ast::{AstTriangle, ColumnClass, ColumnInfo, ColumnProfile, Side};
pub use gog::{GogPentagon, GogShape};
pub use gt::GtPattern;
pub use magog::{MagogPentagon, MagogShape, Trapezoid};
pub(crate) use magog::tau_of;
#[cfg(test)]
pub(crate) use magog::check_trapezoid;
