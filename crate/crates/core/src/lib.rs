//! Exact enumeration of alternating sign triangles and pentagons, Magog and
//! Gog pentagons and Gelfand-Tsetlin patterns, with determinant and Pfaffian
//! generating functions and the lattice-path bijection between them.

pub mod algebra;
pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod objects;
pub mod verify;

pub use algebra::WeightPolynomial;
pub use error::{Error, Result, Violation};
