//! Exact coefficient arithmetic and sparse polynomial algebra.

pub mod algebra;
pub mod field;
pub mod poly;
pub mod roots;
pub mod text;

pub use algebra::{gcd, gcd_content, resultant};
pub use field::{field_arith, q, qf, FieldDesc, FieldElem, FieldOp, QuadField, Q};
pub use poly::{poly_ops, Monomial, MultiPoly, PolyOp};
pub use roots::{roots_in_field, univariate_roots};
pub use text::{parse_elem, parse_minpoly, parse_poly};
