//! Exact symbolic kernel: scalars, polynomials, forms of degree at most two,
//! vector fields, matrices and sparse linear systems.

pub mod field;
pub mod form;
pub mod linsys;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;

pub use field::VectorField;
pub use form::PolyForm;
pub use linsys::LinearSystem;
pub use matrix::{Matrix, PolyMatrix};
pub use parse::{parse_one_form, parse_polynomial};
pub use poly::{CoordSpace, Monomial, Polynomial, Space};
pub use scalar::Field;
