//! Parabolic geometries of Monge type, computed exactly.
//!
//! The symbolic kernel in [`symalg`] is generic over an exact [`Field`];
//! everything above it works with [`Rational`] through the aliases below.

pub mod cases;
pub mod cohomology;
pub mod error;
pub mod grading;
pub mod mcforms;
pub mod monge;
pub mod nilrealize;
pub mod rootsys;
pub mod symalg;
pub mod symsolver;
pub mod tables;

pub use error::{Error, Result};
pub use symalg::Field;

pub type Rational = num_rational::BigRational;
pub type Poly = symalg::Polynomial<Rational>;
pub type Form = symalg::PolyForm<Rational>;
pub type Field1 = symalg::VectorField<Rational>;
pub type QMatrix = symalg::Matrix<Rational>;
pub type QPolyMatrix = symalg::PolyMatrix<Rational>;
pub type QSystem = symalg::LinearSystem<Rational>;
