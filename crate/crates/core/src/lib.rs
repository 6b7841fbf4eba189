//! Exact analysis of minimal pseudo-codewords of type-I projective-geometry
//! LDPC codes built from PG(2, q), q = 2^s.
//!
//! The pipeline runs from the field tables and plane construction through
//! the fundamental cone of the circulant parity-check matrix, exact
//! enumeration of its extreme rays, and AWGNC pseudo-weight analysis, down
//! to a desk-scale decoder comparison.

pub mod bits;
pub mod code;
pub mod construction;
pub mod decoder;
pub mod cone;
pub mod error;
pub mod field;
pub mod fraction;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod pseudoweight;
pub mod rays;
pub mod scalar;

pub use cone::{canonical_scale, ConeSystem, Inequality, RayVector};
pub use error::{Error, Result};
pub use field::FieldTable;
pub use geometry::{build_plane, circulant_labeling, Plane};
pub use matrix::BinaryMatrix;
pub use scalar::{ExactInt, Scalar};

/// Exact rational numbers used for every structural computation.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers.
pub type Int = num_bigint::BigInt;
/// Entry type of canonical integer rays.
pub type RayInt = i64;
