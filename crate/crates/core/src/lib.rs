//! Exact computation of non-Lefschetz loci of graded artinian algebras.
//!
//! The crate builds artinian quotients `A = R/I` of a polynomial ring, the
//! matrices of linear forms describing multiplication by a general linear
//! form, their maximal-minor ideals, and the dimension and degree of the
//! resulting determinantal schemes. Closed-form predictions for complete
//! intersections and Gorenstein algebras live in [`predict`].

pub mod artinian;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod lefjordan;
pub mod linalg;
pub mod locus;
pub mod poly;
pub mod predict;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals, Scalar};
pub use poly::{Monomial, MonomialOrder, Polynomial};
