//! Monomials, sparse polynomials and their text grammar.

pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use monomial::{binomial, monomial_basis, monomial_basis_in, monomial_count, Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use polynomial::Polynomial;
