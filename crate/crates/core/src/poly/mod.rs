//! Exact multivariate polynomials, monomials and monomial orders.

mod division;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use division::{reduce, reduce_with_cofactors, Division, Reduction};
pub(crate) use division::{reduce_terms, sorted_terms, sub_mul, to_polynomial, Terms};
pub use monomial::Monomial;
pub use order::{Block, MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, parse_polynomial_at};
pub use polynomial::Polynomial;
pub(crate) use ring::is_identifier;
pub use ring::{Ring, Variable};

use std::cmp::Ordering;

use crate::error::Result;
use crate::field::Field;

/// Compares two monomials under `ord`, checking dimensions.
pub fn compare(m1: &Monomial, m2: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    ord.compare(m1, m2)
}

/// Leading coefficient and monomial of a nonzero polynomial.
pub fn leading_term<F: Field>(f: &Polynomial<F>, ord: &MonomialOrder) -> Result<(F, Monomial)> {
    f.leading_term(ord)
}
