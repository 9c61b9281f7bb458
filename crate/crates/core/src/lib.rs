//! Exact Gröbner-basis computations for quadratic algebras: binomial edge
//! ideals of graphs, Hibi rings of distributive lattices, and verification of
//! Koszul filtrations.
//!
//! Everything is generic over a [`Field`]; the aliases below fix the rationals.

pub mod binomial_edge;
pub mod error;
pub mod field;
pub mod graphs;
pub mod groebner;
pub mod io;
pub mod koszul;
pub mod lattice;
pub mod linalg;
pub mod poly;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use graphs::Graph;
pub use lattice::{DistributiveLattice, Poset, PosetIdeal};
pub use poly::{Monomial, MonomialOrder, Ring};

/// Polynomials with rational coefficients.
pub type Poly = poly::Polynomial<Rational>;
/// Ideals of a rational polynomial ring.
pub type Ideal = groebner::IdealHandle<Rational>;
pub type GroebnerBasis = groebner::GroebnerBasis<Rational>;
pub type EdgeRing = binomial_edge::EdgeRingContext<Rational>;
pub type HibiRing = lattice::HibiRing<Rational>;
pub type Filtration = koszul::Filtration<Rational>;
pub type LinearIdeal = koszul::LinearIdeal<Rational>;
pub type QuotientRing = koszul::QuotientRing<Rational>;
