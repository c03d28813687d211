//! Exact computations around the K-moduli of quartic K3 surfaces.
//!
//! Everything is exact rational arithmetic. The algebraic containers
//! ([`Poly`], [`MultiPoly`], [`BinaryForm`], [`PiecewisePoly`]) are generic
//! over a [`Scalar`] field; the geometry modules work over [`Rational`].

pub mod binary_form;
pub mod data;
pub mod git_hm;
pub mod kstability;
pub mod multipoly;
pub mod piecewise;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod scalar;
pub mod toric;
pub mod walls;
pub mod weierstrass;

pub use binary_form::BinaryForm;
pub use data::DataError;
pub use multipoly::{MultiPoly, Var};
pub use piecewise::PiecewisePoly;
pub use poly::Poly;
pub use rational::{int, parse_rational, rat};
pub use scalar::Scalar;

/// Arbitrary-precision rational in lowest terms.
pub type Rational = rational::Rational;
pub type QPoly = Poly<Rational>;
pub type QMultiPoly = MultiPoly<Rational>;
pub type QBinaryForm = BinaryForm<Rational>;
pub type QPiecewise = PiecewisePoly<Rational>;
