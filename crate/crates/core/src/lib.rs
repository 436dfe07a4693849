//! Exact-arithmetic toolkit for planar polynomial vector fields: certificate
//! verification over the rationals, degree-by-degree nonexistence
//! certification via linear programming with Farkas certificates, and
//! floating-point trajectory simulation.
//!
//! Everything on the certification side is computed in exact rational (and
//! Gaussian rational) arithmetic; floating point appears only in the
//! simulation layer.

pub mod certify;
pub mod error;
pub mod lp;
pub mod poly;
pub mod posdef;
pub mod ratfunc;
pub mod rational;
pub mod report;
pub mod sturm;
pub mod systems;
pub mod unipoly;

pub use error::{Error, Result};
pub use poly::BivariatePolynomial;
pub use ratfunc::RationalFunction;
pub use rational::{GaussianRational, Rational};
pub use systems::DecomposedField;
pub use unipoly::UniPoly;
