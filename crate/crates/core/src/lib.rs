//! Dual-quermassintegral functionals of origin-symmetric convex bodies and
//! their polars, with numerical checks of the generalized Blaschke-Santaló
//! inequality: admissible exponent pairs, model-integral asymptotics and the
//! divergent rhombus families outside the admissible region.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases at the crate root fix `f64`. Admissibility is decided in exact
//! rational arithmetic.

mod error;
mod linalg;
mod scalar;

pub mod bodies;
pub mod bounds;
pub mod checks;
pub mod fixtures;
pub mod functionals;
pub mod quadrature;
pub mod rng;

pub use bodies::{AmbientDim, BodyJson, BodySpec, CenteredBody, HPolytopeSym, LinearMap, Loewner, LoewnerOptions, Semiaxes};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use quadrature::{IntegralEstimate, RuleConfig, SphereRule, Symmetry};
pub use scalar::Real;

pub type BodySpec64 = BodySpec<f64>;
pub type CenteredBody64 = CenteredBody<f64>;
pub type SphereRule64 = SphereRule<f64>;
pub type IntegralEstimate64 = IntegralEstimate<f64>;
pub type Matrix64 = Matrix<f64>;
pub type ExponentPair64 = functionals::ExponentPair<f64>;

pub type ScanResult64 = bounds::ScanResult<f64>;
pub type SlopeFit64 = bounds::SlopeFit<f64>;
