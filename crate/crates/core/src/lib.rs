//! Zeta functions, fractal strings, complex dimensions and the additive
//! spectral operator `a_c`.
//!
//! Numerical kernels are generic over [`Real`] (`f32` or `f64`); the aliases at
//! the crate root fix `f64`, which is what every stated tolerance assumes.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
mod error;
pub mod operator;
pub mod quad;
pub mod scalar;
pub mod spectral;
pub mod strings;
pub mod zeta;

pub use error::{Error, Result};
pub use scalar::{Real, SpherePoint};

/// Complex scalar used for ζ values, spectra and residues.
pub type ComplexPoint = num_complex::Complex<f64>;
pub type Config = zeta::EvalConfig<f64>;
pub type FractalString = strings::GeneralizedFractalString<f64>;
pub type LatticeSpec = strings::SelfSimilarSpec<f64>;
pub type Sampled = operator::SampledFunction<f64>;
pub type Spectrum = operator::SpectrumCurve<f64>;
pub type Report = operator::PhaseReport<f64>;
