//! The spectral operator `a_c = ζ(∂_c)` acting on the weighted space `H_c`,
//! through its additive form `a(f)(t) = Σ_k f(t - ln k)`.

mod dirichlet;
mod norm;
mod phase;
mod signal;
mod spectrum;

pub use crate::arith::mobius;
pub use dirichlet::{
    apply_euler_factor, apply_inverse, apply_on_grid, apply_spectral_operator, euler_product_apply, Applied,
    DirichletOperator, Term, MAX_OPERATOR_TERMS,
};
pub use norm::{norm_bound_check, shift, weighted_norm, weighted_norm_squared, NormBound};
pub use phase::{
    almost_invertibility_verdict, disc_density, phase_transition_scan, quasi_invertibility_verdict, PhaseReport,
    Verdict, WITNESS_SEARCH_SPAN,
};
pub use signal::{Grid, SampledFunction, Signal, StepFunction, Support, ALIGN_TOLERANCE};
pub use spectrum::{truncated_spectrum, SpectrumCurve};
