//! Ordinary and generalized fractal strings, geometric zeta functions and
//! complex dimensions.

mod estimate;
mod selfsimilar;
mod spec;
mod string;

pub use estimate::{
    dimension_estimate, minkowski_content_estimate, minkowski_ratio, string_stats, StringStats, MEASURABILITY_SPREAD,
    MIN_ATOMS_FOR_ESTIMATE,
};
pub use selfsimilar::{
    closed_form_zeta, complex_dimensions, tube_volume_cantor_series, ComplexDimension, SelfSimilarSpec, POLE_TOLERANCE,
};
pub use spec::StringSpec;
pub use string::{
    counting_function, geometric_zeta, make_cantor_string, make_power_string, tube_volume_direct, unit_string, Atom,
    GeneralizedFractalString, POSITION_TOLERANCE,
};
