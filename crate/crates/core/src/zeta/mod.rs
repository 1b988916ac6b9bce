//! ζ, Γ and ξ evaluation, critical-line zeros and vertical-line scans.

mod config;
mod gamma;
mod line;
mod riemann;
mod xi;
mod zeros;

pub use config::{EvalConfig, MIN_TERMS};
pub use gamma::{gamma, ln_gamma};
pub use line::{line_modulus_extrema, line_modulus_profile, LineExtrema};
pub use riemann::{required_terms, zeta, zeta_sphere};
pub use xi::{completed_xi, xi_critical_scaled};
pub(crate) use zeros::scan_grid;
pub use zeros::{find_critical_zeros, ZeroBracket, BISECTION_WIDTH};
