use num_complex::Complex;

use super::config::EvalConfig;
use super::gamma::ln_gamma;
use super::riemann::zeta;
use crate::error::Result;
use crate::scalar::Real;

fn ln_prefactor<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    // ln(π^{-s/2} Γ(s/2))
    let half = s / (T::one() + T::one());
    Ok(-half * T::PI().ln() + ln_gamma(half)?)
}

/// Completed zeta `ξ(s) = π^{-s/2} Γ(s/2) ζ(s)`.
///
/// `s = 1` fails with [`crate::Error::PoleAtOne`], `s = 0` (and the trivial
/// zeros) with [`crate::Error::PoleAtNonpositiveInteger`] from the Γ factor.
pub fn completed_xi<T: Real>(s: Complex<T>, cfg: &EvalConfig<T>) -> Result<Complex<T>> {
    let pre = ln_prefactor(s)?;
    let z = zeta(s, cfg)?;
    Ok(pre.exp() * z)
}

/// `ξ(1/2 + it)` divided by the positive number `|π^{-s/2} Γ(s/2)|`.
///
/// Same sign as `ξ` on the critical line, but free of the `e^{-πt/4}`
/// underflow, so sign changes stay visible at any height.
pub fn xi_critical_scaled<T: Real>(t: T, cfg: &EvalConfig<T>) -> Result<T> {
    let half = T::one() / (T::one() + T::one());
    let s = Complex::new(half, t);
    let pre = ln_prefactor(s)?;
    let phase = Complex::new(T::zero(), pre.im).exp();
    Ok((phase * zeta(s, cfg)?).re)
}
