use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::strings::{GeneralizedFractalString, POSITION_TOLERANCE};
use crate::zeta::{zeta, EvalConfig};

/// `ν = η * h` restricted to frequencies `<= cutoff`: atoms `k·x_j` carrying
/// the summed masses of every `(k, j)` that lands there.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMeasure<T> {
    pub underlying: GeneralizedFractalString<T>,
    pub cutoff: T,
}

fn k_limit<T: Real>(x: T, atom: T) -> usize {
    // largest k with k·atom <= x, tolerant to rounding at exact hits
    let q = x / atom * (T::one() + lit(POSITION_TOLERANCE));
    q.floor().to_usize().unwrap_or(0)
}

/// Enumerates the frequencies `k·x_j <= cutoff`, merging coincident positions.
pub fn spectral_measure<T: Real>(eta: &GeneralizedFractalString<T>, cutoff: T) -> Result<SpectralMeasure<T>> {
    let floor = eta
        .atoms()
        .first()
        .map(|a| a.position)
        .unwrap_or_else(|| eta.support_floor());
    if cutoff < floor {
        return Err(Error::Precondition("cutoff lies below the smallest atom".into()));
    }
    let mut pairs = Vec::new();
    for a in eta.atoms() {
        for k in 1..=k_limit(cutoff, a.position) {
            pairs.push((a.position * lit(k as f64), a.mass));
        }
    }
    let mut underlying = GeneralizedFractalString::from_pairs(&pairs)?;
    if underlying.is_empty() {
        underlying = GeneralizedFractalString::new(vec![], eta.support_floor())?;
    }
    Ok(SpectralMeasure { underlying, cutoff })
}

/// `N_ν(x) = Σ_k N_η(x/k)`; only `k <= x/x₀` contribute.
pub fn spectral_counting<T: Real>(eta: &GeneralizedFractalString<T>, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Precondition("spectral counting needs x > 0".into()));
    }
    let kmax = k_limit(x, eta.support_floor());
    Ok((1..=kmax).map(|k| eta.counting(x / lit(k as f64))).sum())
}

/// Both sides of `ζ_ν(s) = ζ_η(s) ζ(s)` and the bound their gap must respect.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaFactorizationCheck<T> {
    pub lhs: Complex<T>,
    pub rhs: Complex<T>,
    pub gap: T,
    /// Frequencies above the cutoff: `Σ_j |w_j| x_j^{-σ} Σ_{k > F/x_j} k^{-σ}`
    /// plus rounding and ζ-evaluation slack.
    pub bound: T,
}

impl<T: Real> ZetaFactorizationCheck<T> {
    pub fn within_bound(&self) -> bool {
        self.gap <= self.bound
    }
}

/// `Σ_{k > K} k^{-σ}` bounded by the integral test (σ > 1).
fn harmonic_tail_bound<T: Real>(k: usize, sigma: T) -> T {
    let s1 = sigma - T::one();
    if k == 0 {
        T::one() + T::one() / s1
    } else {
        lit::<T>(k as f64).powf(-s1) / s1
    }
}

/// Checks the factorization in the region `Re s > 1` where both series converge.
pub fn spectral_zeta_check<T: Real>(
    eta: &GeneralizedFractalString<T>,
    s: Complex<T>,
    cutoff: T,
    cfg: &EvalConfig<T>,
) -> Result<ZetaFactorizationCheck<T>> {
    if !(s.re > T::one()) {
        return Err(Error::Precondition(
            "factorization is checked for Re(s) > 1 only".into(),
        ));
    }
    let nu = spectral_measure(eta, cutoff)?;
    let lhs = nu.underlying.geometric_zeta(s);
    let geometric = eta.geometric_zeta(s);
    let rhs = geometric * zeta(s, cfg)?;

    let sigma = s.re;
    let mut tail = T::zero();
    let mut magnitude = T::zero();
    for a in eta.atoms() {
        let weight = a.mass.abs() * a.position.powf(-sigma);
        tail += weight * harmonic_tail_bound(k_limit(cutoff, a.position), sigma);
        magnitude += weight;
    }
    let terms = lit::<T>((nu.underlying.len() + eta.len()) as f64);
    let zeta_bound = T::one() + T::one() / (sigma - T::one());
    let rounding = T::epsilon() * terms * (magnitude * zeta_bound + lhs.norm() + rhs.norm());
    let bound = tail + rounding + cfg.target_abs_error * geometric.norm();
    Ok(ZetaFactorizationCheck {
        lhs,
        rhs,
        gap: (lhs - rhs).norm(),
        bound,
    })
}
