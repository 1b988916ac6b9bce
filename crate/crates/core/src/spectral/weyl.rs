use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::measure::spectral_counting;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::strings::GeneralizedFractalString;
use crate::zeta::{zeta, EvalConfig};

/// Data of the direct spectral asymptotics `N_ν(x) = W(x) - c_D x^D + o(x^D)`.
///
/// `W(x) = weyl_factor · |Ω| · x`. With normalized frequencies `k / l_j` direct
/// counting gives `weyl_factor = 1`; pass `1/(2π)` for unnormalized ones.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeylData<T> {
    pub omega_length: T,
    pub weyl_factor: T,
    pub dimension: T,
    /// `2^{-(1-D)} (1-D) (-ζ(D)) M`
    pub c_d: T,
    pub minkowski: T,
}

impl<T: Real> WeylData<T> {
    pub fn new(omega_length: T, dimension: T, minkowski: T, cfg: &EvalConfig<T>) -> Result<Self> {
        if !(dimension > T::zero() && dimension < T::one()) {
            return Err(Error::Precondition("Weyl data needs 0 < D < 1".into()));
        }
        if !(omega_length > T::zero() && minkowski > T::zero()) {
            return Err(Error::Precondition("|Ω| and M must be positive".into()));
        }
        let zeta_d = zeta(Complex::new(dimension, T::zero()), cfg)?.re;
        let one_minus = T::one() - dimension;
        let c_d = lit::<T>(2.0).powf(-one_minus) * one_minus * (-zeta_d) * minkowski;
        Ok(Self {
            omega_length,
            weyl_factor: T::one(),
            dimension,
            c_d,
            minkowski,
        })
    }

    pub fn with_weyl_factor(mut self, factor: T) -> Self {
        self.weyl_factor = factor;
        self
    }

    pub fn weyl_term(&self, x: T) -> T {
        self.weyl_factor * self.omega_length * x
    }
}

/// `(x, (W(x) - N_ν(x)) / x^D)` on the given grid.
pub fn weyl_remainder_profile<T: Real>(
    eta: &GeneralizedFractalString<T>,
    x_grid: &[T],
    weyl: &WeylData<T>,
) -> Result<Vec<(T, T)>> {
    x_grid
        .iter()
        .map(|&x| {
            let n = spectral_counting(eta, x)?;
            Ok((x, (weyl.weyl_term(x) - n) / x.powf(weyl.dimension)))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileSummary<T> {
    pub mean: T,
    pub min: T,
    pub max: T,
}

impl<T: Real> ProfileSummary<T> {
    /// `(max - min) / |mean|`
    pub fn relative_spread(&self) -> T {
        (self.max - self.min) / self.mean.abs()
    }
}

/// Mean, min and max of the profile over its top decade of `x`.
pub fn summarize_top_decade<T: Real>(profile: &[(T, T)]) -> Option<ProfileSummary<T>> {
    let top = profile.iter().map(|p| p.0).fold(T::neg_infinity(), T::max);
    let vals: Vec<T> = profile.iter().filter(|p| p.0 >= top / lit(10.0)).map(|p| p.1).collect();
    if vals.is_empty() {
        return None;
    }
    let mean = vals.iter().cloned().sum::<T>() / lit(vals.len() as f64);
    let min = vals.iter().cloned().fold(T::infinity(), T::min);
    let max = vals.iter().cloned().fold(T::neg_infinity(), T::max);
    Some(ProfileSummary { mean, min, max })
}

/// `n` log-spaced points from `lo` to `hi`.
pub fn log_grid<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    if n < 2 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * lit(i as f64 / (n - 1) as f64)).exp())
        .collect()
}
