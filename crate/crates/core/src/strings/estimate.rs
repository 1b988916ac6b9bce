use serde::{Deserialize, Serialize};

use super::string::GeneralizedFractalString;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Fewest atoms for which the tail fit is attempted.
pub const MIN_ATOMS_FOR_ESTIMATE: usize = 16;

/// Relative spread of `N(x)/x^D` over the top decade above which the string is
/// reported as not Minkowski measurable.
pub const MEASURABILITY_SPREAD: f64 = 0.05;

const DECADE_PROBES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StringStats<T> {
    pub dimension: T,
    pub total_mass: T,
    pub minkowski_content: Option<T>,
}

/// Atoms in the top decade of positions (at least the last two).
fn top_decade<T: Real>(eta: &GeneralizedFractalString<T>) -> &[super::Atom<T>] {
    let atoms = eta.atoms();
    let top = atoms.last().map(|a| a.position).unwrap_or_else(T::one);
    let start = atoms.partition_point(|a| a.position < top / lit(10.0));
    &atoms[start.min(atoms.len().saturating_sub(2))..]
}

/// Least-squares slope of `ln N_η(x)` against `ln x` at the atoms of the top decade.
pub fn dimension_estimate<T: Real>(eta: &GeneralizedFractalString<T>) -> Result<T> {
    if eta.len() < MIN_ATOMS_FOR_ESTIMATE {
        return Err(Error::InsufficientAtoms {
            found: eta.len(),
            required: MIN_ATOMS_FOR_ESTIMATE,
        });
    }
    let pts: Vec<(T, T)> = top_decade(eta)
        .iter()
        .map(|a| (a.position.ln(), eta.counting(a.position)))
        .filter(|(_, n)| *n > T::zero())
        .map(|(lx, n)| (lx, n.ln()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::InsufficientAtoms {
            found: pts.len(),
            required: 2,
        });
    }
    let n = lit::<T>(pts.len() as f64);
    let mx = pts.iter().map(|p| p.0).sum::<T>() / n;
    let my = pts.iter().map(|p| p.1).sum::<T>() / n;
    let sxy: T = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: T = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Ok(sxy / sxx)
}

/// Minkowski content from the counting asymptotics `N_η(x) ~ C x^D`:
/// `M = 2^{1-D} C / (1-D)`. `None` when `N/x^D` does not settle over the top
/// decade (lattice strings) or `D` is outside `(0, 1)`.
pub fn minkowski_content_estimate<T: Real>(eta: &GeneralizedFractalString<T>, dimension: T) -> Option<T> {
    if !(dimension > T::zero() && dimension < T::one()) || eta.len() < 2 {
        return None;
    }
    // log-spaced probes so every phase of a lattice staircase is seen
    let top = eta.atoms().last()?.position;
    let ratios: Vec<T> = (0..=DECADE_PROBES)
        .map(|i| top * lit::<T>(10f64.powf(-(i as f64) / DECADE_PROBES as f64)))
        .map(|x| eta.counting(x) / x.powf(dimension))
        .collect();
    let mean = ratios.iter().cloned().sum::<T>() / lit(ratios.len() as f64);
    let (lo, hi) = ratios.iter().fold((T::infinity(), T::neg_infinity()), |(lo, hi), r| {
        (lo.min(*r), hi.max(*r))
    });
    if !(mean > T::zero()) || (hi - lo) / mean > lit(MEASURABILITY_SPREAD) {
        return None;
    }
    let two = lit::<T>(2.0);
    Some(two.powf(T::one() - dimension) * mean / (T::one() - dimension))
}

/// Minkowski ratio `V(ε) / ε^{1-D}` at a single ε, from the tube volume.
pub fn minkowski_ratio<T: Real>(eta: &GeneralizedFractalString<T>, dimension: T, epsilon: T) -> T {
    eta.tube_volume(epsilon) / epsilon.powf(T::one() - dimension)
}

pub fn string_stats<T: Real>(eta: &GeneralizedFractalString<T>) -> Result<StringStats<T>> {
    let dimension = dimension_estimate(eta)?;
    Ok(StringStats {
        dimension,
        total_mass: eta.total_mass(),
        minkowski_content: minkowski_content_estimate(eta, dimension),
    })
}
