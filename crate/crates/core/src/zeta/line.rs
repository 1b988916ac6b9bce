use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::EvalConfig;
use super::riemann::zeta;
use super::zeros::scan_grid;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LineExtrema<T> {
    pub min_mod: T,
    pub argmin: T,
    pub max_mod: T,
    pub argmax: T,
}

const GOLDEN_ITERATIONS: usize = 40;

fn modulus<T: Real>(c: T, tau: T, cfg: &EvalConfig<T>) -> Result<T> {
    Ok(zeta(Complex::new(c, tau), cfg)?.norm())
}

/// `|ζ(c+iτ)|` sampled on `[lo, hi]` in ascending order.
pub fn line_modulus_profile<T: Real>(c: T, lo: T, hi: T, cfg: &EvalConfig<T>) -> Result<(Vec<T>, Vec<T>)> {
    let taus = scan_grid(lo, hi, cfg.line_grid_step);
    let mods = taus
        .par_iter()
        .map(|&t| modulus(c, t, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok((taus, mods))
}

/// Extrema of `|ζ(c+iτ)|` over `τ ∈ [tau_min, tau_max]`: grid scan followed by
/// golden-section refinement around the best grid points.
pub fn line_modulus_extrema<T: Real>(c: T, tau_min: T, tau_max: T, cfg: &EvalConfig<T>) -> Result<LineExtrema<T>> {
    cfg.validate()?;
    if c < T::zero() || tau_min > tau_max {
        return Err(Error::Precondition("require c >= 0 and tau_min <= tau_max".into()));
    }
    if c == T::one() && tau_min <= T::zero() && tau_max >= T::zero() {
        return Err(Error::PoleOnSegment);
    }
    let (taus, mods) = line_modulus_profile(c, tau_min, tau_max, cfg)?;
    // first occurrence in ascending τ wins ties
    let (mut imin, mut imax) = (0, 0);
    for (i, m) in mods.iter().enumerate() {
        if *m < mods[imin] {
            imin = i;
        }
        if *m > mods[imax] {
            imax = i;
        }
    }
    let bracket = |i: usize| {
        let lo = if i == 0 { taus[0] } else { taus[i - 1] };
        let hi = if i + 1 == taus.len() { taus[i] } else { taus[i + 1] };
        (lo, hi)
    };
    let (lo, hi) = bracket(imin);
    let (argmin, min_mod) = golden(lo, hi, (taus[imin], mods[imin]), |t| modulus(c, t, cfg), false)?;
    let (lo, hi) = bracket(imax);
    let (argmax, max_mod) = golden(lo, hi, (taus[imax], mods[imax]), |t| modulus(c, t, cfg), true)?;
    Ok(LineExtrema {
        min_mod,
        argmin,
        max_mod,
        argmax,
    })
}

fn golden<T: Real, F>(lo: T, hi: T, seed: (T, T), f: F, maximize: bool) -> Result<(T, T)>
where
    F: Fn(T) -> Result<T>,
{
    if hi <= lo {
        return Ok(seed);
    }
    let better = |a: T, b: T| if maximize { a > b } else { a < b };
    let inv_phi = lit::<T>((5.0_f64.sqrt() - 1.0) / 2.0);
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let (mut f1, mut f2) = (f(x1)?, f(x2)?);
    let mut best = seed;
    for _ in 0..GOLDEN_ITERATIONS {
        if better(f1, f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2)?;
        }
        for (x, v) in [(x1, f1), (x2, f2)] {
            if better(v, best.1) {
                best = (x, v);
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_of_the_pole_line_is_bounded_below() {
        let e = line_modulus_extrema(2.0, 0.0, 50.0, &EvalConfig::default()).unwrap();
        let oracle = std::f64::consts::PI.powi(2) / 15.0; // ζ(4)/ζ(2)
        assert!(e.min_mod >= oracle);
        assert!(e.min_mod >= 0.657);
        assert!((e.max_mod - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
        assert_eq!(e.argmax, 0.0);
    }

    #[test]
    fn critical_line_minimum_is_the_first_zero() {
        let e = line_modulus_extrema(0.5f64, 0.0, 15.0, &EvalConfig::default()).unwrap();
        assert!(e.min_mod < 1e-3);
        assert!((e.argmin - 14.134_725).abs() < 1e-3);
    }

    #[test]
    fn degenerate_segment() {
        let e = line_modulus_extrema(2.0f64, 0.0, 0.0, &EvalConfig::default()).unwrap();
        assert_eq!(e.min_mod, e.max_mod);
        assert!((e.min_mod - 1.644_934_066_848_226_4).abs() < 1e-12);
    }

    #[test]
    fn pole_guard() {
        let cfg = EvalConfig::default();
        assert_eq!(line_modulus_extrema(1.0, -1.0, 1.0, &cfg), Err(Error::PoleOnSegment));
        assert!(line_modulus_extrema(1.0, 1.0, 3.0, &cfg).is_ok());
    }
}
