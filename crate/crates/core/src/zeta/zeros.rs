use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::config::EvalConfig;
use super::riemann::zeta;
use super::xi::xi_critical_scaled;
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use num_complex::Complex;

/// A sign change of `t ↦ ξ(1/2 + it)`, refined by bisection.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroBracket<T> {
    pub t_low: T,
    pub t_high: T,
    pub refined_t: T,
    /// `|ζ(1/2 + i·refined_t)|`
    pub residual: T,
}

/// Final bracket width.
pub const BISECTION_WIDTH: f64 = 1e-8;

/// Points `a, a+h, …` up to and including `b`.
pub(crate) fn scan_grid<T: Real>(a: T, b: T, h: T) -> Vec<T> {
    let n = ((b - a) / h).floor().to_usize().unwrap_or(0);
    let mut pts: Vec<T> = (0..=n).map(|i| a + h * lit::<T>(i as f64)).collect();
    let last = *pts.last().unwrap();
    if b - last > h * lit(1e-9) {
        pts.push(b);
    } else if let Some(l) = pts.last_mut() {
        *l = b;
    }
    pts
}

/// Every sign change of `ξ(1/2+it)` on `[t_min, t_max]` at resolution
/// `cfg.line_grid_step`.
///
/// Two zeros closer than one grid step cancel out and go unreported; the
/// default step 0.05 is well below the zero spacing at the heights this crate
/// targets.
pub fn find_critical_zeros<T: Real>(t_min: T, t_max: T, cfg: &EvalConfig<T>) -> Result<Vec<ZeroBracket<T>>> {
    cfg.validate()?;
    if !(t_min >= T::zero() && t_min < t_max) {
        return Err(Error::Precondition("require 0 <= t_min < t_max".into()));
    }
    let grid = scan_grid(t_min, t_max, cfg.line_grid_step);
    let values: Vec<T> = grid
        .par_iter()
        .map(|&t| xi_critical_scaled(t, cfg))
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for i in 0..grid.len() - 1 {
        let (fa, fb) = (values[i], values[i + 1]);
        if fa == T::zero() {
            // exact grid hit: report a degenerate-free bracket around it
            let t = grid[i];
            let h = cfg.line_grid_step * lit(1e-9);
            if i == 0 || values[i - 1] != T::zero() {
                let residual = zeta(Complex::new(lit(0.5), t), cfg)?.norm();
                out.push(ZeroBracket {
                    t_low: t - h,
                    t_high: t + h,
                    refined_t: t,
                    residual,
                });
            }
            continue;
        }
        if fa * fb < T::zero() {
            out.push(refine(grid[i], grid[i + 1], fa, cfg)?);
        }
    }
    Ok(out)
}

fn refine<T: Real>(lo: T, hi: T, f_lo: T, cfg: &EvalConfig<T>) -> Result<ZeroBracket<T>> {
    let (mut a, mut b, mut fa) = (lo, hi, f_lo);
    let width = lit::<T>(BISECTION_WIDTH);
    while b - a > width {
        let m = (a + b) / lit(2.0);
        if m <= a || m >= b {
            break;
        }
        let fm = xi_critical_scaled(m, cfg)?;
        if fm == T::zero() {
            a = m;
            b = m;
            break;
        }
        if (fa < T::zero()) == (fm < T::zero()) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    let refined_t = (a + b) / lit(2.0);
    let residual = zeta(Complex::new(lit(0.5), refined_t), cfg)?.norm();
    Ok(ZeroBracket {
        t_low: lo,
        t_high: hi,
        refined_t,
        residual,
    })
}
