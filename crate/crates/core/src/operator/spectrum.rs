use std::io::{self, Write};

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::zeta::{line_modulus_extrema, scan_grid, zeta, EvalConfig};

/// `{ζ(c+iτ) : T0 <= |τ| <= T}` sampled at `step`, ascending in `τ`.
///
/// The spectrum of the truncated operator is taken from the identity
/// `σ(a^(T0,T)) = ζ(c + i[±T0, ±T])` rather than from a discretized operator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumCurve<T> {
    pub c: T,
    pub t0: T,
    pub t: T,
    pub step: T,
    pub tau: Vec<T>,
    pub points: Vec<Complex<T>>,
    /// Refined minimum of `|ζ|` on the segment, at or below every sampled modulus.
    pub min_mod: T,
    pub argmin: T,
}

pub fn truncated_spectrum<T: Real>(c: T, t0: T, t: T, step: T, cfg: &EvalConfig<T>) -> Result<SpectrumCurve<T>> {
    if !(c >= T::zero() && t0 >= T::zero() && t >= t0 && step > T::zero()) {
        return Err(Error::Precondition("require c >= 0, 0 <= T0 <= T and step > 0".into()));
    }
    if c == T::one() && t0 == T::zero() {
        return Err(Error::PoleOnSegment);
    }
    let cfg = cfg.with_step(step);
    let upper = if t == t0 { vec![t0] } else { scan_grid(t0, t, step) };
    let values = upper
        .par_iter()
        .map(|&tau| zeta(Complex::new(c, tau), &cfg))
        .collect::<Result<Vec<_>>>()?;

    let skip = usize::from(t0 == T::zero());
    let mut tau: Vec<T> = upper.iter().skip(skip).rev().map(|x| -*x).collect();
    let mut points: Vec<Complex<T>> = values.iter().skip(skip).rev().map(|z| z.conj()).collect();
    tau.extend(upper.iter().cloned());
    points.extend(values.iter().cloned());

    let (min_mod, argmin) = if t == t0 {
        (values[0].norm(), t0)
    } else {
        let ext = line_modulus_extrema(c, t0, t, &cfg)?;
        (ext.min_mod, ext.argmin)
    };
    Ok(SpectrumCurve {
        c,
        t0,
        t,
        step,
        tau,
        points,
        min_mod,
        argmin,
    })
}

impl<T: Real> SpectrumCurve<T> {
    /// Smallest modulus among the sampled points only.
    pub fn sampled_min(&self) -> T {
        self.points.iter().map(|z| z.norm()).fold(T::infinity(), T::min)
    }

    pub fn sampled_max(&self) -> T {
        self.points.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "# fracspec spectrum csv v1 c={} T0={} T={} step={}",
            self.c, self.t0, self.t, self.step
        )?;
        writeln!(out, "tau,re,im,modulus")?;
        for (tau, z) in self.tau.iter().zip(&self.points) {
            writeln!(out, "{},{},{},{}", tau, z.re, z.im, z.norm())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_segment() {
        let cfg = EvalConfig::default();
        let s = truncated_spectrum(2.0f64, 0.0, 0.0, 0.1, &cfg).unwrap();
        assert_eq!(s.points.len(), 1);
        assert!((s.points[0].re - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
    }

    #[test]
    fn symmetric_layout() {
        let cfg = EvalConfig::default();
        let s = truncated_spectrum(2.0f64, 0.0, 1.0, 0.25, &cfg).unwrap();
        assert_eq!(s.tau, vec![-1.0, -0.75, -0.5, -0.25, 0.0, 0.25, 0.5, 0.75, 1.0]);
        assert_eq!(s.points[0], s.points[8].conj());
        let g = truncated_spectrum(2.0f64, 0.5, 1.0, 0.25, &cfg).unwrap();
        assert_eq!(g.tau, vec![-1.0, -0.75, -0.5, 0.5, 0.75, 1.0]);
    }

    #[test]
    fn passes_near_first_zero() {
        let cfg = EvalConfig::default();
        let s = truncated_spectrum(0.5f64, 0.0, 15.0, 0.01, &cfg).unwrap();
        assert!(s.min_mod < 1e-3);
        assert!((s.argmin - 14.134_725).abs() < 1e-3);
        assert!(s.points.iter().all(|z| z.norm() >= s.min_mod));
    }

    #[test]
    fn euler_product_lower_bound() {
        // |ζ(2+iτ)| >= ζ(4)/ζ(2)
        let cfg = EvalConfig::default();
        let s = truncated_spectrum(2.0f64, 0.0, 50.0, 0.05, &cfg).unwrap();
        assert!(s.min_mod >= 0.657, "{}", s.min_mod);
        assert!(s.sampled_max() <= std::f64::consts::PI.powi(2) / 6.0 + 1e-12);
    }

    #[test]
    fn pole_guard_and_csv() {
        let cfg = EvalConfig::default();
        assert_eq!(
            truncated_spectrum(1.0f64, 0.0, 5.0, 0.1, &cfg).unwrap_err(),
            Error::PoleOnSegment
        );
        assert!(truncated_spectrum(1.0f64, 0.5, 5.0, 0.1, &cfg).is_ok());
        let s = truncated_spectrum(2.0f64, 0.0, 0.5, 0.5, &cfg).unwrap();
        let mut buf = Vec::new();
        s.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# fracspec spectrum csv v1"));
        assert_eq!(lines[1], "tau,re,im,modulus");
        assert_eq!(lines.len(), 5);
    }
}
