use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::zeta::{find_critical_zeros, line_modulus_extrema, scan_grid, zeta, EvalConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "yes")]
    Yes,
    #[serde(rename = "no")]
    No,
    #[serde(rename = "undetermined-up-to-T")]
    UndeterminedUpToT,
}

/// How far past `T_max` an almost-invertibility check at `c = 1/2` looks for
/// a witness zero.
pub const WITNESS_SEARCH_SPAN: f64 = 500.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseReport<T> {
    pub c: T,
    pub t0: T,
    pub t_max: T,
    pub sup_mod: T,
    pub argmax: T,
    pub min_mod: T,
    pub argmin: T,
    pub zero_found: bool,
    pub verdict: Verdict,
    pub notes: Vec<String>,
    /// Refined critical zeros found, `c = 1/2` only.
    pub zeros: Vec<T>,
    /// `sup |ζ|` over `[0, 2T]` (scans only)
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sup_mod_doubled: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sup_grows: Option<bool>,
    /// Fraction of the disc `|z| <= 3` hit by the sampled image (scans only)
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub density: Option<T>,
}

fn check_line<T: Real>(c: T, t0: T, t_max: T) -> Result<()> {
    if c == T::one() {
        return Err(Error::PoleLine);
    }
    if !(c >= T::zero() && t0 >= T::zero() && t_max > t0) {
        return Err(Error::Precondition("require c >= 0 and 0 <= T0 < T_max".into()));
    }
    Ok(())
}

fn is_critical<T: Real>(c: T) -> bool {
    c == lit(0.5)
}

fn base_report<T: Real>(c: T, t0: T, t_max: T, cfg: &EvalConfig<T>) -> Result<PhaseReport<T>> {
    check_line(c, t0, t_max)?;
    let ext = line_modulus_extrema(c, t0, t_max, cfg)?;
    let mut r = PhaseReport {
        c,
        t0,
        t_max,
        sup_mod: ext.max_mod,
        argmax: ext.argmax,
        min_mod: ext.min_mod,
        argmin: ext.argmin,
        zero_found: false,
        verdict: Verdict::UndeterminedUpToT,
        notes: vec![],
        zeros: vec![],
        sup_mod_doubled: None,
        sup_grows: None,
        density: None,
    };
    if c > T::one() {
        r.verdict = Verdict::Yes;
        r.notes
            .push("ζ has no zeros for Re s > 1 (Euler product), so every truncation is invertible".into());
    } else if is_critical(c) {
        let zeros = find_critical_zeros(t0, t_max, cfg)?;
        record_zeros(
            &mut r,
            &zeros.iter().map(|z| (z.refined_t, z.residual)).collect::<Vec<_>>(),
        );
    } else {
        r.notes.push(format!(
            "no zero seen on [{t0}, {t_max}]; a verdict for all T off the critical line is equivalent to RH"
        ));
    }
    Ok(r)
}

fn record_zeros<T: Real>(r: &mut PhaseReport<T>, zeros: &[(T, T)]) {
    if zeros.is_empty() {
        r.notes.push(format!("no sign change of ξ on [{}, {}]", r.t0, r.t_max));
        return;
    }
    r.zero_found = true;
    r.verdict = Verdict::No;
    r.zeros = zeros.iter().map(|z| z.0).collect();
    for &(t, res) in zeros {
        if res < r.min_mod {
            r.min_mod = res;
            r.argmin = t;
        }
    }
}

/// Invertibility of every truncation `a^(T)`, `T <= T_max`, on the line `Re = c`.
pub fn quasi_invertibility_verdict<T: Real>(c: T, t_max: T, cfg: &EvalConfig<T>) -> Result<PhaseReport<T>> {
    base_report(c, T::zero(), t_max, cfg)
}

/// Invertibility of `a^(T0,T)` for all `T >= T0`.
///
/// At `c = 1/2` a zero anywhere above `T0` rules this out, so when
/// `[T0, T_max]` is zero-free the search continues past `T_max` (there are
/// infinitely many critical zeros) for up to [`WITNESS_SEARCH_SPAN`].
pub fn almost_invertibility_verdict<T: Real>(c: T, t0: T, t_max: T, cfg: &EvalConfig<T>) -> Result<PhaseReport<T>> {
    let mut r = base_report(c, t0, t_max, cfg)?;
    if is_critical(c) && !r.zero_found {
        let limit = t_max + lit(WITNESS_SEARCH_SPAN);
        let mut lo = t_max;
        while lo < limit {
            let hi = (lo + lit(20.0)).min(limit);
            if let Some(z) = find_critical_zeros(lo, hi, cfg)?.first() {
                r.notes.push(format!("witness zero at τ = {} above T_max", z.refined_t));
                record_zeros(&mut r, &[(z.refined_t, z.residual)]);
                break;
            }
            lo = hi;
        }
    }
    Ok(r)
}

const DENSITY_CELLS: usize = 20;
const DENSITY_RADIUS: f64 = 3.0;

/// Fraction of the `20 × 20` cells of `[-3, 3]²` centred in the disc `|z| <= 3`
/// that contain at least one point.
pub fn disc_density<T: Real>(points: &[Complex<T>]) -> T {
    let r = DENSITY_RADIUS;
    let w = 2.0 * r / DENSITY_CELLS as f64;
    let mut hit = vec![false; DENSITY_CELLS * DENSITY_CELLS];
    for z in points {
        let (x, y) = (z.re.to_f64().unwrap(), z.im.to_f64().unwrap());
        if x.abs() >= r || y.abs() >= r {
            continue;
        }
        let i = ((x + r) / w) as usize;
        let j = ((y + r) / w) as usize;
        hit[i * DENSITY_CELLS + j] = true;
    }
    let (mut inside, mut count) = (0usize, 0usize);
    for i in 0..DENSITY_CELLS {
        for j in 0..DENSITY_CELLS {
            let cx = -r + w * (i as f64 + 0.5);
            let cy = -r + w * (j as f64 + 0.5);
            if cx.hypot(cy) <= r {
                inside += 1;
                count += usize::from(hit[i * DENSITY_CELLS + j]);
            }
        }
    }
    lit(count as f64 / inside as f64)
}

fn scan_one<T: Real>(c: T, t: T, cfg: &EvalConfig<T>) -> Result<PhaseReport<T>> {
    let mut r = quasi_invertibility_verdict(c, t, cfg)?;
    let doubled = line_modulus_extrema(c, T::zero(), t + t, cfg)?;
    r.sup_mod_doubled = Some(doubled.max_mod);
    r.sup_grows = Some(doubled.max_mod > r.sup_mod);
    if c < T::one() && doubled.argmax < T::one() {
        r.notes.push(format!(
            "sup over [0, 2T] is attained at τ = {} next to the pole; growth at large τ is masked by it",
            doubled.argmax
        ));
    }
    let taus = scan_grid(T::zero(), t, cfg.line_grid_step);
    let mut pts = taus
        .par_iter()
        .map(|&tau| zeta(Complex::new(c, tau), cfg))
        .collect::<Result<Vec<_>>>()?;
    let mirrored: Vec<_> = pts.iter().map(|z| z.conj()).collect();
    pts.extend(mirrored);
    r.density = Some(disc_density(&pts));
    Ok(r)
}

/// Per `c`: extrema on `[0, T]`, growth of the sup when `T` doubles, and the
/// disc density of the image. Each entry fails on its own (`c = 1` gives
/// [`Error::PoleLine`]).
pub fn phase_transition_scan<T: Real>(c_grid: &[T], t: T, cfg: &EvalConfig<T>) -> Vec<Result<PhaseReport<T>>> {
    c_grid.par_iter().map(|&c| scan_one(c, t, cfg)).collect()
}
