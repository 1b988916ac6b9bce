use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::dirichlet::{DirichletOperator, MAX_OPERATOR_TERMS};
use super::signal::{Grid, SampledFunction, Signal, Support, ALIGN_TOLERANCE};
use crate::error::{Error, Result};
use crate::quad::simpson;
use crate::scalar::{lit, Real};
use crate::zeta::{zeta, EvalConfig};

fn support_range<T: Real>(f: &SampledFunction<T>) -> Option<(usize, usize)> {
    let tol = lit::<T>(ALIGN_TOLERANCE) * f.grid.step;
    let inside = |t: T| t >= f.support.lo - tol && t <= f.support.hi + tol;
    let first = (0..f.len()).find(|&i| inside(f.grid.t(i)))?;
    let last = (first..f.len()).take_while(|&i| inside(f.grid.t(i))).last()?;
    Some((first, last))
}

/// `∫ |f(t)|² e^{-2ct} dt` over the sampled part of the support, composite Simpson.
pub fn weighted_norm_squared<T: Real>(f: &SampledFunction<T>) -> T {
    let Some((a, b)) = support_range(f) else {
        return T::zero();
    };
    let two_c = lit::<T>(2.0) * f.weight;
    let integrand: Vec<T> = (a..=b)
        .map(|i| f.values[i] * f.values[i] * (-two_c * f.grid.t(i)).exp())
        .collect();
    simpson(&integrand, f.grid.step)
}

/// `‖f‖_c`. The step must resolve `f`; the error is `O(step⁴)` for smooth `f`.
pub fn weighted_norm<T: Real>(f: &SampledFunction<T>) -> T {
    weighted_norm_squared(f).sqrt()
}

/// `(e^{-dt·∂} f)(u) = f(u - dt)`.
///
/// A shift by a whole number of steps moves the grid index and keeps the
/// values bitwise; any other shift resamples by linear interpolation and sets
/// `interpolated`.
pub fn shift<T: Real>(f: &SampledFunction<T>, dt: T) -> SampledFunction<T> {
    if let Some(m) = f.grid.aligned_offset(dt) {
        let mut out = f.clone();
        out.grid.start += m;
        out.support = f.support.shifted(dt);
        return out;
    }
    let grid = Grid::covering(f.grid.t_min() + dt, f.grid.t_max() + dt, f.grid.step).expect("finite shift");
    let values = grid.nodes().map(|t| f.value(t - dt)).collect();
    SampledFunction {
        grid,
        values,
        weight: f.weight,
        support: f.support.shifted(dt),
        interpolated: true,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormBound<T> {
    /// `‖a(f)‖_c`, truncated part and certified tail combined
    pub lhs: T,
    /// `ζ(c) ‖f‖_c`
    pub rhs: T,
    pub ok: bool,
    pub truncated_at: T,
    pub tail_bound: T,
}

/// Upper bound on `∫_{t1}^∞ |a(f)|² e^{-2ct}` for `|f| <= amp` supported in
/// `[a, ∞)`, using `|a(f)(t)| <= amp (e^{t-a} + 1)`.
fn tail_bound<T: Real>(amp: T, a: T, c: T, t1: T) -> T {
    let two = lit::<T>(2.0);
    let e2 = (two * (T::one() - c) * t1 - two * a).exp() / (two * c - two);
    let e1 = two * ((T::one() - two * c) * t1 - a).exp() / (two * c - T::one());
    let e0 = (-two * c * t1).exp() / (two * c);
    amp * amp * (e2 + e1 + e0)
}

/// Checks `‖a(f)‖_c <= ζ(c)‖f‖_c · (1 + 1e-6)` for compactly supported `f`.
///
/// `a(f)` is integrated on `f`'s grid up to a cut `t1` chosen so that the
/// certified tail beyond it is at most `1e-3 · rhs²`.
pub fn norm_bound_check<T: Real>(f: &SampledFunction<T>, cfg: &EvalConfig<T>) -> Result<NormBound<T>> {
    let c = f.weight;
    if !(c > T::one()) {
        return Err(Error::Precondition("the norm bound needs c > 1".into()));
    }
    let Support { lo: a, hi: b } = f.support;
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::UnboundedTail);
    }
    let rhs = zeta(Complex::new(c, T::zero()), cfg)?.re * weighted_norm(f);
    let amp = f.max_abs();
    let target = lit::<T>(1e-3) * rhs * rhs;
    let mut t1 = b.max(f.grid.t_min());
    let mut tail = tail_bound(amp, a, c, t1);
    while tail > target {
        t1 += lit(0.5);
        if t1 - a > lit::<T>(MAX_OPERATOR_TERMS as f64).ln() {
            return Err(Error::Precondition(
                "tail bound does not close within the term budget".into(),
            ));
        }
        tail = tail_bound(amp, a, c, t1);
    }
    let grid = Grid::covering(a, t1, f.grid.step)?;
    let n = (t1 - a).exp().floor().to_u64().unwrap() + 1;
    let op = DirichletOperator::spectral(n);
    let af = SampledFunction::sample(&op.apply(f), grid, Support::new(a, t1))?;
    let truncated = weighted_norm_squared(&af);
    let lhs = (truncated + tail).sqrt();
    Ok(NormBound {
        lhs,
        rhs,
        ok: lhs <= rhs * lit(1.0 + 1e-6),
        truncated_at: t1,
        tail_bound: tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bump(a: f64, w: f64, step: f64, c: f64) -> SampledFunction<f64> {
        SampledFunction::from_fn(a, a + w, step, c, Support::new(a, a + w), |t| {
            (std::f64::consts::PI * (t - a) / w).sin().powi(2)
        })
        .unwrap()
    }

    #[test]
    fn indicator_norms() {
        let f = SampledFunction::indicator(0.0f64, 1.0, 1e-3, 0.0).unwrap();
        assert!((weighted_norm(&f) - 1.0).abs() < 1e-12);
        let g = SampledFunction::indicator(0.0f64, 1.0, 1e-3, 0.5).unwrap();
        let exact = 1.0 - (-1.0f64).exp();
        assert!((weighted_norm_squared(&g) - exact).abs() < 1e-12);
        assert!((weighted_norm(&g) - exact.sqrt()).abs() < 1e-12);
        assert_eq!(
            weighted_norm(&SampledFunction::zero(0.0f64, 1.0, 0.1, 1.0).unwrap()),
            0.0
        );
    }

    #[test]
    fn shift_by_zero_is_identity() {
        let f = bump(0.3, 1.0, 1e-3, 1.0);
        assert_eq!(shift(&f, 0.0), f);
    }

    #[test]
    fn aligned_semigroup_is_bitwise() {
        let f = bump(0.0, 1.0, 1e-3, 0.7);
        let (a, b) = (0.25, 1.375);
        let lhs = shift(&shift(&f, a), b);
        let rhs = shift(&f, a + b);
        assert_eq!(lhs.values, rhs.values);
        assert_eq!(lhs.grid, rhs.grid);
        assert!(!lhs.interpolated);
    }

    #[test]
    fn shift_scales_norm() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let c = rng.gen_range(0.0..2.0);
            let f = bump(rng.gen_range(-1.0..1.0), rng.gen_range(1.0..4.0), 2.5e-4, c);
            let t = rng.gen_range(-3.0..3.0);
            let g = shift(&f, t);
            let ratio = weighted_norm(&g) / weighted_norm(&f);
            assert!((ratio / (-t * c).exp() - 1.0).abs() < 1e-6, "c={c} t={t}");
        }
    }

    #[test]
    fn unaligned_shift_is_flagged() {
        let f = bump(0.0, 1.0, 1e-2, 1.0);
        let g = shift(&f, 0.123_4);
        assert!(g.interpolated);
        assert!((g.value(0.6234) - f.value(0.5)).abs() < 1e-3);
    }

    #[test]
    fn norm_bound_indicator() {
        let cfg = EvalConfig::default();
        let f = SampledFunction::indicator(0.0f64, 1.0, 1e-3, 2.0).unwrap();
        let r = norm_bound_check(&f, &cfg).unwrap();
        assert!(r.ok, "{r:?}");
        assert!(r.tail_bound <= 1e-3 * r.rhs * r.rhs);
        let z = SampledFunction::zero(0.0f64, 1.0, 1e-2, 2.0).unwrap();
        let r = norm_bound_check(&z, &cfg).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ok), (0.0, 0.0, true));
    }

    #[test]
    fn norm_bound_is_not_vacuous() {
        // a wide bump has its transform near τ = 0, where |ζ(c+iτ)| ≈ ζ(c)
        let cfg = EvalConfig::default();
        let r = norm_bound_check(&bump(0.0, 6.0, 1e-2, 2.0), &cfg).unwrap();
        assert!(r.ok);
        assert!(r.lhs > 0.8 * r.rhs, "{r:?}");
    }

    #[test]
    fn norm_bound_rejects_small_c() {
        let cfg = EvalConfig::default();
        let f = bump(0.0, 1.0, 1e-2, 1.0);
        assert!(matches!(norm_bound_check(&f, &cfg), Err(Error::Precondition(_))));
    }
}
