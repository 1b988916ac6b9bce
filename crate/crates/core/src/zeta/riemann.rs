//! Riemann ζ through the accelerated alternating (Dirichlet eta) series.
//!
//! For `Re(s) >= 0` the eta series `Σ (-1)^k (k+1)^{-s}` is summed with the
//! Borwein weights `e_k = (d_n - d_k) / d_n` and divided by `1 - 2^{1-s}`.
//! The truncation error obeys
//! `|err| <= 3 (1 + 2|t|) e^{π|t|/2} / ((3+√8)^n |1 - 2^{1-s}|)`, which fixes
//! `n` for a requested tolerance. `Re(s) < 0` goes through the functional
//! equation.

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex;

use super::config::EvalConfig;
use super::gamma::{ln_gamma, ln_sin};
use crate::error::{Error, Result};
use crate::scalar::{lit, pow_neg_from_ln, Real, SpherePoint};

/// Number of terms is rounded up to this granularity so tables get reused.
const TERM_BUCKET: usize = 32;

/// Below this `|1 - 2^{1-s}|` the quotient is replaced by a Cauchy mean over a
/// small circle (the zeros of the factor on `Re s = 1` are removable for ζ).
const FACTOR_GUARD: f64 = 0.05;
const CIRCLE_RADIUS: f64 = 0.25;
const CIRCLE_POINTS: usize = 32;

struct AccelTable<T> {
    /// `(-1)^k e_k`
    weights: Vec<T>,
    /// `ln(k+1)`
    logs: Vec<T>,
}

impl<T: Real> AccelTable<T> {
    fn build(n: usize) -> Self {
        // t_i = n (n+i-1)! 4^i / ((n-i)! (2i)!), t_0 = 1,
        // t_{i+1}/t_i = 4 (n+i)(n-i) / ((2i+1)(2i+2)); d_k = Σ_{i<=k} t_i.
        let nf = n as f64;
        let mut log_t = Vec::with_capacity(n + 1);
        let mut cur = 0.0_f64;
        log_t.push(cur);
        for i in 0..n {
            let fi = i as f64;
            cur += (4.0 * (nf + fi) * (nf - fi) / ((2.0 * fi + 1.0) * (2.0 * fi + 2.0))).ln();
            log_t.push(cur);
        }
        let peak = log_t.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let scaled: Vec<f64> = log_t.iter().map(|l| (l - peak).exp()).collect();
        let total: f64 = scaled.iter().sum();
        // suffix sums give d_n - d_k without cancellation
        let mut weights = vec![T::zero(); n];
        let mut suffix = 0.0_f64;
        for k in (0..n).rev() {
            suffix += scaled[k + 1];
            let e = suffix / total;
            weights[k] = lit(if k % 2 == 0 { e } else { -e });
        }
        let logs = (0..n).map(|k| lit::<T>(((k + 1) as f64).ln())).collect();
        Self { weights, logs }
    }
}

type TableCache = Mutex<HashMap<(TypeId, usize), Arc<dyn Any + Send + Sync>>>;

fn table<T: Real>(n: usize) -> Arc<AccelTable<T>> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (TypeId::of::<T>(), n);
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return hit.clone().downcast::<AccelTable<T>>().expect("table type matches key");
    }
    let built = Arc::new(AccelTable::<T>::build(n));
    cache.lock().unwrap().insert(key, built.clone());
    built
}

fn two_factor<T: Real>(s: Complex<T>) -> Complex<T> {
    // 1 - 2^{1-s}
    let ln2 = T::LN_2();
    Complex::new(T::one(), T::zero()) - pow_neg_from_ln(ln2, s - T::one())
}

/// Terms needed so the acceleration error stays below `target` at `s`.
pub fn required_terms<T: Real>(s: Complex<T>, target: T) -> usize {
    let t = to_f(s.im.abs());
    let denom = to_f(two_factor(s).norm()).max(1e-300);
    let base = (3.0 + 8.0_f64.sqrt()).ln();
    let num = (3.0 * (1.0 + 2.0 * t)).ln() + std::f64::consts::FRAC_PI_2 * t - to_f(target).ln() - denom.ln();
    let n = (num / base).ceil().max(1.0) as usize + 2;
    n.div_ceil(TERM_BUCKET).max(1) * TERM_BUCKET
}

fn to_f<T: Real>(x: T) -> f64 {
    crate::scalar::to_f64(x)
}

fn eta_quotient<T: Real>(s: Complex<T>, cfg: &EvalConfig<T>) -> Result<Complex<T>> {
    let n = required_terms(s, cfg.target_abs_error);
    if n > cfg.max_terms {
        return Err(Error::AccuracyNotReached {
            required: n,
            max_terms: cfg.max_terms,
        });
    }
    let tab = table::<T>(n);
    let mut acc = Complex::new(T::zero(), T::zero());
    for (w, l) in tab.weights.iter().zip(&tab.logs) {
        acc += pow_neg_from_ln(*l, s) * *w;
    }
    Ok(acc / two_factor(s))
}

fn zeta_right<T: Real>(s: Complex<T>, cfg: &EvalConfig<T>) -> Result<Complex<T>> {
    let near_pole = (s - T::one()).norm() < T::one();
    if near_pole || two_factor(s).norm() >= lit(FACTOR_GUARD) {
        return eta_quotient(s, cfg);
    }
    // mean value over a circle around s; the circle stays clear of s = 1
    let r = lit::<T>(CIRCLE_RADIUS);
    let m = CIRCLE_POINTS;
    let mut acc = Complex::new(T::zero(), T::zero());
    for j in 0..m {
        let theta = lit::<T>(2.0 * std::f64::consts::PI * j as f64 / m as f64);
        let p = s + Complex::from_polar(r, theta);
        acc += eta_quotient(p, cfg)?;
    }
    Ok(acc / lit::<T>(m as f64))
}

fn is_negative_even_integer<T: Real>(s: Complex<T>) -> bool {
    s.im == T::zero() && s.re < T::zero() && s.re == s.re.round() && (s.re / lit(2.0)).fract() == T::zero()
}

/// Riemann ζ(s) for `s != 1`.
///
/// Certified to `cfg.target_abs_error` (plus rounding) for `Re s >= 0`; the
/// left half-plane is reached through `ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)`
/// with the inner tolerance scaled by the size of the prefactor.
pub fn zeta<T: Real>(s: Complex<T>, cfg: &EvalConfig<T>) -> Result<Complex<T>> {
    cfg.validate()?;
    if s.re == T::one() && s.im == T::zero() {
        return Err(Error::PoleAtOne);
    }
    if is_negative_even_integer(s) {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    if s.re >= T::zero() {
        return zeta_right(s, cfg);
    }
    let one = Complex::new(T::one(), T::zero());
    let reflected = one - s;
    let ln_pre = s * T::LN_2() + (s - one) * T::PI().ln() + ln_sin(s * T::FRAC_PI_2()) + ln_gamma(reflected)?;
    let pre = ln_pre.exp();
    let scale = pre.norm().max(T::one());
    let inner_cfg = EvalConfig {
        target_abs_error: cfg.target_abs_error / scale,
        ..*cfg
    };
    Ok(pre * zeta_right(reflected, &inner_cfg)?)
}

/// ζ(s) as a point of the Riemann sphere: `s = 1` maps to infinity.
pub fn zeta_sphere<T: Real>(s: Complex<T>, cfg: &EvalConfig<T>) -> Result<SpherePoint<T>> {
    match zeta(s, cfg) {
        Ok(z) => Ok(SpherePoint::Finite(z)),
        Err(Error::PoleAtOne) => Ok(SpherePoint::Infinity),
        Err(e) => Err(e),
    }
}
