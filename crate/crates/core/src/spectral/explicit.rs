//! Explicit formulas for lattice strings at levels `k = 0` (densities) and
//! `k = 1` (counting functions), all poles simple.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::measure::spectral_counting;
use crate::error::{Error, Result};
use crate::quad::gauss_legendre_nodes;
use crate::scalar::{real_pow, Real};
use crate::strings::SelfSimilarSpec;
use crate::zeta::{zeta, EvalConfig};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplicitFormulaResult<T> {
    pub x: T,
    /// `Σ_{|n| <= N} res(ζ_η; ω_n) x^{ω_n} / ω_n`
    pub pole_sum: Complex<T>,
    /// Residue of `x^s ζ_η(s) / s` at `s = 0`, i.e. `ζ_η(0)`.
    pub constant_term: T,
    pub truncation_n: usize,
    pub direct_value: T,
}

impl<T: Real> ExplicitFormulaResult<T> {
    pub fn formula_value(&self) -> T {
        self.pole_sum.re + self.constant_term
    }

    pub fn gap(&self) -> T {
        (self.formula_value() - self.direct_value).abs()
    }
}

/// Pairs `ω_n, ω_{-n}` in ascending `|n|`, starting with `n = 0`.
fn symmetric_indices(n_terms: usize) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=n_terms as i64).flat_map(|n| [n, -n]))
}

/// Geometric counting function from the pole expansion (level 1).
pub fn explicit_formula_counting<T: Real>(
    spec: &SelfSimilarSpec<T>,
    x: T,
    n_terms: usize,
) -> Result<ExplicitFormulaResult<T>> {
    if !(x > T::zero()) {
        return Err(Error::Precondition("explicit formula needs x > 0".into()));
    }
    let res = spec.residue();
    let mut pole_sum = Complex::new(T::zero(), T::zero());
    for n in symmetric_indices(n_terms) {
        let w = spec.pole(n);
        pole_sum += real_pow(x, w) / w * res;
    }
    let constant_term = spec.closed_form_zeta(Complex::new(T::zero(), T::zero()))?.re;
    let direct_value = spec.truncate(spec.depth_covering(x) + 1)?.counting(x);
    Ok(ExplicitFormulaResult {
        x,
        pole_sum,
        constant_term,
        truncation_n: n_terms,
        direct_value,
    })
}

/// A truncated density `constant + Re Σ coeff_n x^{ω_n - 1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityExpansion<T> {
    pub constant: T,
    /// `(ω_n, coeff_n)` in ascending `|n|`
    pub terms: Vec<(Complex<T>, Complex<T>)>,
}

impl<T: Real> DensityExpansion<T> {
    /// Density of geometric states `Σ res(ζ_η; ω) x^{ω-1}`.
    pub fn geometric(spec: &SelfSimilarSpec<T>, n_terms: usize) -> Self {
        let res = Complex::new(spec.residue(), T::zero());
        let terms = symmetric_indices(n_terms).map(|n| (spec.pole(n), res)).collect();
        Self {
            constant: T::zero(),
            terms,
        }
    }

    /// Density of spectral states `ζ_η(1) + Σ res(ζ_η; ω) ζ(ω) x^{ω-1}`.
    pub fn spectral(spec: &SelfSimilarSpec<T>, n_terms: usize, cfg: &EvalConfig<T>) -> Result<Self> {
        let constant = spec.closed_form_zeta(Complex::new(T::one(), T::zero()))?.re;
        let res = spec.residue();
        let terms = symmetric_indices(n_terms)
            .map(|n| {
                let w = spec.pole(n);
                Ok((w, zeta(w, cfg)? * res))
            })
            .collect::<Result<_>>()?;
        Ok(Self { constant, terms })
    }

    pub fn eval(&self, x: T) -> T {
        let one = Complex::new(T::one(), T::zero());
        let sum: Complex<T> = self.terms.iter().map(|(w, c)| real_pow(x, *w - one) * *c).sum();
        self.constant + sum.re
    }

    /// `∫_a^b density(x) dx` by composite Gauss–Legendre in `u = ln x`, with
    /// panels sized to the fastest oscillation.
    pub fn integrate(&self, a: T, b: T) -> Result<T> {
        if !(a > T::zero() && b > a) {
            return Err(Error::Precondition("integration needs 0 < a < b".into()));
        }
        let (ua, ub) = (a.ln(), b.ln());
        let fastest = self.terms.iter().map(|(w, _)| w.im.abs()).fold(T::zero(), T::max);
        let panels = ((ub - ua) * fastest / T::PI()).ceil().to_usize().unwrap_or(0) + 16;
        let mut acc = T::zero();
        for (u, wt) in gauss_legendre_nodes(ua, ub, panels) {
            // density(e^u) e^u = constant e^u + Re Σ coeff e^{ω u}
            let mut s = Complex::new(self.constant * u.exp(), T::zero());
            for (w, c) in &self.terms {
                s += (*w * u).exp() * *c;
            }
            acc += s.re * wt;
        }
        Ok(acc)
    }
}

pub fn explicit_formula_density<T: Real>(spec: &SelfSimilarSpec<T>, x: T, n_terms: usize) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Precondition("density needs x > 0".into()));
    }
    Ok(DensityExpansion::geometric(spec, n_terms).eval(x))
}

pub fn spectral_density<T: Real>(spec: &SelfSimilarSpec<T>, x: T, n_terms: usize, cfg: &EvalConfig<T>) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Precondition("density needs x > 0".into()));
    }
    Ok(DensityExpansion::spectral(spec, n_terms, cfg)?.eval(x))
}

/// Integrated densities on `[a, b]` next to the counting increments they model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmearedCheck<T> {
    pub a: T,
    pub b: T,
    pub integral: T,
    pub increment: T,
    pub gap: T,
}

fn smeared<T: Real>(a: T, b: T, integral: T, increment: T) -> SmearedCheck<T> {
    SmearedCheck {
        a,
        b,
        integral,
        increment,
        gap: (integral - increment).abs(),
    }
}

pub fn smeared_geometric_check<T: Real>(
    spec: &SelfSimilarSpec<T>,
    a: T,
    b: T,
    n_terms: usize,
) -> Result<SmearedCheck<T>> {
    let integral = DensityExpansion::geometric(spec, n_terms).integrate(a, b)?;
    let eta = spec.truncate(spec.depth_covering(b) + 1)?;
    Ok(smeared(a, b, integral, eta.counting(b) - eta.counting(a)))
}

pub fn smeared_spectral_check<T: Real>(
    spec: &SelfSimilarSpec<T>,
    a: T,
    b: T,
    n_terms: usize,
    cfg: &EvalConfig<T>,
) -> Result<SmearedCheck<T>> {
    let integral = DensityExpansion::spectral(spec, n_terms, cfg)?.integrate(a, b)?;
    let eta = spec.truncate(spec.depth_covering(b) + 1)?;
    let increment = spectral_counting(&eta, b)? - spectral_counting(&eta, a)?;
    Ok(smeared(a, b, integral, increment))
}

/// Explicit-formula profile rows `(x, direct, formula, gap)`.
pub fn explicit_formula_profile<T: Real>(
    spec: &SelfSimilarSpec<T>,
    xs: &[T],
    n_terms: usize,
) -> Result<Vec<super::ProfileRow<T>>> {
    xs.iter()
        .map(|&x| {
            let r = explicit_formula_counting(spec, x, n_terms)?;
            Ok(super::ProfileRow {
                x,
                direct: r.direct_value,
                formula: r.formula_value(),
                gap: r.gap(),
            })
        })
        .collect()
}
