use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::string::{Atom, GeneralizedFractalString};
use crate::error::{Error, Result};
use crate::scalar::{lit, real_pow, to_f64, Real};

/// Lattice string `normalization · Σ_{j >= start_index} b^j δ_{a^j}` with `1 < b < a`.
///
/// Its geometric zeta is `normalization · r^{j0} / (1 - r)` with `r = b a^{-s}`;
/// the poles form the vertical lattice `D + i n p`, `D = log_a b`, `p = 2π / ln a`,
/// each with residue `normalization / ln a`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelfSimilarSpec<T> {
    pub ratio: T,
    pub base: T,
    pub start_index: i32,
    pub normalization: T,
}

/// A pole of the geometric zeta function together with its residue.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexDimension<T> {
    pub omega: Complex<T>,
    pub residue: Complex<T>,
}

/// Distance to the pole lattice under which the closed form reports a pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

impl<T: Real> SelfSimilarSpec<T> {
    pub fn new(ratio: T, base: T, start_index: i32, normalization: T) -> Result<Self> {
        if !(T::one() < base && base < ratio) {
            return Err(Error::Precondition("self-similar spec needs 1 < b < a".into()));
        }
        Ok(Self {
            ratio,
            base,
            start_index,
            normalization,
        })
    }

    /// The Cantor string: lengths `3^{-m}` with multiplicity `2^{m-1}`, `m >= 1`.
    pub fn cantor() -> Self {
        Self {
            ratio: lit(3.0),
            base: lit(2.0),
            start_index: 1,
            normalization: lit(0.5),
        }
    }

    pub fn dimension(&self) -> T {
        self.base.ln() / self.ratio.ln()
    }

    /// Oscillatory period `2π / ln a`.
    pub fn period(&self) -> T {
        T::TAU() / self.ratio.ln()
    }

    pub fn residue(&self) -> T {
        self.normalization / self.ratio.ln()
    }

    /// `n`-th complex dimension `D + i n p`.
    pub fn pole(&self, n: i64) -> Complex<T> {
        Complex::new(self.dimension(), self.period() * lit(n as f64))
    }

    fn ratio_at(&self, s: Complex<T>) -> Complex<T> {
        real_pow(self.ratio, -s) * self.base
    }

    fn distance_to_lattice(&self, s: Complex<T>) -> T {
        let n = (s.im / self.period()).round();
        let dre = s.re - self.dimension();
        let dim = s.im - n * self.period();
        (dre * dre + dim * dim).sqrt()
    }

    /// Closed-form geometric zeta, valid on all of ℂ minus the pole lattice.
    pub fn closed_form_zeta(&self, s: Complex<T>) -> Result<Complex<T>> {
        if self.distance_to_lattice(s) < lit(POLE_TOLERANCE) {
            return Err(Error::PoleAtComplexDimension {
                re: to_f64(s.re),
                im: to_f64(s.im),
            });
        }
        let r = self.ratio_at(s);
        let head = r.powi(self.start_index);
        Ok(head * self.normalization / (Complex::new(T::one(), T::zero()) - r))
    }

    /// Complex dimensions `D + i n p` with `|n p| <= im_window`, ascending in `n`.
    pub fn complex_dimensions(&self, im_window: T) -> Result<Vec<ComplexDimension<T>>> {
        if !(im_window >= T::zero()) {
            return Err(Error::Precondition("im_window must be nonnegative".into()));
        }
        let nmax = (im_window / self.period()).floor().to_i64().unwrap_or(0);
        let residue = Complex::new(self.residue(), T::zero());
        Ok((-nmax..=nmax)
            .map(|n| ComplexDimension {
                omega: self.pole(n),
                residue,
            })
            .collect())
    }

    /// Atoms `a^j`, mass `normalization · b^j`, for `start_index <= j <= start_index + depth`.
    pub fn truncate(&self, depth: usize) -> Result<GeneralizedFractalString<T>> {
        let atoms: Vec<Atom<T>> = (0..=depth as i32)
            .map(|k| {
                let j = self.start_index + k;
                Atom {
                    position: self.ratio.powi(j),
                    mass: self.normalization * self.base.powi(j),
                }
            })
            .collect();
        let floor = atoms[0].position;
        Ok(GeneralizedFractalString::new(atoms, floor)?.with_truncation(depth))
    }

    /// Shallowest truncation containing every atom `<= x`.
    pub fn depth_covering(&self, x: T) -> usize {
        let top = (x.ln() / self.ratio.ln()).floor().to_i64().unwrap_or(0) + 1;
        (top - self.start_index as i64).max(1) as usize
    }

    /// Bound on `|ζ_η(s) - ζ_{η,depth}(s)|` for `Re s > D`:
    /// `normalization · ρ^{start+depth+1} / (1 - ρ)`, `ρ = b a^{-Re s}`.
    pub fn truncation_tail_bound(&self, depth: usize, sigma: T) -> Option<T> {
        let rho = self.base * self.ratio.powf(-sigma);
        if rho >= T::one() {
            return None;
        }
        Some(self.normalization.abs() * rho.powi(self.start_index + depth as i32 + 1) / (T::one() - rho))
    }

    /// Tube formula from the pole expansion:
    /// `V(ε) = Σ_n res (2ε)^{1-ω_n} / (ω_n (1-ω_n)) + 2ε ζ_η(0)`, `|n| <= n_terms`.
    pub fn tube_volume_series(&self, epsilon: T, n_terms: usize) -> Result<T> {
        if !(epsilon > T::zero()) {
            return Err(Error::Precondition("epsilon must be positive".into()));
        }
        let two_eps = epsilon + epsilon;
        let res = self.residue();
        let one = Complex::new(T::one(), T::zero());
        let term = |n: i64| {
            let w = self.pole(n);
            real_pow(two_eps, one - w) / (w * (one - w)) * res
        };
        let mut acc = term(0).re;
        for n in 1..=n_terms as i64 {
            // conjugate pair
            acc += (term(n) + term(-n)).re;
        }
        let at_zero = self.closed_form_zeta(Complex::new(T::zero(), T::zero()))?.re;
        Ok(acc + two_eps * at_zero)
    }
}

pub fn closed_form_zeta<T: Real>(spec: &SelfSimilarSpec<T>, s: Complex<T>) -> Result<Complex<T>> {
    spec.closed_form_zeta(s)
}

pub fn complex_dimensions<T: Real>(spec: &SelfSimilarSpec<T>, im_window: T) -> Result<Vec<ComplexDimension<T>>> {
    spec.complex_dimensions(im_window)
}

/// Cantor tube volume from its complex dimensions, truncated at `|n| <= n_terms`.
///
/// `V(ε) = 2^{-D} ε^{1-D} / (D(1-D) ln 3) + (1/ln 3) Σ_{n>=1} Re((2ε)^{1-ω_n} / (ω_n (1-ω_n))) - 2ε`.
pub fn tube_volume_cantor_series<T: Real>(epsilon: T, n_terms: usize) -> Result<T> {
    if !(epsilon > T::zero() && epsilon < lit(0.5)) {
        return Err(Error::Precondition("cantor tube series needs 0 < epsilon < 1/2".into()));
    }
    SelfSimilarSpec::cantor().tube_volume_series(epsilon, n_terms)
}
