use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::signal::{Grid, SampledFunction, Signal};
use crate::arith::{is_prime, mobius, primes_up_to};
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Largest index a window-sized operator may carry.
pub const MAX_OPERATOR_TERMS: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term<T> {
    pub n: u64,
    pub ln_n: T,
    pub coeff: T,
}

/// Finite Dirichlet polynomial in the shift: `Σ c_n n^{-∂}`, acting as
/// `f ↦ Σ c_n f(t - ln n)`. Terms are kept in ascending `n`, which is also the
/// accumulation order when applied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirichletOperator<T> {
    terms: Vec<Term<T>>,
}

fn term<T: Real>(n: u64, coeff: T) -> Term<T> {
    Term {
        n,
        ln_n: lit::<T>(n as f64).ln(),
        coeff,
    }
}

impl<T: Real> DirichletOperator<T> {
    /// Drops zero coefficients and merges repeated `n`.
    pub fn from_coefficients(mut pairs: Vec<(u64, T)>) -> Result<Self> {
        if pairs.iter().any(|(n, _)| *n == 0) {
            return Err(Error::Precondition("Dirichlet indices start at 1".into()));
        }
        pairs.sort_by_key(|p| p.0);
        let mut terms: Vec<Term<T>> = Vec::with_capacity(pairs.len());
        for (n, c) in pairs {
            match terms.last_mut() {
                Some(t) if t.n == n => t.coeff += c,
                _ => terms.push(term(n, c)),
            }
        }
        terms.retain(|t| t.coeff != T::zero());
        Ok(Self { terms })
    }

    pub fn identity() -> Self {
        Self {
            terms: vec![term(1, T::one())],
        }
    }

    /// `Σ_{n <= n_max} n^{-∂}`, the spectral operator truncated to `n_max`.
    pub fn spectral(n_max: u64) -> Self {
        Self {
            terms: (1..=n_max).map(|n| term(n, T::one())).collect(),
        }
    }

    /// `Σ_{p^k <= n_max} p^{-k∂}`.
    pub fn euler_factor(p: u64, n_max: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut terms = vec![];
        let mut q = 1u64;
        while q <= n_max {
            terms.push(term(q, T::one()));
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
        }
        Ok(Self { terms })
    }

    /// Composition of the Euler factors for all primes `<= p_max`, in ascending `p`.
    pub fn euler_product(p_max: u64, n_max: u64) -> Self {
        primes_up_to(p_max).into_iter().fold(Self::identity(), |acc, p| {
            acc.compose(&Self::euler_factor(p, n_max).unwrap(), n_max)
        })
    }

    /// `Σ_{n <= n_max} μ(n) n^{-∂}`.
    pub fn mobius_inverse(n_max: u64) -> Self {
        let terms = (1..=n_max)
            .filter_map(|n| match mobius(n) {
                0 => None,
                m => Some(term(n, lit::<T>(m as f64))),
            })
            .collect();
        Self { terms }
    }

    /// `self ∘ other` truncated to indices `<= n_max` (Dirichlet convolution).
    pub fn compose(&self, other: &Self, n_max: u64) -> Self {
        let mut dense = vec![T::zero(); n_max as usize + 1];
        for a in &self.terms {
            for b in &other.terms {
                match a.n.checked_mul(b.n) {
                    Some(m) if m <= n_max => dense[m as usize] += a.coeff * b.coeff,
                    _ => break,
                }
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| *c != T::zero())
            .map(|(n, c)| term(n as u64, c))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn max_index(&self) -> u64 {
        self.terms.last().map_or(0, |t| t.n)
    }

    /// Lazy image `Σ c_n f(t - ln n)`.
    pub fn apply<'a, S: Signal<T> + ?Sized>(&'a self, f: &'a S) -> Applied<'a, T, S> {
        Applied { op: self, f }
    }

    /// The image sampled on `f`'s own grid.
    pub fn apply_sampled(&self, f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
        let mut out = SampledFunction::sample(&self.apply(f), f.grid, f.support)?;
        out.support.hi = f.support.hi + lit::<T>(self.max_index().max(1) as f64).ln();
        out.interpolated = f.interpolated || self.terms.iter().any(|t| f.grid.aligned_offset(t.ln_n).is_none());
        Ok(out)
    }
}

/// `Σ c_n f(t - ln n)` evaluated pointwise; terms with `t - ln n` below the
/// floor of `f` are skipped.
pub struct Applied<'a, T, S: ?Sized> {
    op: &'a DirichletOperator<T>,
    f: &'a S,
}

impl<T: Real, S: Signal<T> + ?Sized> Signal<T> for Applied<'_, T, S> {
    fn value(&self, t: T) -> T {
        let reach = self
            .f
            .support_floor()
            .map(|a| t - a + lit::<T>(1e-9) * (T::one() + t.abs()));
        let mut acc = T::zero();
        for term in &self.op.terms {
            if reach.is_some_and(|r| term.ln_n > r) {
                break;
            }
            acc += term.coeff * self.f.value(t - term.ln_n);
        }
        acc
    }

    fn support_floor(&self) -> Option<T> {
        self.f.support_floor()
    }

    fn weight(&self) -> T {
        self.f.weight()
    }
}

/// Largest `n` any grid node of `f` can reach: `e^{t_max - floor}`.
fn window_index<T: Real>(f: &impl Signal<T>, t_max: T) -> Result<u64> {
    let floor = f.support_floor().ok_or(Error::UnboundedTail)?;
    let span = (t_max - floor).max(T::zero());
    let n = span.exp().floor() + T::one();
    if n > lit(MAX_OPERATOR_TERMS as f64) {
        return Err(Error::Precondition(format!(
            "window needs more than {MAX_OPERATOR_TERMS} terms"
        )));
    }
    Ok(n.to_u64().unwrap())
}

/// `a(f)(t) = Σ_{k >= 1} f(t - ln k)`, exact up to interpolation of `f`: the
/// sum is finite at every node because `f` vanishes below its floor.
pub fn apply_spectral_operator<T: Real>(f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    let n = window_index(f, f.grid.t_max())?;
    DirichletOperator::spectral(n).apply_sampled(f)
}

/// `a_p(f)(t) = Σ_{k >= 0} f(t - k ln p)`.
pub fn apply_euler_factor<T: Real>(f: &SampledFunction<T>, p: u64) -> Result<SampledFunction<T>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = window_index(f, f.grid.t_max())?;
    DirichletOperator::euler_factor(p, n)?.apply_sampled(f)
}

/// `∏_{p <= p_max} a_p f`, factors composed in ascending `p` at the level of
/// coefficients and applied once.
pub fn euler_product_apply<T: Real>(f: &SampledFunction<T>, p_max: u64) -> Result<SampledFunction<T>> {
    let n = window_index(f, f.grid.t_max())?;
    DirichletOperator::euler_product(p_max, n).apply_sampled(f)
}

/// `Σ_{n <= n_max} μ(n) f(t - ln n)`.
pub fn apply_inverse<T: Real>(f: &SampledFunction<T>, n_max: u64) -> Result<SampledFunction<T>> {
    DirichletOperator::mobius_inverse(n_max).apply_sampled(f)
}

/// Samples `op(f)` on `grid` for any signal (exact for [`super::StepFunction`]).
pub fn apply_on_grid<T: Real, S: Signal<T> + ?Sized>(op: &DirichletOperator<T>, f: &S, grid: Grid<T>) -> Vec<T> {
    let applied = op.apply(f);
    (0..grid.len)
        .into_par_iter()
        .map(|i| applied.value(grid.t(i)))
        .collect()
}
