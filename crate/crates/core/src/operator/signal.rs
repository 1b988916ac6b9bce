use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};
use crate::strings::GeneralizedFractalString;

/// Relative distance to the nearest grid node under which a point is on the grid.
pub const ALIGN_TOLERANCE: f64 = 1e-9;

/// A real function of `t` with weight `c`, identically zero below its floor.
pub trait Signal<T: Real>: Sync {
    fn value(&self, t: T) -> T;
    /// `None` when the support is not bounded below.
    fn support_floor(&self) -> Option<T>;
    fn weight(&self) -> T;
}

/// Nodes `t_i = (start + i) · step` for `i < len`. Anchoring at 0 keeps
/// aligned shifts integer-valued.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid<T> {
    pub start: i64,
    pub step: T,
    pub len: usize,
}

impl<T: Real> Grid<T> {
    pub fn new(start: i64, step: T, len: usize) -> Result<Self> {
        if !(step > T::zero() && step.is_finite()) || len == 0 {
            return Err(Error::Precondition("grid needs step > 0 and at least one node".into()));
        }
        Ok(Self { start, step, len })
    }

    /// Smallest anchored grid covering `[lo, hi]`.
    pub fn covering(lo: T, hi: T, step: T) -> Result<Self> {
        if !(lo <= hi && lo.is_finite() && hi.is_finite()) {
            return Err(Error::Precondition("grid window must be finite with lo <= hi".into()));
        }
        let a = snap_floor(lo / step);
        let b = snap_ceil(hi / step);
        Self::new(a, step, (b - a) as usize + 1)
    }

    pub fn t(&self, i: usize) -> T {
        lit::<T>((self.start + i as i64) as f64) * self.step
    }

    pub fn t_min(&self) -> T {
        self.t(0)
    }

    pub fn t_max(&self) -> T {
        self.t(self.len - 1)
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.len).map(|i| self.t(i))
    }

    /// Node offset `m` when `dt = m · step` up to [`ALIGN_TOLERANCE`].
    pub fn aligned_offset(&self, dt: T) -> Option<i64> {
        let u = dt / self.step;
        let r = u.round();
        ((u - r).abs() <= lit::<T>(ALIGN_TOLERANCE) * T::one().max(u.abs())).then(|| r.to_i64().unwrap())
    }
}

fn snap_floor<T: Real>(u: T) -> i64 {
    let r = u.round();
    if (u - r).abs() <= lit::<T>(ALIGN_TOLERANCE) * T::one().max(u.abs()) {
        r
    } else {
        u.floor()
    }
    .to_i64()
    .unwrap()
}

fn snap_ceil<T: Real>(u: T) -> i64 {
    let r = u.round();
    if (u - r).abs() <= lit::<T>(ALIGN_TOLERANCE) * T::one().max(u.abs()) {
        r
    } else {
        u.ceil()
    }
    .to_i64()
    .unwrap()
}

/// Closed interval, possibly unbounded on either side.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Support<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Real> Support<T> {
    pub fn new(lo: T, hi: T) -> Self {
        Self { lo, hi }
    }

    pub fn from(lo: T) -> Self {
        Self { lo, hi: T::infinity() }
    }

    pub fn contains(&self, t: T) -> bool {
        t >= self.lo && t <= self.hi
    }

    pub fn shifted(&self, dt: T) -> Self {
        Self {
            lo: self.lo + dt,
            hi: self.hi + dt,
        }
    }
}

/// A function on an anchored grid, linearly interpolated between nodes, zero
/// outside its support and beyond the grid window.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction<T> {
    pub grid: Grid<T>,
    pub values: Vec<T>,
    pub weight: T,
    pub support: Support<T>,
    /// Set once any value came from interpolation rather than a grid node.
    pub interpolated: bool,
}

impl<T: Real> SampledFunction<T> {
    pub fn new(grid: Grid<T>, values: Vec<T>, weight: T, support: Support<T>) -> Result<Self> {
        if values.len() != grid.len {
            return Err(Error::Precondition(format!(
                "{} values for {} grid nodes",
                values.len(),
                grid.len
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Precondition("sampled values must be finite".into()));
        }
        if !(weight >= T::zero()) {
            return Err(Error::Precondition("weight c must be >= 0".into()));
        }
        if !(support.lo <= support.hi) || support.lo.is_nan() || support.hi.is_nan() {
            return Err(Error::Precondition("support must satisfy lo <= hi".into()));
        }
        Ok(Self {
            grid,
            values,
            weight,
            support,
            interpolated: false,
        })
    }

    /// Samples `f` on the grid covering `[lo, hi]`; values outside `support` are 0.
    pub fn from_fn(lo: T, hi: T, step: T, weight: T, support: Support<T>, f: impl Fn(T) -> T) -> Result<Self> {
        let grid = Grid::covering(lo, hi, step)?;
        let values = grid
            .nodes()
            .map(|t| if support.contains(t) { f(t) } else { T::zero() })
            .collect();
        Self::new(grid, values, weight, support)
    }

    /// Samples any signal on `grid`.
    pub fn sample<S: Signal<T> + ?Sized>(f: &S, grid: Grid<T>, support: Support<T>) -> Result<Self> {
        use rayon::prelude::*;
        let values = (0..grid.len).into_par_iter().map(|i| f.value(grid.t(i))).collect();
        Self::new(grid, values, f.weight(), support)
    }

    pub fn indicator(a: T, b: T, step: T, weight: T) -> Result<Self> {
        Self::from_fn(a, b, step, weight, Support::new(a, b), |_| T::one())
    }

    /// `1` on `[0, t_max]` of a function that is 1 on all of `[0, ∞)`.
    pub fn unit_step(t_max: T, step: T, weight: T) -> Result<Self> {
        Self::from_fn(T::zero(), t_max, step, weight, Support::from(T::zero()), |_| T::one())
    }

    pub fn zero(lo: T, hi: T, step: T, weight: T) -> Result<Self> {
        Self::from_fn(lo, hi, step, weight, Support::new(lo, hi), |_| T::zero())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (T, T)> + '_ {
        self.grid.nodes().zip(self.values.iter().cloned())
    }

    fn node(&self, i: i64) -> T {
        if i < 0 || i as usize >= self.values.len() {
            T::zero()
        } else {
            self.values[i as usize]
        }
    }

    pub fn max_abs(&self) -> T {
        self.values.iter().fold(T::zero(), |m, v| m.max(v.abs()))
    }
}

impl<T: Real> Signal<T> for SampledFunction<T> {
    fn value(&self, t: T) -> T {
        if !self.support.contains(t) {
            return T::zero();
        }
        let u = t / self.grid.step - lit::<T>(self.grid.start as f64);
        let r = u.round();
        if (u - r).abs() <= lit::<T>(ALIGN_TOLERANCE) * T::one().max(u.abs()) {
            return self.node(r.to_i64().unwrap());
        }
        let i = u.floor();
        let theta = u - i;
        let i = i.to_i64().unwrap();
        let (v0, v1) = (self.node(i), self.node(i + 1));
        v0 + theta * (v1 - v0)
    }

    fn support_floor(&self) -> Option<T> {
        self.support.lo.is_finite().then_some(self.support.lo)
    }

    fn weight(&self) -> T {
        self.weight
    }
}

/// Right-continuous step function `Σ_{x_j <= t} h_j`, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepFunction<T> {
    jumps: Vec<T>,
    levels: Vec<T>,
    weight: T,
}

impl<T: Real> StepFunction<T> {
    /// `(position, height)` pairs in any order; equal positions add up.
    pub fn new(mut jumps: Vec<(T, T)>, weight: T) -> Result<Self> {
        if jumps.iter().any(|(x, h)| !x.is_finite() || !h.is_finite()) {
            return Err(Error::Precondition("jumps must be finite".into()));
        }
        jumps.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        let mut xs: Vec<T> = Vec::new();
        let mut levels: Vec<T> = Vec::new();
        let mut acc = T::zero();
        for (x, h) in jumps {
            acc += h;
            if xs.last() == Some(&x) {
                *levels.last_mut().unwrap() = acc;
            } else {
                xs.push(x);
                levels.push(acc);
            }
        }
        Ok(Self {
            jumps: xs,
            levels,
            weight,
        })
    }

    pub fn unit_step(weight: T) -> Self {
        Self {
            jumps: vec![T::zero()],
            levels: vec![T::one()],
            weight,
        }
    }

    /// Indicator of `[a, b)`.
    pub fn indicator(a: T, b: T, weight: T) -> Result<Self> {
        Self::new(vec![(a, T::one()), (b, -T::one())], weight)
    }

    /// `t ↦ N_η(e^t)` with right-continuous jumps at `ln x_j`.
    pub fn from_counting(eta: &GeneralizedFractalString<T>, weight: T) -> Result<Self> {
        Self::new(eta.atoms().iter().map(|a| (a.position.ln(), a.mass)).collect(), weight)
    }

    pub fn jump_positions(&self) -> &[T] {
        &self.jumps
    }
}

impl<T: Real> Signal<T> for StepFunction<T> {
    fn value(&self, t: T) -> T {
        let k = self.jumps.partition_point(|x| *x <= t);
        if k == 0 {
            T::zero()
        } else {
            self.levels[k - 1]
        }
    }

    fn support_floor(&self) -> Option<T> {
        Some(self.jumps.first().cloned().unwrap_or(T::zero()))
    }

    fn weight(&self) -> T {
        self.weight
    }
}
