use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, pow_neg_from_ln, Real};

/// Relative tolerance under which two atom positions count as the same point.
pub const POSITION_TOLERANCE: f64 = 1e-12;

pub(crate) fn same_position<T: Real>(a: T, b: T) -> bool {
    (a - b).abs() <= lit::<T>(POSITION_TOLERANCE) * a.abs().max(b.abs())
}

/// A point mass of a generalized fractal string: `mass · δ_{position}`.
///
/// For an ordinary fractal string the position is a reciprocal length `1/l_j`
/// and the mass its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Atom<T> {
    pub position: T,
    pub mass: T,
}

/// Finite atomic measure on `(0, ∞)` with no mass below `support_floor`.
///
/// Infinite strings are stored truncated; `truncation` records the depth (or
/// count) used, and the builders document the tail that was dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedFractalString<T> {
    atoms: Vec<Atom<T>>,
    support_floor: T,
    truncation: Option<usize>,
    cumulative: Vec<T>,
}

impl<T: Real> GeneralizedFractalString<T> {
    /// Atoms must have strictly increasing positions, all `>= support_floor > 0`.
    pub fn new(atoms: Vec<Atom<T>>, support_floor: T) -> Result<Self> {
        if !(support_floor > T::zero()) {
            return Err(Error::InvalidString("support floor must be positive".into()));
        }
        for w in atoms.windows(2) {
            if !(w[1].position > w[0].position) {
                return Err(Error::InvalidString("positions must be strictly increasing".into()));
            }
        }
        if let Some(a) = atoms.iter().find(|a| !a.position.is_finite() || !a.mass.is_finite()) {
            return Err(Error::InvalidString(format!("non-finite atom at {:?}", a.position)));
        }
        if let Some(first) = atoms.first() {
            if first.position < support_floor {
                return Err(Error::InvalidString("atom below the support floor".into()));
            }
        }
        let mut cumulative = Vec::with_capacity(atoms.len() + 1);
        let mut acc = T::zero();
        cumulative.push(acc);
        for a in &atoms {
            acc += a.mass;
            cumulative.push(acc);
        }
        Ok(Self {
            atoms,
            support_floor,
            truncation: None,
            cumulative,
        })
    }

    /// Support floor defaults to the first position (or 1 for the empty string).
    pub fn from_atoms(atoms: Vec<Atom<T>>) -> Result<Self> {
        let floor = atoms.first().map(|a| a.position).unwrap_or_else(T::one);
        Self::new(atoms, floor)
    }

    /// Builds from `(position, multiplicity)` pairs in any order; coincident
    /// positions are merged.
    pub fn from_pairs(pairs: &[(T, T)]) -> Result<Self> {
        let mut sorted = pairs.to_vec();
        if sorted.iter().any(|(x, _)| !(*x > T::zero())) {
            return Err(Error::InvalidString("positions must be positive".into()));
        }
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite positions"));
        let mut atoms: Vec<Atom<T>> = Vec::with_capacity(sorted.len());
        for (x, w) in sorted {
            match atoms.last_mut() {
                Some(last) if same_position(last.position, x) => last.mass += w,
                _ => atoms.push(Atom { position: x, mass: w }),
            }
        }
        Self::from_atoms(atoms)
    }

    pub fn with_truncation(mut self, depth: usize) -> Self {
        self.truncation = Some(depth);
        self
    }

    pub fn atoms(&self) -> &[Atom<T>] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn support_floor(&self) -> T {
        self.support_floor
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn total_mass(&self) -> T {
        *self.cumulative.last().unwrap()
    }

    /// `Σ w_j / x_j`, the total length of the underlying ordinary string.
    pub fn total_length(&self) -> T {
        self.atoms.iter().map(|a| a.mass / a.position).sum()
    }

    /// `(length, multiplicity)` pairs, longest first.
    pub fn lengths(&self) -> Vec<(T, T)> {
        self.atoms.iter().map(|a| (T::one() / a.position, a.mass)).collect()
    }

    /// Geometric zeta `Σ w_j x_j^{-s}` (principal powers).
    pub fn geometric_zeta(&self, s: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for a in &self.atoms {
            acc += pow_neg_from_ln(a.position.ln(), s) * a.mass;
        }
        acc
    }

    /// `N_η(x) = ½(η(0,x] + η[0,x))`: atoms at `x` count half.
    pub fn counting(&self, x: T) -> T {
        let tol = lit::<T>(POSITION_TOLERANCE);
        let lo = self.atoms.partition_point(|a| a.position < x * (T::one() - tol));
        let hi = self.atoms.partition_point(|a| a.position <= x * (T::one() + tol));
        let below = self.cumulative[lo];
        let at = self.cumulative[hi] - self.cumulative[lo];
        below + at / lit(2.0)
    }

    /// Volume of the inner ε-neighbourhood of the boundary: `Σ w_j min(l_j, 2ε)`.
    pub fn tube_volume(&self, epsilon: T) -> T {
        let two_eps = epsilon + epsilon;
        self.atoms
            .iter()
            .map(|a| a.mass * (T::one() / a.position).min(two_eps))
            .sum()
    }
}

/// Cantor string truncated at `depth`: atoms `3^{j+1}` with mass `2^j`, `0 <= j <= depth`.
///
/// The `j = 0` atom is the middle third, so the infinite string has total
/// length 1; the dropped tail has length `(2/3)^{depth+1}`.
pub fn make_cantor_string<T: Real>(depth: usize) -> Result<GeneralizedFractalString<T>> {
    if depth < 1 {
        return Err(Error::Precondition("cantor depth must be >= 1".into()));
    }
    let (three, two) = (lit::<T>(3.0), lit::<T>(2.0));
    let atoms = (0..=depth)
        .map(|j| Atom {
            position: three.powi(j as i32 + 1),
            mass: two.powi(j as i32),
        })
        .collect();
    Ok(GeneralizedFractalString::new(atoms, three)?.with_truncation(depth))
}

/// Lengths `l_j = j^{-1/D}`, `j = 1..=count`: a Minkowski measurable string of dimension `D`.
pub fn make_power_string<T: Real>(exponent: T, count: usize) -> Result<GeneralizedFractalString<T>> {
    if !(exponent > T::zero() && exponent < T::one()) {
        return Err(Error::Precondition("power string exponent must lie in (0, 1)".into()));
    }
    if count == 0 {
        return Err(Error::Precondition("power string needs count >= 1".into()));
    }
    let inv = T::one() / exponent;
    let atoms = (1..=count)
        .map(|j| Atom {
            position: lit::<T>(j as f64).powf(inv),
            mass: T::one(),
        })
        .collect();
    Ok(GeneralizedFractalString::new(atoms, T::one())?.with_truncation(count))
}

/// The single unit atom `δ_1`; its spectral measure is the harmonic string.
pub fn unit_string<T: Real>() -> GeneralizedFractalString<T> {
    GeneralizedFractalString::new(
        vec![Atom {
            position: T::one(),
            mass: T::one(),
        }],
        T::one(),
    )
    .expect("unit string is valid")
}

pub fn geometric_zeta<T: Real>(eta: &GeneralizedFractalString<T>, s: Complex<T>) -> Complex<T> {
    eta.geometric_zeta(s)
}

pub fn counting_function<T: Real>(eta: &GeneralizedFractalString<T>, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Precondition("counting function needs x > 0".into()));
    }
    Ok(eta.counting(x))
}

/// Inner ε-neighbourhood volume of a disjoint union of intervals with the given lengths.
pub fn tube_volume_direct<T: Real>(lengths: &[T], epsilon: T) -> Result<T> {
    if !(epsilon > T::zero()) {
        return Err(Error::Precondition("epsilon must be positive".into()));
    }
    let two_eps = epsilon + epsilon;
    Ok(lengths.iter().map(|l| l.min(two_eps)).sum())
}
