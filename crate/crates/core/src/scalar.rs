//! Scalar abstraction shared by every numerical kernel.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssignOps};

/// Real scalar the library computes in.
///
/// Implemented for `f32` and `f64`. The accuracy targets quoted throughout the
/// crate assume `f64`; `f32` works but rounding then dominates every bound.
pub trait Real: Float + FloatConst + NumAssignOps + Sum + Default + Debug + Display + Send + Sync + 'static {}

impl<T> Real for T where T: Float + FloatConst + NumAssignOps + Sum + Default + Debug + Display + Send + Sync + 'static {}

/// Converts an `f64` literal into the working scalar.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from(x).expect("literal representable in scalar type")
}

#[inline]
pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `x^{-s}` for real `x > 0`, principal branch, given `ln x`.
#[inline]
pub fn pow_neg_from_ln<T: Real>(ln_x: T, s: Complex<T>) -> Complex<T> {
    let mag = (-s.re * ln_x).exp();
    let (sin, cos) = (s.im * ln_x).sin_cos();
    Complex::new(mag * cos, -mag * sin)
}

/// `x^{s}` for real `x > 0`, principal branch.
#[inline]
pub fn real_pow<T: Real>(x: T, s: Complex<T>) -> Complex<T> {
    pow_neg_from_ln(x.ln(), -s)
}

/// A value of the Riemann sphere: either a finite complex number or the point
/// at infinity (used for the pole of ζ at `s = 1`).
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpherePoint<T> {
    Finite(Complex<T>),
    Infinity,
}

impl<T: Real> SpherePoint<T> {
    pub fn is_infinite(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn finite(self) -> Option<Complex<T>> {
        match self {
            SpherePoint::Finite(z) => Some(z),
            SpherePoint::Infinity => None,
        }
    }
}
