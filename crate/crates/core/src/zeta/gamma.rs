//! Complex Γ via a Lanczos approximation, with reflection for `Re(s) < 1/2`.

#![allow(clippy::excessive_precision)]

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048_8e-4,
    2.174_396_181_152_126_5e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_140_8e-5,
    3.689_918_265_953_162_5e-6,
];

fn nonpositive_integer<T: Real>(s: Complex<T>) -> Option<i64> {
    if s.im == T::zero() && s.re <= T::zero() && s.re == s.re.round() {
        s.re.to_i64()
    } else {
        None
    }
}

/// `ln sin(z)`, stable for large `|Im z|` (the imaginary part is only defined mod 2π).
pub(crate) fn ln_sin<T: Real>(z: Complex<T>) -> Complex<T> {
    let big = lit::<T>(20.0);
    if z.im.abs() < big {
        return z.sin().ln();
    }
    if z.im < T::zero() {
        return ln_sin(z.conj()).conj();
    }
    // sin z = e^{-iz} (e^{2iz} - 1) / (2i), |e^{2iz}| = e^{-2 Im z} tiny.
    let i = Complex::new(T::zero(), T::one());
    let e2 = (i * z * lit::<T>(2.0)).exp();
    -i * z + (e2 - T::one()).ln() - Complex::new(lit::<T>(2.0).ln(), T::FRAC_PI_2())
}

fn ln_gamma_lanczos<T: Real>(s: Complex<T>) -> Complex<T> {
    // Γ(z+1) = sqrt(2π) (z+g+1/2)^{z+1/2} e^{-(z+g+1/2)} A(z), with z = s - 1.
    let z = s - T::one();
    let half = lit::<T>(0.5);
    let mut acc = Complex::new(lit::<T>(LANCZOS_COEFFS[0]), T::zero());
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += Complex::new(lit::<T>(c), T::zero()) / (z + lit::<T>(k as f64));
    }
    let t = z + lit::<T>(LANCZOS_G) + half;
    let half_ln_two_pi = half * (lit::<T>(2.0) * T::PI()).ln();
    (z + half) * t.ln() - t + acc.ln() + half_ln_two_pi
}

/// `ln Γ(s)` on some branch; only the real part and the imaginary part mod 2π
/// are meaningful.
pub fn ln_gamma<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = nonpositive_integer(s) {
        return Err(Error::PoleAtNonpositiveInteger(n));
    }
    if s.re < lit(0.5) {
        let pi = T::PI();
        let reflected = ln_gamma_lanczos(Complex::new(T::one(), T::zero()) - s);
        Ok(Complex::new(pi.ln(), T::zero()) - ln_sin(s * pi) - reflected)
    } else {
        Ok(ln_gamma_lanczos(s))
    }
}

/// Complex Γ(s).
pub fn gamma<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = nonpositive_integer(s) {
        return Err(Error::PoleAtNonpositiveInteger(n));
    }
    if s.im == T::zero() && s.re > T::zero() && s.re == s.re.round() && s.re <= lit(25.0) {
        // exact factorials for small positive integers
        let n = s.re.to_u32().unwrap_or(1);
        let f = (1..n).fold(T::one(), |acc, k| acc * lit::<T>(k as f64));
        return Ok(Complex::new(f, T::zero()));
    }
    Ok(ln_gamma(s)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C = Complex<f64>;

    fn rel(a: C, b: C) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn classical_values() {
        assert_eq!(gamma(C::new(1.0, 0.0)).unwrap(), C::new(1.0, 0.0));
        let g = gamma(C::new(0.5, 0.0)).unwrap();
        assert_relative_eq!(g.re, std::f64::consts::PI.sqrt(), max_relative = 1e-14);
        assert!(g.im.abs() < 1e-15);
        assert_eq!(gamma(C::new(6.0, 0.0)).unwrap().re, 120.0);
    }

    #[test]
    fn critical_line_modulus_matches_reflection_oracle() {
        // |Γ(1/2+it)|² = π / cosh(πt)
        for &t in &[0.3, 1.0, 3.0, 7.5, 20.0] {
            let g = gamma(C::new(0.5, t)).unwrap();
            let oracle = std::f64::consts::PI / (std::f64::consts::PI * t).cosh();
            assert_relative_eq!(g.norm_sqr(), oracle, max_relative = 1e-10);
        }
    }

    #[test]
    fn high_precision_reference_values() {
        // reference values from a 30-digit evaluation
        let cases = [
            (
                C::new(50.5, 20.0),
                C::new(-8.497_247_693_544_456e61, -1.815_122_159_525_467e61),
            ),
            (
                C::new(-3.7, 2.0),
                C::new(-0.000_815_564_060_409_110_6, 0.000_882_817_490_347_544_9),
            ),
            (
                C::new(0.25, 40.0),
                C::new(4.831_823_620_335_545e-28, 1.756_032_672_945_791_7e-28),
            ),
            (
                C::new(7.0, -0.3),
                C::new(605.086_279_617_969_4, -380.996_776_712_536_87),
            ),
            (C::new(0.1, 0.1), C::new(4.520_080_204_891_075, -4.917_313_069_142_463)),
        ];
        for (s, expect) in cases {
            let g = gamma(s).unwrap();
            assert!(rel(g, expect) < 1e-12, "Γ({s}) = {g}, expected {expect}");
        }
    }

    #[test]
    fn recurrence_and_poles() {
        for &(re, im) in &[(0.3, 0.7), (-2.4, 1.1), (12.0, -30.0), (-40.5, 0.2)] {
            let s = C::new(re, im);
            let lhs = gamma(s + 1.0).unwrap();
            let rhs = s * gamma(s).unwrap();
            assert!(rel(lhs, rhs) < 1e-12);
        }
        assert_eq!(gamma(C::new(0.0, 0.0)), Err(Error::PoleAtNonpositiveInteger(0)));
        assert_eq!(gamma(C::new(-3.0, 0.0)), Err(Error::PoleAtNonpositiveInteger(-3)));
    }

    #[test]
    fn ln_gamma_far_up_the_critical_line() {
        // Stirling: Re ln Γ(1/4 + it) ≈ -πt/2 - (1/4) ln t + ln sqrt(2π) for large t
        let t = 5000.0_f64;
        let lg = ln_gamma(C::new(0.25, t)).unwrap();
        let stirling = -std::f64::consts::PI * t / 2.0 - 0.25 * t.ln() + 0.5 * (2.0 * std::f64::consts::PI).ln();
        assert!((lg.re - stirling).abs() < 1e-6);
    }
}
