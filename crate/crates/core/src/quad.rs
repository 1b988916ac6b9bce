//! Quadrature rules.

use crate::scalar::{lit, Real};

/// Composite Simpson over equally spaced samples. An odd number of intervals
/// closes with the 3/8 rule on the last three.
pub fn simpson<T: Real>(values: &[T], h: T) -> T {
    let n = values.len();
    match n {
        0 | 1 => return T::zero(),
        2 => return h * (values[0] + values[1]) / lit(2.0),
        _ => {}
    }
    let intervals = n - 1;
    let (simpson_end, tail) = if intervals.is_multiple_of(2) {
        (n - 1, false)
    } else {
        (n - 4, true)
    };
    let mut acc = T::zero();
    if simpson_end > 0 {
        acc = values[0] + values[simpson_end];
        for (i, v) in values.iter().enumerate().take(simpson_end).skip(1) {
            acc += if i % 2 == 1 {
                lit::<T>(4.0) * *v
            } else {
                lit::<T>(2.0) * *v
            };
        }
        acc = acc * h / lit(3.0);
    }
    if tail {
        let k = simpson_end;
        acc += lit::<T>(3.0) * h / lit(8.0)
            * (values[k] + lit::<T>(3.0) * values[k + 1] + lit::<T>(3.0) * values[k + 2] + values[k + 3]);
    }
    acc
}

const GL8_NODES: [f64; 4] = [
    0.183_434_642_495_649_8,
    0.525_532_409_916_329,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_3,
];
const GL8_WEIGHTS: [f64; 4] = [
    0.362_683_783_378_362,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_26,
];

/// Nodes and weights of composite 8-point Gauss–Legendre on `[a, b]` with `panels` panels.
pub fn gauss_legendre_nodes<T: Real>(a: T, b: T, panels: usize) -> Vec<(T, T)> {
    let panels = panels.max(1);
    let w = (b - a) / lit(panels as f64);
    let half = w / lit(2.0);
    let mut out = Vec::with_capacity(panels * 8);
    for p in 0..panels {
        let mid = a + w * lit(p as f64) + half;
        for (x, wt) in GL8_NODES.iter().zip(GL8_WEIGHTS) {
            let x = lit::<T>(*x) * half;
            out.push((mid - x, lit::<T>(wt) * half));
            out.push((mid + x, lit::<T>(wt) * half));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_exact_on_cubics() {
        for n in [3usize, 4, 5, 8, 11] {
            let h = 1.0 / (n - 1) as f64;
            let v: Vec<f64> = (0..n).map(|i| (i as f64 * h).powi(3)).collect();
            assert!((simpson(&v, h) - 0.25).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn gauss_legendre_polynomials_and_exp() {
        let nodes = gauss_legendre_nodes(0.0f64, 2.0, 3);
        let s: f64 = nodes.iter().map(|(x, w)| w * x.powi(7)).sum();
        assert!((s - 2f64.powi(8) / 8.0).abs() < 1e-11);
        let s: f64 = nodes.iter().map(|(x, w)| w * x.exp()).sum();
        assert!((s - (2f64.exp() - 1.0)).abs() < 1e-13);
    }
}
