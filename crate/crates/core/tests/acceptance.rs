//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use fracspec::operator::{
    norm_bound_check, phase_transition_scan, quasi_invertibility_verdict, shift, truncated_spectrum, weighted_norm,
    DirichletOperator, Grid, SampledFunction, Signal, StepFunction, Support, Verdict,
};
use fracspec::spectral::{
    explicit_formula_counting, log_grid, smeared_geometric_check, smeared_spectral_check, spectral_counting,
    spectral_zeta_check, summarize_top_decade, weyl_remainder_profile, WeylData,
};
use fracspec::strings::{make_cantor_string, make_power_string, GeneralizedFractalString, SelfSimilarSpec};
use fracspec::zeta::{completed_xi, find_critical_zeros, line_modulus_extrema, zeta};
use fracspec::{arith, ComplexPoint, Config};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let elapsed = start.elapsed();
    out.detail = format!("{}; {:.2}s", out.detail, elapsed.as_secs_f64());
    if let Some(limit) = limit {
        if elapsed > limit {
            out.pass = false;
            out.detail += &format!(" exceeds {}s", limit.as_secs());
        }
    }
    out
}

fn functional_equation() -> Outcome {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let s = c(rng.gen_range(0.01..0.99), rng.gen_range(-40.0..40.0));
        let a = completed_xi(s, &cfg).unwrap();
        let b = completed_xi(c(1.0, 0.0) - s, &cfg).unwrap();
        worst = worst.max((a - b).norm());
    }
    outcome(worst <= 1e-9, format!("max |ξ(s) - ξ(1-s)| = {worst:.2e} (tol 1e-9)"))
}

fn critical_zeros() -> Outcome {
    let cfg = Config::default();
    let zeros = find_critical_zeros(0.0, 30.0, &cfg).unwrap();
    let expect = [14.134_725, 21.022_040, 25.010_858];
    let mut ok = zeros.len() == 3;
    let mut worst: f64 = 0.0;
    let mut worst_mod: f64 = 0.0;
    for (z, e) in zeros.iter().zip(expect) {
        worst = worst.max((z.refined_t - e).abs());
        worst_mod = worst_mod.max(zeta(c(0.5, z.refined_t), &cfg).unwrap().norm());
    }
    ok &= worst <= 1e-6 && worst_mod < 1e-5;
    outcome(
        ok,
        format!(
            "{} zeros, max offset {worst:.1e} (tol 1e-6), max |ζ| {worst_mod:.1e} (tol 1e-5)",
            zeros.len()
        ),
    )
}

/// `(1/2πi) ∮ f` on a circle of radius 0.1: the residue of a simple pole.
fn contour_residue(f: impl Fn(ComplexPoint) -> ComplexPoint, center: ComplexPoint) -> ComplexPoint {
    let m = 128;
    let r = 0.1;
    let mut acc = c(0.0, 0.0);
    for k in 0..m {
        let dz = ComplexPoint::from_polar(r, 2.0 * PI * k as f64 / m as f64);
        acc += f(center + dz) * dz;
    }
    acc / m as f64
}

fn cantor_closed_form() -> Outcome {
    let spec = SelfSimilarSpec::<f64>::cantor();
    let eta = make_cantor_string::<f64>(30).unwrap();
    let d = 2f64.ln() / 3f64.ln();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut series_ok = true;
    let mut worst_ratio: f64 = 0.0;
    for _ in 0..50 {
        let s = c(rng.gen_range(d + 0.1..4.0), rng.gen_range(-50.0..50.0));
        let gap = (eta.geometric_zeta(s) - spec.closed_form_zeta(s).unwrap()).norm();
        let bound = spec.truncation_tail_bound(30, s.re).unwrap() + 1e-13;
        series_ok &= gap <= bound;
        worst_ratio = worst_ratio.max(gap / bound);
    }
    let dims = spec.complex_dimensions(12.0).unwrap();
    let p = 2.0 * PI / 3f64.ln();
    let mut dims_ok = dims.len() == 5;
    let mut worst_res: f64 = 0.0;
    for (w, pair) in dims.iter().zip(dims.iter().skip(1)) {
        dims_ok &= (pair.omega.im - w.omega.im - p).abs() <= 1e-12;
    }
    for w in &dims {
        dims_ok &= (w.omega.re - d).abs() <= 1e-12;
        let oracle = contour_residue(|s| spec.closed_form_zeta(s).unwrap(), w.omega);
        worst_res = worst_res
            .max((w.residue - oracle).norm())
            .max((w.residue.re - 0.5 / 3f64.ln()).abs());
    }
    dims_ok &= worst_res <= 1e-8;
    outcome(
        series_ok && dims_ok,
        format!(
            "series/closed gap ≤ {worst_ratio:.2} × tail bound at 50 points; {} dimensions, residue error {worst_res:.1e} (tol 1e-8)",
            dims.len()
        ),
    )
}

fn factorization() -> Outcome {
    let cfg = Config::default();
    let eta = make_cantor_string::<f64>(30).unwrap();
    let mut ok = true;
    let mut parts = vec![];
    for s in [3.0, 2.0, 1.1] {
        let r = spectral_zeta_check(&eta, c(s, 0.0), 1e6, &cfg).unwrap();
        ok &= r.within_bound();
        parts.push(format!("s={s}: {:.1e}/{:.1e}", r.gap, r.bound));
    }
    outcome(ok, format!("gap/bound {}", parts.join(", ")))
}

fn enumerate_frequencies(eta: &GeneralizedFractalString<f64>, x: f64) -> f64 {
    let mut total = 0.0;
    for a in eta.atoms() {
        let mut k = 1.0;
        while k * a.position <= x * (1.0 + 1e-12) {
            let tie = (k * a.position - x).abs() <= 1e-12 * x;
            total += if tie { a.mass / 2.0 } else { a.mass };
            k += 1.0;
        }
    }
    total
}

fn counting_bridge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut mismatches = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..8);
        let pairs: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(2..40) as f64 / 2.0, rng.gen_range(1..5) as f64))
            .collect();
        let eta = GeneralizedFractalString::from_pairs(&pairs).unwrap();
        let x = if rng.gen_bool(0.5) {
            rng.gen_range(1.0..200.0)
        } else {
            pairs[0].0 * rng.gen_range(1..12) as f64
        };
        if spectral_counting(&eta, x).unwrap() != enumerate_frequencies(&eta, x) {
            mismatches += 1;
        }
    }
    let eta = make_cantor_string::<f64>(5).unwrap();
    let f = StepFunction::from_counting(&eta, 0.0).unwrap();
    let grid = Grid::new(0, 3f64.ln() / 64.0, 64 * 9).unwrap();
    let op = DirichletOperator::spectral(grid.t_max().exp() as u64 + 1);
    let af = op.apply(&f);
    let (mut checked, mut bridge_bad) = (0, 0);
    for t in grid.nodes() {
        let x = t.exp();
        let on_atom = eta.atoms().iter().any(|a| {
            let q = x / a.position;
            q >= 1.0 - 1e-9 && (q - q.round()).abs() <= 1e-9
        });
        if on_atom {
            continue;
        }
        checked += 1;
        if af.value(t) != spectral_counting(&eta, x).unwrap() {
            bridge_bad += 1;
        }
    }
    outcome(
        mismatches == 0 && bridge_bad == 0 && checked > 400,
        format!(
            "{mismatches}/100 enumeration mismatches; a(N_η(e^t)) ≠ N_ν(e^t) at {bridge_bad}/{checked} grid points"
        ),
    )
}

/// Inner tube volume of the full Cantor string, summed in closed form:
/// lengths `3^{-m}` with multiplicity `2^{m-1}`.
fn cantor_tube_exact(eps: f64) -> f64 {
    let two_eps = 2.0 * eps;
    let mut m = 1;
    let mut head = 0.0;
    while 3f64.powi(-m) > two_eps {
        head += 2f64.powi(m - 1) * two_eps;
        m += 1;
    }
    head + 1.5 * (2.0f64 / 3.0).powi(m)
}

fn tube_formula() -> Outcome {
    let spec = SelfSimilarSpec::<f64>::cantor();
    let mut ok =
        (cantor_tube_exact(1.0 / 6.0) - 1.0).abs() < 1e-15 && (cantor_tube_exact(1.0 / 18.0) - 7.0 / 9.0).abs() < 1e-15;
    let mut parts = vec![];
    for eps in [1.0 / 6.0, 1.0 / 18.0, 1.0 / 54.0, 1e-3] {
        let gap = (spec.tube_volume_series(eps, 500).unwrap() - cantor_tube_exact(eps)).abs();
        ok &= gap <= 1e-3;
        parts.push(format!("ε={eps:.4}: {gap:.1e}"));
    }
    outcome(
        ok,
        format!("gaps {} (tol 1e-3); V(1/6)=1, V(1/18)=7/9 exact", parts.join(", ")),
    )
}

fn bump(rng: &mut ChaCha8Rng, step: f64, c: f64) -> SampledFunction<f64> {
    let a = rng.gen_range(-1.0..2.0);
    let w = rng.gen_range(1.0..4.0);
    let amp = rng.gen_range(0.5..2.0);
    SampledFunction::from_fn(a, a + w, step, c, Support::new(a, a + w), |t| {
        amp * (PI * (t - a) / w).sin().powi(2)
    })
    .unwrap()
}

fn shift_group() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let cw = rng.gen_range(0.0..2.0);
        let f = bump(&mut rng, 2.5e-4, cw);
        let t = rng.gen_range(-3.0..3.0);
        let ratio = weighted_norm(&shift(&f, t)) / weighted_norm(&f);
        worst = worst.max((ratio / (-t * cw).exp() - 1.0).abs());
    }
    let f = bump(&mut rng, 1e-3, 0.5);
    let (a, b) = (0.125, 2.375);
    let lhs = shift(&shift(&f, a), b);
    let rhs = shift(&f, a + b);
    let bitwise = lhs.values == rhs.values && lhs.grid == rhs.grid;
    outcome(
        worst <= 1e-6 && bitwise,
        format!("max relative deviation {worst:.1e} (tol 1e-6); aligned semigroup bitwise: {bitwise}"),
    )
}

fn mobius_inversion() -> Outcome {
    let mut bad_x = 0;
    for x in 1..=10_000u64 {
        let s: i64 = (1..=x).map(|n| arith::mobius(n) as i64 * (x / n) as i64).sum();
        if s != 1 {
            bad_x += 1;
        }
    }
    let f = StepFunction::new(vec![(0.0, 1.0), (0.3, 2.0), (1.1, -1.5), (2.05, 0.5)], 0.0).unwrap();
    let grid = Grid::new(-50, 0.01f64, 450).unwrap();
    let n = grid.t_max().exp() as u64 + 1;
    let a = DirichletOperator::spectral(n);
    let inv = DirichletOperator::mobius_inverse(n);
    let af = a.apply(&f);
    let back = inv.apply(&af);
    let bad_t = grid.nodes().filter(|&t| back.value(t) != f.value(t)).count();
    outcome(
        bad_x == 0 && bad_t == 0,
        format!(
            "Σ μ(n)⌊x/n⌋ ≠ 1 for {bad_x} x ≤ 10^4; a^-1 a f ≠ f at {bad_t}/{} grid points",
            grid.len
        ),
    )
}

fn norm_bound() -> Outcome {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    for cw in [1.5, 2.0, 3.0] {
        for _ in 0..50 {
            let a = rng.gen_range(0.0..2.0);
            let w = rng.gen_range(0.2..3.0);
            let amp = rng.gen_range(0.5..2.0);
            let f = SampledFunction::from_fn(a, a + w, 5e-3, cw, Support::new(a, a + w), |t| {
                amp * (PI * (t - a) / w).sin().powi(2)
            })
            .unwrap();
            let r = norm_bound_check(&f, &cfg).unwrap();
            failures += usize::from(!r.ok);
            worst = worst.max(r.lhs / r.rhs);
        }
    }
    outcome(
        failures == 0,
        format!("{failures}/150 violations; max ‖a f‖/(ζ(c)‖f‖) = {worst:.4}"),
    )
}

fn phase_picture() -> Outcome {
    let cfg = Config::default();
    let right = line_modulus_extrema(2.0, 0.0, 50.0, &cfg).unwrap();
    let half = truncated_spectrum(0.5, 0.0, 15.0, 0.01, &cfg).unwrap();
    let verdict = quasi_invertibility_verdict(0.5, 15.0, &cfg).unwrap();
    let scan = phase_transition_scan(&[0.9, 2.0], 500.0, &cfg);
    let (r09, r2) = (scan[0].as_ref().unwrap(), scan[1].as_ref().unwrap());
    let zeta2 = PI * PI / 6.0;
    // context only: the same sup with the pole neighbourhood τ < 1 left out
    let far = line_modulus_extrema(0.9, 1.0, 500.0, &cfg).unwrap().max_mod;
    let far2 = line_modulus_extrema(0.9, 1.0, 1000.0, &cfg).unwrap().max_mod;
    let ok = right.min_mod >= 0.657
        && half.min_mod < 1e-3
        && verdict.verdict == Verdict::No
        && r09.sup_grows == Some(true)
        && r2.sup_grows == Some(false)
        && r2.sup_mod_doubled.unwrap() <= zeta2 + 1e-12;
    outcome(
        ok,
        format!(
            "min|ζ(2+iτ)| {:.4}; min|ζ(1/2+iτ)| {:.1e}, verdict {:?}; sup c=0.9 {:.3} -> {:.3} (at τ={:.2}; over τ>=1: {:.3} -> {:.3}); sup c=2 {:.6} -> {:.6}",
            right.min_mod,
            half.min_mod,
            verdict.verdict,
            r09.sup_mod,
            r09.sup_mod_doubled.unwrap(),
            r09.argmax,
            far,
            far2,
            r2.sup_mod,
            r2.sup_mod_doubled.unwrap()
        ),
    )
}

fn explicit_formulas() -> Outcome {
    let cfg = Config::default();
    let spec = SelfSimilarSpec::<f64>::cantor();
    let xs = [4.0, 5.196, 12.51, 20.0, 46.77, 140.3, 337.9, 1013.6, 1572.9, 3788.0];
    let worst = xs
        .iter()
        .map(|&x| explicit_formula_counting(&spec, x, 500).unwrap().gap())
        .fold(0.0, f64::max);
    let g = smeared_geometric_check(&spec, 4.0, 80.0, 500).unwrap();
    let s = smeared_spectral_check(&spec, 4.0, 80.0, 500, &cfg).unwrap();
    outcome(
        worst <= 0.02 && g.gap <= 0.05 && s.gap <= 0.1,
        format!(
            "pointwise max gap {worst:.4} (tol 0.02); smeared gaps {:.4} (0.05), {:.4} (0.1)",
            g.gap, s.gap
        ),
    )
}

fn weyl_constant() -> Outcome {
    let cfg = Config::default();
    let d = 0.5;
    // direct ε-neighbourhood oracle with the dropped tail Σ_{j>n} j^{-2} added back
    let n = 200_000;
    let big = make_power_string::<f64>(d, n).unwrap();
    let eps = 1e-7;
    let nf = n as f64;
    let tail = 1.0 / nf - 0.5 / (nf * nf) + 1.0 / (6.0 * nf * nf * nf);
    let m = (big.tube_volume(eps) + tail) / eps.powf(1.0 - d);
    let omega = PI * PI / 6.0;
    let weyl = WeylData::new(omega, d, m, &cfg).unwrap();
    let eta = make_power_string::<f64>(d, 1000).unwrap();
    let prof = weyl_remainder_profile(&eta, &log_grid(1e4, 1e5, 200), &weyl).unwrap();
    let mean = summarize_top_decade(&prof).unwrap().mean;
    let rel = (mean - weyl.c_d).abs() / weyl.c_d;
    outcome(
        rel <= 0.05,
        format!(
            "top-decade mean {mean:.4} vs c_D {:.4} (M = {m:.4}); relative gap {rel:.2e} (tol 5%)",
            weyl.c_d
        ),
    )
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: Vec<Criterion> = vec![
        ("functional equation", secs(5), functional_equation),
        ("critical zeros", secs(10), critical_zeros),
        ("Cantor closed form", None, cantor_closed_form),
        ("factorization", secs(30), factorization),
        ("counting bridge", None, counting_bridge),
        ("tube formula", None, tube_formula),
        ("shift-group scaling", None, shift_group),
        ("Möbius inversion", None, mobius_inversion),
        ("norm bound", None, norm_bound),
        ("invertibility phase picture", secs(120), phase_picture),
        ("explicit formulas", None, explicit_formulas),
        ("Weyl / c_D", None, weyl_constant),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let out = timed(limit, run);
        failed += usize::from(!out.pass);
        println!(
            "[{}] {:>2} {name}: {}",
            if out.pass { "PASS" } else { "FAIL" },
            i + 1,
            out.detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
