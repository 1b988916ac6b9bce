use anyhow::{bail, Result};
use fracspec::operator::{
    almost_invertibility_verdict, apply_on_grid, phase_transition_scan, quasi_invertibility_verdict,
    truncated_spectrum, DirichletOperator, Grid, SampledFunction, Signal, StepFunction, Support, Verdict,
};
use fracspec::Config;
use serde::Serialize;
use serde_json::json;

use crate::cli::{FunctionArgs, FunctionKind, OpAction, OperatorKind};
use crate::output::Sink;
use crate::Status;

enum TestFunction {
    Step(StepFunction<f64>),
    Sampled(SampledFunction<f64>),
}

impl TestFunction {
    fn signal(&self) -> &dyn Signal<f64> {
        match self {
            TestFunction::Step(s) => s,
            TestFunction::Sampled(s) => s,
        }
    }

    fn exact(&self) -> bool {
        matches!(self, TestFunction::Step(_))
    }
}

fn build(f: &FunctionArgs) -> Result<(TestFunction, Grid<f64>)> {
    let lo = f.a.min(0.0);
    if f.t_max <= lo || f.t_max.is_nan() {
        bail!("--t-max must exceed min(a, 0)");
    }
    let grid = Grid::covering(lo, f.t_max, f.step)?;
    let func = match f.function {
        FunctionKind::UnitStep => TestFunction::Step(StepFunction::unit_step(f.c)),
        FunctionKind::Indicator => TestFunction::Step(StepFunction::indicator(f.a, f.b, f.c)?),
        FunctionKind::Bump => {
            if f.b <= f.a || f.b.is_nan() || f.a.is_nan() {
                bail!("bump needs a < b");
            }
            let (a, w) = (f.a, f.b - f.a);
            TestFunction::Sampled(SampledFunction::from_fn(
                lo,
                f.t_max,
                f.step,
                f.c,
                Support::new(f.a, f.b),
                |t| (std::f64::consts::PI * (t - a) / w).sin().powi(2),
            )?)
        }
    };
    Ok((func, grid))
}

/// Largest index any node of the grid can reach from the function's floor.
fn window(func: &TestFunction, grid: &Grid<f64>) -> u64 {
    let floor = func.signal().support_floor().unwrap_or(0.0);
    (grid.t_max() - floor).max(0.0).exp().floor() as u64 + 1
}

#[derive(Serialize)]
struct Applied<'a> {
    operator: &'a str,
    terms: usize,
    exact: bool,
    grid: Grid<f64>,
    input: Vec<f64>,
    output: Vec<f64>,
}

fn emit_applied(sink: &Sink, out: &Applied) -> Result<()> {
    sink.table(out, |w| {
        writeln!(w, "# fracspec op csv v1 operator={}", out.operator)?;
        writeln!(w, "t,f,af")?;
        for (i, (f, af)) in out.input.iter().zip(&out.output).enumerate() {
            writeln!(w, "{},{},{}", out.grid.t(i), f, af)?;
        }
        Ok(())
    })
}

pub fn op(action: OpAction, cfg: &Config, sink: &Sink) -> Result<Status> {
    match action {
        OpAction::Apply { f, operator, p, p_max } => {
            let (func, grid) = build(&f)?;
            let n = window(&func, &grid);
            let (name, op) = match operator {
                OperatorKind::Spectral => ("spectral", DirichletOperator::spectral(n)),
                OperatorKind::Euler => ("euler", DirichletOperator::euler_factor(p, n)?),
                OperatorKind::Product => ("product", DirichletOperator::euler_product(p_max, n)),
            };
            let out = Applied {
                operator: name,
                terms: op.terms().len(),
                exact: func.exact(),
                grid,
                input: grid.nodes().map(|t| func.signal().value(t)).collect(),
                output: apply_on_grid(&op, func.signal(), grid),
            };
            emit_applied(sink, &out)?;
        }
        OpAction::Invert { f, n_max, roundtrip } => {
            let (func, grid) = build(&f)?;
            let inv = DirichletOperator::mobius_inverse(n_max);
            if roundtrip {
                let n = window(&func, &grid);
                let a = DirichletOperator::spectral(n);
                let af = a.apply(func.signal());
                let back = apply_on_grid(&inv, &af, grid);
                let deviation = grid
                    .nodes()
                    .zip(&back)
                    .map(|(t, v)| (v - func.signal().value(t)).abs())
                    .fold(0.0, f64::max);
                let exact_window = n_max >= n;
                let tol = if func.exact() { 0.0 } else { 1e-9 };
                sink.json(&json!({
                    "n_max": n_max,
                    "window_index": n,
                    "exact_window": exact_window,
                    "exact_function": func.exact(),
                    "max_deviation": deviation,
                }))?;
                if exact_window && deviation > tol {
                    return Ok(Status::VerificationFailed);
                }
            } else {
                let out = Applied {
                    operator: "mobius-inverse",
                    terms: inv.terms().len(),
                    exact: func.exact(),
                    grid,
                    input: grid.nodes().map(|t| func.signal().value(t)).collect(),
                    output: apply_on_grid(&inv, func.signal(), grid),
                };
                emit_applied(sink, &out)?;
            }
        }
        OpAction::Spectrum { c, t, t0, step } => {
            let curve = truncated_spectrum(c, t0, t, step, cfg)?;
            sink.table(&curve, |w| {
                curve.write_csv(&mut *w)?;
                writeln!(w, "# min |zeta| = {:e} at tau = {}", curve.min_mod, curve.argmin)
            })?;
        }
        OpAction::Scan { c_grid, t } => {
            let entries: Vec<serde_json::Value> = phase_transition_scan(&c_grid, t, cfg)
                .into_iter()
                .zip(&c_grid)
                .map(|(r, c)| match r {
                    Ok(report) => serde_json::to_value(report).expect("report serializes"),
                    Err(e) => json!({ "c": c, "error": e.to_string() }),
                })
                .collect();
            sink.json(&entries)?;
        }
        OpAction::Verdict { c, t_max, t0 } => {
            let report = match t0 {
                Some(t0) => almost_invertibility_verdict(c, t0, t_max, cfg)?,
                None => quasi_invertibility_verdict(c, t_max, cfg)?,
            };
            sink.json(&report)?;
            if report.verdict == Verdict::No {
                return Ok(Status::NotInvertible);
            }
        }
    }
    Ok(Status::Ok)
}
