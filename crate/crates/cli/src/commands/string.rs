use anyhow::{anyhow, Result};
use fracspec::strings::{string_stats, ComplexDimension, StringSpec};
use fracspec::{ComplexPoint, FractalString, LatticeSpec};
use serde::Serialize;

use crate::cli::{Source, StringAction};
use crate::output::{parse_complex, Sink};
use crate::source::string_spec;
use crate::Status;

pub(crate) fn lattice(spec: &StringSpec) -> Result<LatticeSpec> {
    spec.self_similar::<f64>()
        .ok_or_else(|| anyhow!("this action needs a lattice string (cantor or selfsimilar)"))?
        .map_err(Into::into)
}

#[derive(Serialize)]
struct ZetaOut {
    s: ComplexPoint,
    series: ComplexPoint,
    closed_form: Option<ComplexPoint>,
    /// Bound on the series truncation error, when `Re s` exceeds the dimension
    tail_bound: Option<f64>,
}

#[derive(Serialize)]
struct DimsOut {
    dimension: f64,
    period: f64,
    dimensions: Vec<ComplexDimension<f64>>,
}

#[derive(Serialize)]
struct CountOut {
    x: f64,
    count: f64,
}

#[derive(Serialize)]
struct TubeOut {
    epsilon: f64,
    n_terms: usize,
    series: f64,
    direct: Option<f64>,
    gap: Option<f64>,
    tol: f64,
}

/// Direct tube volume of the full lattice string: the truncated atoms plus the
/// dropped tail when all of its lengths are below `2ε`.
fn direct_tube(spec: &LatticeSpec, eta: &FractalString, depth: usize, epsilon: f64) -> f64 {
    let next_length = spec.ratio.powi(-(spec.start_index + depth as i32 + 1));
    let tail = if next_length <= 2.0 * epsilon {
        spec.truncation_tail_bound(depth, 1.0).unwrap_or(0.0)
    } else {
        0.0
    };
    eta.tube_volume(epsilon) + tail
}

pub fn string(src: &Source, action: StringAction, sink: &Sink) -> Result<Status> {
    let spec = string_spec(src)?;
    let eta: FractalString = spec.build()?;
    match action {
        StringAction::Zeta { s } => {
            let s = parse_complex(&s)?;
            let lat = spec.self_similar::<f64>().transpose()?;
            let out = ZetaOut {
                s,
                series: eta.geometric_zeta(s),
                closed_form: lat.as_ref().map(|l| l.closed_form_zeta(s)).transpose()?,
                tail_bound: lat
                    .as_ref()
                    .and_then(|l| l.truncation_tail_bound(eta.truncation().unwrap_or(0), s.re)),
            };
            sink.json(&out)?;
        }
        StringAction::Dims { im_window } => {
            let lat = lattice(&spec)?;
            let out = DimsOut {
                dimension: lat.dimension(),
                period: lat.period(),
                dimensions: lat.complex_dimensions(im_window)?,
            };
            sink.json(&out)?;
        }
        StringAction::Count { x } => {
            sink.json(&CountOut {
                x,
                count: fracspec::strings::counting_function(&eta, x)?,
            })?;
        }
        StringAction::Tube {
            epsilon,
            n_terms,
            compare_direct,
            tol,
        } => {
            let lat = lattice(&spec)?;
            let series = lat.tube_volume_series(epsilon, n_terms)?;
            let direct = compare_direct.then(|| direct_tube(&lat, &eta, eta.truncation().unwrap_or(0), epsilon));
            let gap = direct.map(|d| (d - series).abs());
            sink.json(&TubeOut {
                epsilon,
                n_terms,
                series,
                direct,
                gap,
                tol,
            })?;
            if gap.is_some_and(|g| g > tol) {
                return Ok(Status::VerificationFailed);
            }
        }
        StringAction::DimEst => {
            sink.json(&string_stats(&eta)?)?;
        }
    }
    Ok(Status::Ok)
}
