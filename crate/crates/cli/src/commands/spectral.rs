use anyhow::{bail, Result};
use fracspec::spectral::{
    explicit_formula_counting, explicit_formula_profile, log_grid, spectral_counting, spectral_zeta_check,
    summarize_top_decade, weyl_remainder_profile, write_profile_csv, ProfileSummary, WeylData,
};
use fracspec::strings::{dimension_estimate, minkowski_content_estimate, StringSpec};
use fracspec::zeta::zeta;
use fracspec::{ComplexPoint, Config, FractalString};
use serde::Serialize;

use super::string::lattice;
use crate::cli::{Source, SpectralAction};
use crate::output::{parse_complex, Sink};
use crate::source::string_spec;
use crate::Status;

#[derive(Serialize)]
struct CountOut {
    x: f64,
    count: f64,
}

#[derive(Serialize)]
struct CheckOut {
    s: ComplexPoint,
    cutoff: f64,
    lhs: ComplexPoint,
    rhs: ComplexPoint,
    gap: f64,
    bound: f64,
    within_bound: bool,
}

#[derive(Serialize)]
struct WeylOut {
    omega_length: f64,
    weyl_factor: f64,
    dimension: f64,
    minkowski: Option<f64>,
    c_d: Option<f64>,
    summary: ProfileSummary<f64>,
    /// `|mean - c_D| / c_D` over the top decade
    relative_gap: Option<f64>,
    notes: Vec<String>,
    profile: Vec<(f64, f64)>,
}

#[derive(Serialize)]
struct ExplicitOut {
    x: f64,
    pole_sum: ComplexPoint,
    constant_term: f64,
    n_terms: usize,
    direct: f64,
    formula: f64,
    gap: f64,
}

pub fn spectral(src: &Source, action: SpectralAction, cfg: &Config, sink: &Sink) -> Result<Status> {
    let spec = string_spec(src)?;
    let eta: FractalString = spec.build()?;
    match action {
        SpectralAction::Count { x } => sink.json(&CountOut {
            x,
            count: spectral_counting(&eta, x)?,
        })?,
        SpectralAction::ZetaCheck { s, cutoff } => {
            let s = parse_complex(&s)?;
            let r = spectral_zeta_check(&eta, s, cutoff, cfg)?;
            let ok = r.within_bound();
            sink.json(&CheckOut {
                s,
                cutoff,
                lhs: r.lhs,
                rhs: r.rhs,
                gap: r.gap,
                bound: r.bound,
                within_bound: ok,
            })?;
            if !ok {
                return Ok(Status::VerificationFailed);
            }
        }
        SpectralAction::Weyl {
            x_min,
            x_max,
            points,
            omega,
            dimension,
            minkowski,
            weyl_factor,
        } => {
            if !(0.0 < x_min && x_min < x_max) || points < 2 {
                bail!("need 0 < x-min < x-max and at least 2 points");
            }
            let mut notes = vec![];
            let (dimension, default_omega) = match &spec {
                StringSpec::Power { exponent, count } => {
                    let reach = (*count as f64 + 1.0).powf(1.0 / exponent);
                    if x_max >= reach {
                        notes.push(format!(
                            "frequencies above {reach:.3e} are missing from the truncated string"
                        ));
                    }
                    (
                        dimension.unwrap_or(*exponent),
                        zeta(ComplexPoint::new(1.0 / exponent, 0.0), cfg)?.re,
                    )
                }
                _ => (
                    dimension.map_or_else(|| dimension_estimate(&eta), Ok)?,
                    eta.total_length(),
                ),
            };
            let omega = omega.unwrap_or(default_omega);
            let minkowski = minkowski.or_else(|| minkowski_content_estimate(&eta, dimension));
            if minkowski.is_none() {
                notes.push("not Minkowski measurable (N/x^D oscillates): no c_D".into());
            }
            let weyl = match minkowski {
                Some(m) => WeylData::new(omega, dimension, m, cfg)?,
                None => WeylData {
                    omega_length: omega,
                    weyl_factor: 1.0,
                    dimension,
                    c_d: f64::NAN,
                    minkowski: f64::NAN,
                },
            }
            .with_weyl_factor(weyl_factor);
            let profile = weyl_remainder_profile(&eta, &log_grid(x_min, x_max, points), &weyl)?;
            let summary = summarize_top_decade(&profile).expect("non-empty profile");
            let c_d = minkowski.map(|_| weyl.c_d);
            let out = WeylOut {
                omega_length: omega,
                weyl_factor,
                dimension,
                minkowski,
                c_d,
                summary,
                relative_gap: c_d.map(|c| (summary.mean - c).abs() / c.abs()),
                notes,
                profile,
            };
            sink.table(&out, |w| {
                writeln!(w, "# fracspec weyl csv v1")?;
                writeln!(w, "x,remainder")?;
                for (x, r) in &out.profile {
                    writeln!(w, "{x},{r}")?;
                }
                Ok(())
            })?;
        }
        SpectralAction::Explicit {
            x,
            n_terms,
            points,
            x_min,
            x_max,
            tol,
        } => {
            let lat = lattice(&spec)?;
            let worst = match (points, x) {
                (Some(n), _) => {
                    let rows = explicit_formula_profile(&lat, &log_grid(x_min, x_max, n), n_terms)?;
                    sink.table(&rows, |w| write_profile_csv(&rows, w))?;
                    rows.iter().map(|r| r.gap).fold(0.0, f64::max)
                }
                (None, Some(x)) => {
                    let r = explicit_formula_counting(&lat, x, n_terms)?;
                    let out = ExplicitOut {
                        x,
                        pole_sum: r.pole_sum,
                        constant_term: r.constant_term,
                        n_terms,
                        direct: r.direct_value,
                        formula: r.formula_value(),
                        gap: r.gap(),
                    };
                    sink.json(&out)?;
                    out.gap
                }
                (None, None) => bail!("give --x or --points"),
            };
            if tol.is_some_and(|t| worst > t) {
                return Ok(Status::VerificationFailed);
            }
        }
    }
    Ok(Status::Ok)
}
