use anyhow::Result;
use fracspec::zeta::{completed_xi, find_critical_zeros, gamma, zeta as zeta_fn};
use fracspec::{ComplexPoint, Config};
use serde::Serialize;

use crate::output::{parse_complex, Sink};
use crate::Status;

#[derive(Serialize)]
struct ZetaOut {
    s: ComplexPoint,
    zeta: ComplexPoint,
    abs_zeta: f64,
    /// `null` at the poles of Γ
    gamma: Option<ComplexPoint>,
    /// `null` at s = 0
    xi: Option<ComplexPoint>,
}

pub fn zeta(s: &str, cfg: &Config, sink: &Sink) -> Result<Status> {
    let s = parse_complex(s)?;
    let z = zeta_fn(s, cfg)?;
    let out = ZetaOut {
        s,
        zeta: z,
        abs_zeta: z.norm(),
        gamma: gamma(s).ok(),
        xi: (s != ComplexPoint::new(0.0, 0.0))
            .then(|| completed_xi(s, cfg).ok())
            .flatten(),
    };
    sink.json(&out)?;
    Ok(Status::Ok)
}

pub fn zeros(t_min: f64, t_max: f64, cfg: &Config, sink: &Sink) -> Result<Status> {
    let zeros = find_critical_zeros(t_min, t_max, cfg)?;
    sink.json(&zeros)?;
    Ok(Status::Ok)
}
