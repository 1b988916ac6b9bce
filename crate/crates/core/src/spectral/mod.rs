//! Spectral side: frequency measures, spectral counting, the factorization
//! `ζ_ν = ζ_η · ζ`, Weyl asymptotics and explicit formulas.

mod explicit;
mod measure;
mod weyl;

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

pub use explicit::{
    explicit_formula_counting, explicit_formula_density, explicit_formula_profile, smeared_geometric_check,
    smeared_spectral_check, spectral_density, DensityExpansion, ExplicitFormulaResult, SmearedCheck,
};
pub use measure::{spectral_counting, spectral_measure, spectral_zeta_check, SpectralMeasure, ZetaFactorizationCheck};
pub use weyl::{log_grid, summarize_top_decade, weyl_remainder_profile, ProfileSummary, WeylData};

/// One line of a direct-versus-formula comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow<T> {
    pub x: T,
    pub direct: T,
    pub formula: T,
    pub gap: T,
}

pub const PROFILE_CSV_HEADER: &str = "# fracspec profile csv v1\nx,direct,formula,gap";

pub fn write_profile_csv<T: crate::Real, W: Write>(rows: &[ProfileRow<T>], mut out: W) -> io::Result<()> {
    writeln!(out, "{PROFILE_CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{}", r.x, r.direct, r.formula, r.gap)?;
    }
    Ok(())
}
