use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Accuracy and resolution knobs for zeta evaluation and line scans.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalConfig<T> {
    /// Certified absolute truncation error per ζ evaluation.
    pub target_abs_error: T,
    /// Upper limit on the number of accelerated-series terms.
    pub max_terms: usize,
    /// Grid step for line scans and zero searches.
    pub line_grid_step: T,
}

pub const MIN_TERMS: usize = 16;

impl<T: Real> Default for EvalConfig<T> {
    fn default() -> Self {
        Self {
            target_abs_error: lit(1e-12),
            max_terms: 20_000,
            line_grid_step: lit(0.05),
        }
    }
}

impl<T: Real> EvalConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_error > T::zero()) || !self.target_abs_error.is_finite() {
            return Err(Error::InvalidConfig("target_abs_error must be positive".into()));
        }
        if self.target_abs_error < T::min_positive_value() {
            return Err(Error::InvalidConfig(
                "target_abs_error below representable floor".into(),
            ));
        }
        if self.max_terms < MIN_TERMS {
            return Err(Error::InvalidConfig(format!("max_terms must be at least {MIN_TERMS}")));
        }
        if !(self.line_grid_step > T::zero()) || !self.line_grid_step.is_finite() {
            return Err(Error::InvalidConfig("line_grid_step must be positive".into()));
        }
        Ok(())
    }

    pub fn with_step(mut self, step: T) -> Self {
        self.line_grid_step = step;
        self
    }
}
