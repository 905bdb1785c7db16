//! Special functions, adaptive quadrature and bracketed root finding.
//!
//! Every routine takes its accuracy targets from a [`NumericTolerances`]
//! value so that sweeps are reproducible bit for bit at fixed settings.

mod polylog;
mod quadrature;
mod roots;
mod zeta;

pub use polylog::{fermi_dirac_f, polylog};
pub use quadrature::{integrate_1d, integrate_1d_estimate, integrate_cylindrical, Estimate};
pub use roots::find_root;
pub use zeta::riemann_zeta;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericTolerances {
    /// Target relative error of adaptive quadrature.
    pub rel_tol_quadrature: f64,
    /// Relative bracket width at which root finding stops.
    pub rel_tol_root: f64,
    /// |z| below which polylogarithms are summed directly.
    pub series_cutoff: f64,
    /// Budget for series terms, root iterations and quadrature subintervals.
    pub max_iterations: usize,
}

impl Default for NumericTolerances {
    fn default() -> Self {
        NumericTolerances { rel_tol_quadrature: 1e-8, rel_tol_root: 1e-12, series_cutoff: 0.5, max_iterations: 1000 }
    }
}

impl NumericTolerances {
    pub fn validate(&self) -> Result<()> {
        let positive = |key: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(key, format!("must be finite and positive, got {v}")))
            }
        };
        positive("numerics.rel_tol_quadrature", self.rel_tol_quadrature)?;
        positive("numerics.rel_tol_root", self.rel_tol_root)?;
        if !(self.series_cutoff > 0.0 && self.series_cutoff < 1.0) {
            return Err(Error::invalid(
                "numerics.series_cutoff",
                format!("must lie in (0, 1), got {}", self.series_cutoff),
            ));
        }
        if self.max_iterations == 0 {
            return Err(Error::invalid("numerics.max_iterations", "must be at least 1"));
        }
        Ok(())
    }

    /// Same budget with a different quadrature target.
    pub fn with_quadrature(self, rel_tol_quadrature: f64) -> Self {
        NumericTolerances { rel_tol_quadrature, ..self }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_tolerances_are_valid() {
        NumericTolerances::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_tolerances() {
        let tol = NumericTolerances { series_cutoff: 1.0, ..Default::default() };
        assert!(tol.validate().is_err());
        let tol = NumericTolerances { rel_tol_root: 0.0, ..Default::default() };
        assert!(tol.validate().is_err());
        let tol = NumericTolerances { rel_tol_quadrature: f64::NAN, ..Default::default() };
        assert!(tol.validate().is_err());
    }
}
