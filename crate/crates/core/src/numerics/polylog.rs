//! Polylogarithm Li_s(z) = Σ z^j / j^s on the real line z ≤ 1 and the complete
//! Fermi–Dirac function f_ν(e^x) = −Li_ν(−e^x).
//!
//! Evaluation regimes:
//!
//! | region                         | method                                   |
//! |--------------------------------|------------------------------------------|
//! | \|z\| ≤ `series_cutoff`        | direct series                            |
//! | cutoff < z ≤ 1                 | expansion in μ = ln z about μ = 0        |
//! | ln(cutoff) < x ≤ 3             | same expansion at complex μ = x + iπ     |
//! | 3 < x < 30                     | quadrature of the Fermi–Dirac integral   |
//! | x ≥ 30                         | Sommerfeld asymptotic series             |
//!
//! The μ-expansion is
//! Li_s(e^μ) = Γ(1−s)(−μ)^{s−1} + Σ_k ζ(s−k) μ^k / k!, convergent for |μ| < 2π,
//! with the usual harmonic-number replacement of the pole term at integer s.

use std::cell::RefCell;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::rc::Rc;

use num_complex::Complex64;
use statrs::function::gamma::gamma;

use super::quadrature::integrate_1d;
use super::zeta::{riemann_zeta, zeta_over_factorial};
use super::NumericTolerances;
use crate::error::{Error, Result};

/// Upper end of the complex μ-expansion for Fermi–Dirac arguments.
pub(crate) const LOG_SERIES_MAX_X: f64 = 3.0;
/// Start of the Sommerfeld branch; the optimally truncated series is good to ~e^{−x}.
pub(crate) const SOMMERFELD_MIN_X: f64 = 30.0;

const SERIES_EPS: f64 = 1e-16;
const LOG_SERIES_TERMS: usize = 256;

/// Li_s(z) for real z ≤ 1 and order s > 0.
pub fn polylog(s: f64, z: f64, tol: &NumericTolerances) -> Result<f64> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(Error::invalid("order", format!("polylog order must be positive, got {s}")));
    }
    if z.is_nan() || z > 1.0 || (z == 1.0 && s <= 1.0) {
        return Err(Error::Domain { order: s, z });
    }
    if z == 0.0 {
        return Ok(0.0);
    }
    if z.abs() <= tol.series_cutoff {
        return branches::series(s, z, tol.max_iterations);
    }
    if z > 0.0 {
        if z == 1.0 {
            return Ok(riemann_zeta(s));
        }
        return Ok(branches::log_series(s, Complex64::new(z.ln(), 0.0), tol.max_iterations)?.re);
    }
    Ok(-fermi_dirac_f(s, (-z).ln(), tol)?)
}

/// f_ν(e^x) = −Li_ν(−e^x) = Γ(ν)^{−1} ∫₀^∞ t^{ν−1} / (e^{t−x} + 1) dt.
pub fn fermi_dirac_f(nu: f64, x: f64, tol: &NumericTolerances) -> Result<f64> {
    if !(nu > 0.0) || !nu.is_finite() {
        return Err(Error::invalid("order", format!("Fermi-Dirac order must be positive, got {nu}")));
    }
    if x.is_nan() {
        return Err(Error::invalid("x", "log-fugacity is NaN"));
    }
    if x == f64::NEG_INFINITY {
        return Ok(0.0);
    }
    if x <= tol.series_cutoff.ln() {
        return Ok(-branches::series(nu, -x.exp(), tol.max_iterations)?);
    }
    if x <= LOG_SERIES_MAX_X {
        let mu = Complex64::new(x, PI);
        return Ok(-branches::log_series(nu, mu, tol.max_iterations)?.re);
    }
    if x < SOMMERFELD_MIN_X {
        return branches::quadrature(nu, x, tol);
    }
    branches::sommerfeld(nu, x, tol)
}

pub(crate) mod branches {
    use super::*;

    pub(crate) fn series(s: f64, z: f64, max_terms: usize) -> Result<f64> {
        let mut sum = 0.0;
        let mut z_pow = 1.0;
        for j in 1..=max_terms {
            z_pow *= z;
            let term = z_pow / (j as f64).powf(s);
            sum += term;
            if term.abs() <= SERIES_EPS * sum.abs() {
                return Ok(sum);
            }
        }
        Err(Error::NoConvergence { what: "polylogarithm series", iterations: max_terms })
    }

    thread_local! {
        static COEFFS: RefCell<HashMap<u64, Rc<Vec<f64>>>> = RefCell::new(HashMap::new());
    }

    /// ζ(s − k)/k! for k < LOG_SERIES_TERMS, cached per order.
    fn coefficients(s: f64) -> Rc<Vec<f64>> {
        COEFFS.with(|cache| {
            cache
                .borrow_mut()
                .entry(s.to_bits())
                .or_insert_with(|| Rc::new((0..LOG_SERIES_TERMS).map(|k| zeta_over_factorial(s, k)).collect()))
                .clone()
        })
    }

    /// Li_s(e^μ) for |μ| < 2π.
    pub(crate) fn log_series(s: f64, mu: Complex64, max_terms: usize) -> Result<Complex64> {
        if mu == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(riemann_zeta(s), 0.0));
        }
        let integer_order = (s.fract() == 0.0).then_some(s as usize);
        let mut sum = match integer_order {
            Some(n) => {
                let harmonic: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
                let factorial = gamma(n as f64);
                mu.powi(n as i32 - 1) / factorial * (harmonic - (-mu).ln())
            }
            None => gamma(1.0 - s) * (-mu).powf(s - 1.0),
        };

        let coeffs = coefficients(s);
        let limit = coeffs.len().min(max_terms.max(32));
        let mut mu_pow = Complex64::new(1.0, 0.0);
        let mut quiet = 0;
        for (k, c) in coeffs.iter().take(limit).enumerate() {
            if integer_order != Some(k + 1) {
                let term = mu_pow * *c;
                sum += term;
                if term.norm() <= SERIES_EPS * sum.norm() {
                    quiet += 1;
                    // ζ vanishes at negative even integers, so a single tiny
                    // term does not signal convergence.
                    if quiet >= 3 {
                        return Ok(sum);
                    }
                } else {
                    quiet = 0;
                }
            }
            mu_pow *= mu;
        }
        Err(Error::NoConvergence { what: "polylogarithm log-series", iterations: limit })
    }

    /// Direct Fermi–Dirac integral with t = u², split at the Fermi surface.
    pub(crate) fn quadrature(nu: f64, x: f64, tol: &NumericTolerances) -> Result<f64> {
        let inner = tol.with_quadrature(1e-13);
        let integrand = |u: f64| -> Result<f64> {
            let occupation = 1.0 / ((u * u - x).exp() + 1.0);
            Ok(2.0 * u.powf(2.0 * nu - 1.0) * occupation)
        };
        let surface = x.max(0.0).sqrt();
        let tail = (x.max(0.0) + 60.0).sqrt();
        let below = integrate_1d(integrand, 0.0, surface, &inner)?;
        let above = integrate_1d(integrand, surface, tail, &inner)?;
        Ok((below + above) / gamma(nu))
    }

    /// Sommerfeld expansion, optimally truncated. The reflected term
    /// −cos(πν) f_ν(e^{−x}) is exact for integer ν and vanishes for half-integer ν.
    pub(crate) fn sommerfeld(nu: f64, x: f64, tol: &NumericTolerances) -> Result<f64> {
        let mut sum = 1.0;
        let mut falling = 1.0;
        let mut previous = f64::INFINITY;
        let x_inv_sq = 1.0 / (x * x);
        let mut x_pow = 1.0;
        for k in 1..=tol.max_iterations {
            let kf = k as f64;
            falling *= (nu - 2.0 * kf + 2.0) * (nu - 2.0 * kf + 1.0);
            if falling == 0.0 {
                break;
            }
            x_pow *= x_inv_sq;
            let term = 2.0 * (1.0 - 2f64.powf(1.0 - 2.0 * kf)) * riemann_zeta(2.0 * kf) * falling * x_pow;
            if term.abs() >= previous {
                break;
            }
            sum += term;
            previous = term.abs();
            if term.abs() <= SERIES_EPS * sum.abs() {
                break;
            }
        }
        let mut value = x.powf(nu) / gamma(nu + 1.0) * sum;
        if nu.fract() == 0.0 {
            let reflected = -series(nu, -(-x).exp(), tol.max_iterations)?;
            value -= (PI * nu).cos() * reflected;
        }
        Ok(value)
    }
}
