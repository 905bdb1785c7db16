//! Pulse propagation through the cloud: effective length, pinhole-averaged
//! delay, effective group velocity and transmission.

use std::f64::consts::PI;

use super::{slowness_excess, susceptibility, ProbeParams};
use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result};
use crate::gas::{CharScales, Cloud, Statistics};
use crate::numerics::integrate_cylindrical;

/// Axial integration range for pinhole averages.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathLimits {
    /// z ∈ (−L, L) for the delay and (−L/2, L/2) for the transmission, with
    /// L the effective length.
    #[default]
    EffectiveLength,
    /// The whole column through the cloud.
    FullColumn,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationResult {
    /// Effective length L (m).
    pub length: f64,
    /// Pinhole-averaged delay t_d (s).
    pub delay: f64,
    /// v_g = L / t_d (m/s).
    pub group_velocity: f64,
    pub transmission: f64,
}

/// rms axial extent L = [(1/N) ∫ z² ρ dV]^{1/2}.
pub fn effective_length(cloud: &Cloud) -> Result<f64> {
    let eps = cloud.trap().epsilon;
    let z2 = cloud.radial_moment(2)? / (3.0 * eps * eps);
    Ok((z2 / cloud.spec().n_atoms).sqrt())
}

fn half_path(cloud: &Cloud, limits: PathLimits, length: f64) -> f64 {
    match limits {
        PathLimits::EffectiveLength => length,
        PathLimits::FullColumn => cloud.axial_extent(),
    }
}

fn pinhole_average<F>(cloud: &Cloud, probe: &ProbeParams, half_length: f64, f: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let radius = probe.pinhole_radius;
    let integral = integrate_cylindrical(|r, z| f(cloud.density(r, z)?), radius, half_length, cloud.tolerances())?;
    Ok(integral.value / (PI * radius * radius))
}

/// t_d = (1/πR²) ∫₀^R 2πr dr ∫ dz [1/v_g(r, z) − 1/c].
///
/// The vacuum transit is subtracted inside the integrand.
pub fn delay_time(cloud: &Cloud, probe: &ProbeParams, limits: PathLimits) -> Result<f64> {
    probe.validate()?;
    let half = half_path(cloud, limits, effective_length(cloud)?);
    pinhole_average(cloud, probe, half, |rho| slowness_excess(rho, probe))
}

/// 𝒯 = exp(α_T), α_T = −2(ω₀/c)(1/πR²) ∫₀^R 2πr dr ∫ dz χ″, over
/// z ∈ (−L/2, L/2) for [`PathLimits::EffectiveLength`].
pub fn transmission(cloud: &Cloud, probe: &ProbeParams, limits: PathLimits) -> Result<f64> {
    probe.validate()?;
    let half = match limits {
        PathLimits::EffectiveLength => 0.5 * effective_length(cloud)?,
        PathLimits::FullColumn => cloud.axial_extent(),
    };
    let column = pinhole_average(cloud, probe, half, |rho| susceptibility(rho, probe).map(|s| s.chi_abs))?;
    Ok((-2.0 * probe.omega_0 / SPEED_OF_LIGHT * column).exp())
}

/// Quick estimate 𝒯 ≈ exp(−2(ω₀/c) χ″(ρ_peak) L).
pub fn transmission_estimate(cloud: &Cloud, probe: &ProbeParams) -> Result<f64> {
    let chi = susceptibility(cloud.peak_density()?, probe)?;
    Ok((-2.0 * probe.omega_0 / SPEED_OF_LIGHT * chi.chi_abs * effective_length(cloud)?).exp())
}

/// L, t_d, v_g = L/t_d and 𝒯 for one cloud and probe, using the
/// effective-length path limits.
pub fn effective_group_velocity(cloud: &Cloud, probe: &ProbeParams) -> Result<PropagationResult> {
    probe.validate()?;
    let length = effective_length(cloud)?;
    let delay = pinhole_average(cloud, probe, length, |rho| slowness_excess(rho, probe))?;
    if !(delay > 0.0) {
        return Err(Error::ZeroDelay);
    }
    let transmission = transmission(cloud, probe, PathLimits::EffectiveLength)?;
    Ok(PropagationResult { length, delay, group_velocity: length / delay, transmission })
}

/// 1 − (1 − u)^p without cancellation for small u.
fn one_minus_power(u: f64, p: f64) -> f64 {
    -(p * (-u).ln_1p()).exp_m1()
}

/// Zero-temperature group velocity in closed form:
///
/// * Bose: 4ω₀²Δ² / (3√7 N ε c² γ) · R² R_B (1 − [1 − (R/R_B)²]^{5/2})^{−1}
/// * Fermi: √2 ω₀²Δ² / (9 N ε c² γ) · R_F³ [1 − (R/R_F)² + (R/R_F)⁴/3]^{−1}
///
/// `R = 0` returns the small-pinhole limit.
pub fn v_g_zero_t(statistics: Statistics, scales: &CharScales, probe: &ProbeParams) -> Result<f64> {
    let cloud = scales.cloud_radius(statistics).ok_or(Error::UnsupportedStatistics(statistics))?;
    let pinhole = probe.pinhole_radius;
    if !(pinhole >= 0.0) {
        return Err(Error::invalid("probe.pinhole_radius", "must be nonnegative"));
    }
    if pinhole > cloud {
        return Err(Error::PinholeExceedsCloud { pinhole, cloud });
    }
    let u = (pinhole / cloud).powi(2);
    let n_eps = scales.n_atoms * scales.epsilon;
    let c2 = SPEED_OF_LIGHT * SPEED_OF_LIGHT;
    let w2d2 = probe.omega_0.powi(2) * probe.delta.powi(2);
    match statistics {
        Statistics::Bose => {
            // R² / (1 − (1 − u)^{5/2}) = R_B² · u / (1 − (1 − u)^{5/2})
            let shape = if u < 1e-8 { 1.0 / (2.5 - 1.875 * u) } else { u / one_minus_power(u, 2.5) };
            Ok(4.0 * w2d2 / (3.0 * 7f64.sqrt() * n_eps * c2 * probe.gamma) * cloud.powi(3) * shape)
        }
        Statistics::Fermi => {
            Ok(2f64.sqrt() * w2d2 / (9.0 * n_eps * c2 * probe.gamma) * cloud.powi(3) / (1.0 - u + u * u / 3.0))
        }
        Statistics::Boltzmann => Err(Error::UnsupportedStatistics(statistics)),
    }
}
