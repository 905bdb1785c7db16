//! Optical response of the trapped cloud to a weak, far-detuned probe.
//!
//! Susceptibilities are dimensionless and written in the Gaussian-unit form
//! χ = αρ / (1 − (4π/3)αρ + iγ/2Δ), with the polarizability α carried as a
//! volume. Everything else is SI.

mod propagation;

use std::f64::consts::PI;

pub use propagation::{
    delay_time, effective_group_velocity, effective_length, transmission, transmission_estimate, v_g_zero_t,
    PathLimits, PropagationResult,
};

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeParams {
    /// Atomic resonance ω₀ (rad/s).
    pub omega_0: f64,
    /// Spontaneous emission rate γ (rad/s).
    pub gamma: f64,
    /// Detuning Δ (rad/s). Positive Δ is the normal-dispersion (slow-light) side.
    pub delta: f64,
    /// Pinhole radius R (m).
    pub pinhole_radius: f64,
    /// Probe wavenumber k_L (1/m).
    pub k_l: f64,
    /// |d_ge|² in J·m³ (Gaussian-form dipole strength).
    pub d_sq: f64,
    /// Include the Lorentz–Lorenz denominator.
    pub local_field: bool,
}

impl ProbeParams {
    /// Probe with k_L = ω₀/c and the dipole strength implied by γ,
    /// |d|² = 3ħγc³ / (4ω₀³).
    pub fn new(omega_0: f64, gamma: f64, delta: f64, pinhole_radius: f64) -> Result<Self> {
        let probe = ProbeParams {
            omega_0,
            gamma,
            delta,
            pinhole_radius,
            k_l: omega_0 / SPEED_OF_LIGHT,
            d_sq: 3.0 * HBAR * gamma * SPEED_OF_LIGHT.powi(3) / (4.0 * omega_0.powi(3)),
            local_field: true,
        };
        probe.validate()?;
        Ok(probe)
    }

    pub fn from_wavelength(wavelength: f64, gamma: f64, delta: f64, pinhole_radius: f64) -> Result<Self> {
        if !(wavelength > 0.0) {
            return Err(Error::invalid("probe.wavelength", format!("must be positive, got {wavelength}")));
        }
        Self::new(2.0 * PI * SPEED_OF_LIGHT / wavelength, gamma, delta, pinhole_radius)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = |key: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(key, format!("must be positive, got {v}")))
            }
        };
        positive("probe.resonance_frequency", self.omega_0)?;
        positive("probe.linewidth", self.gamma)?;
        positive("probe.pinhole_radius", self.pinhole_radius)?;
        positive("probe.k_l", self.k_l)?;
        if !self.delta.is_finite() {
            return Err(Error::invalid("probe.detuning", "must be finite"));
        }
        if self.delta == 0.0 {
            return Err(Error::ZeroDetuning);
        }
        if !(self.d_sq.is_finite() && self.d_sq >= 0.0) {
            return Err(Error::invalid("probe.dipole_sq", format!("must be nonnegative, got {}", self.d_sq)));
        }
        Ok(())
    }

    pub fn with_detuning(self, delta: f64) -> Self {
        ProbeParams { delta, ..self }
    }

    pub fn with_local_field(self, local_field: bool) -> Self {
        ProbeParams { local_field, ..self }
    }

    pub fn with_pinhole(self, pinhole_radius: f64) -> Self {
        ProbeParams { pinhole_radius, ..self }
    }

    /// |Δ| ≥ 3γ, the regime where the two-level response is trusted.
    pub fn is_far_detuned(&self) -> bool {
        self.delta.abs() >= 3.0 * self.gamma
    }
}

/// χ′ and the (nonnegative) absorptive part χ″.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Susceptibility {
    pub chi_re: f64,
    pub chi_abs: f64,
}

/// α = |d|² / (ħΔ); signed like Δ.
pub fn polarizability(probe: &ProbeParams) -> Result<f64> {
    if probe.delta == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    Ok(probe.d_sq / (HBAR * probe.delta))
}

/// V_α = 4π²γ / (Δ k_L³).
///
/// With the default dipole strength this is 4π times (4π/3)α.
pub fn char_volume(probe: &ProbeParams) -> Result<f64> {
    if probe.delta == 0.0 {
        return Err(Error::ZeroDetuning);
    }
    Ok(4.0 * PI * PI * probe.gamma / (probe.delta * probe.k_l.powi(3)))
}

/// Lorentz–Lorenz denominator 1 − (4π/3)αρ, or 1 when local fields are off.
fn local_field_factor(alpha_rho: f64, probe: &ProbeParams) -> f64 {
    if probe.local_field {
        1.0 - 4.0 * PI / 3.0 * alpha_rho
    } else {
        1.0
    }
}

/// Clausius–Mossotti susceptibility at number density ρ (m⁻³).
pub fn susceptibility(rho: f64, probe: &ProbeParams) -> Result<Susceptibility> {
    if !(rho >= 0.0) {
        return Err(Error::invalid("density", format!("must be nonnegative, got {rho}")));
    }
    let x = polarizability(probe)? * rho;
    let d = local_field_factor(x, probe);
    let g = probe.gamma / (2.0 * probe.delta);
    let denominator = d * d + g * g;
    if !(denominator > f64::MIN_POSITIVE) {
        return Err(Error::ResonantDenominator);
    }
    // Im[x / (d + ig)] = −x g / (d² + g²); x g ∝ 1/Δ² so χ″ ≥ 0 on both sides.
    Ok(Susceptibility { chi_re: x * d / denominator, chi_abs: x * g / denominator })
}

/// 1/v_g − 1/c from the closed form v_g = c / (1 + 2πω₀αρ / (Δ(1 − 4παρ/3)²)).
pub(crate) fn slowness_excess(rho: f64, probe: &ProbeParams) -> Result<f64> {
    let alpha = polarizability(probe)?;
    let d = local_field_factor(alpha * rho, probe);
    if d == 0.0 {
        return Err(Error::ResonantDenominator);
    }
    Ok(2.0 * PI * probe.omega_0 * alpha * rho / (probe.delta * d * d) / SPEED_OF_LIGHT)
}

/// Local group velocity, closed form.
pub fn group_velocity_local(rho: f64, probe: &ProbeParams) -> Result<f64> {
    if !(rho >= 0.0) {
        return Err(Error::invalid("density", format!("must be nonnegative, got {rho}")));
    }
    Ok(1.0 / (1.0 / SPEED_OF_LIGHT + slowness_excess(rho, probe)?))
}

/// Local group velocity from c / (1 + 2πχ′ + 2πω ∂χ′/∂ω), differentiating the
/// full Clausius–Mossotti χ′ numerically at ω = ω₀.
///
/// Detuning is measured so that increasing probe frequency decreases Δ,
/// which puts positive Δ on the normal-dispersion side as the closed form
/// assumes.
pub fn group_velocity_dispersion(rho: f64, probe: &ProbeParams) -> Result<f64> {
    let h = 1e-4 * probe.delta.abs();
    let chi_at = |delta: f64| susceptibility(rho, &probe.with_detuning(delta)).map(|s| s.chi_re);
    let chi = chi_at(probe.delta)?;
    let dchi_ddelta = (chi_at(probe.delta + h)? - chi_at(probe.delta - h)?) / (2.0 * h);
    let dchi_domega = -dchi_ddelta;
    Ok(SPEED_OF_LIGHT / (1.0 + 2.0 * PI * chi + 2.0 * PI * probe.omega_0 * dchi_domega))
}
