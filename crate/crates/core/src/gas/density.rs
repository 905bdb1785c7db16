//! Local-density profiles ρ(r, z).

use std::f64::consts::PI;

use super::thermo::thermo_point;
use super::{char_scales, CharScales, GasSpec, Statistics, ThermoPoint, TrapGeometry};
use crate::constants::BOLTZMANN;
use crate::error::{Error, Result};
use crate::numerics::{fermi_dirac_f, integrate_1d, polylog, NumericTolerances};

/// Integration domains extend this many cloud radii.
const DOMAIN_RADII: f64 = 8.0;

#[derive(Debug, Clone, Copy)]
enum Profile {
    ZeroTemperature,
    Fermi { beta: f64, mu: f64, inv_lambda3: f64 },
    Bose { beta: f64, mu: f64, fugacity: f64, condensed: bool, inv_u: f64, inv_lambda3: f64 },
    Boltzmann { beta: f64, mu: f64, inv_lambda3: f64 },
}

/// A cloud at fixed temperature with its chemical potential resolved, ready
/// for repeated density evaluation.
#[derive(Debug, Clone)]
pub struct Cloud {
    spec: GasSpec,
    trap: TrapGeometry,
    scales: CharScales,
    thermo: ThermoPoint,
    profile: Profile,
    tol: NumericTolerances,
}

impl Cloud {
    pub fn new(spec: &GasSpec, trap: &TrapGeometry, temperature: f64, tol: &NumericTolerances) -> Result<Self> {
        let scales = char_scales(spec, trap)?;
        tol.validate()?;
        let thermo = thermo_point(spec, &scales, temperature, tol)?;
        let profile = if temperature == 0.0 {
            Profile::ZeroTemperature
        } else {
            let beta = 1.0 / (BOLTZMANN * temperature);
            let inv_lambda3 = scales.thermal_wavelength(temperature).powi(-3);
            match spec.statistics {
                Statistics::Fermi => Profile::Fermi { beta, mu: thermo.mu, inv_lambda3 },
                Statistics::Boltzmann => Profile::Boltzmann { beta, mu: thermo.mu, inv_lambda3 },
                Statistics::Bose => Profile::Bose {
                    beta,
                    mu: thermo.mu,
                    fugacity: thermo.fugacity,
                    condensed: temperature <= scales.t_critical,
                    inv_u: 1.0 / spec.interaction_strength(),
                    inv_lambda3,
                },
            }
        };
        Ok(Cloud { spec: *spec, trap: *trap, scales, thermo, profile, tol: *tol })
    }

    pub fn spec(&self) -> &GasSpec {
        &self.spec
    }

    pub fn trap(&self) -> &TrapGeometry {
        &self.trap
    }

    pub fn scales(&self) -> &CharScales {
        &self.scales
    }

    pub fn thermo(&self) -> &ThermoPoint {
        &self.thermo
    }

    pub fn temperature(&self) -> f64 {
        self.thermo.temperature
    }

    pub fn tolerances(&self) -> &NumericTolerances {
        &self.tol
    }

    /// ρ(r, z) in m⁻³.
    pub fn density(&self, r: f64, z: f64) -> Result<f64> {
        self.density_at_potential(self.trap.potential(self.spec.mass, r, z))
    }

    /// ρ as a function of the local trap energy V.
    pub fn density_at_potential(&self, v: f64) -> Result<f64> {
        let tol = &self.tol;
        let rho = match self.profile {
            Profile::ZeroTemperature => {
                let s2 = 2.0 * v / (self.spec.mass * self.scales.omega_r * self.scales.omega_r);
                zero_temperature_profile(self.spec.statistics, &self.scales, s2)?
            }
            Profile::Fermi { beta, mu, inv_lambda3 } => inv_lambda3 * fermi_dirac_f(1.5, beta * (mu - v), tol)?,
            Profile::Boltzmann { beta, mu, inv_lambda3 } => inv_lambda3 * (beta * (mu - v)).exp(),
            Profile::Bose { beta, mu, fugacity, condensed, inv_u, inv_lambda3 } => {
                if condensed {
                    let condensate = (mu - v).max(0.0) * inv_u;
                    condensate + inv_lambda3 * polylog(1.5, (-beta * (v - mu).abs()).exp(), tol)?
                } else {
                    inv_lambda3 * polylog(1.5, fugacity * (-beta * v).exp(), tol)?
                }
            }
        };
        Ok(rho)
    }

    pub fn peak_density(&self) -> Result<f64> {
        self.density_at_potential(0.0)
    }

    /// Thomas-Fermi condensate radius (radial), zero above T_c.
    pub fn condensate_radius(&self) -> f64 {
        match self.profile {
            Profile::Bose { mu, condensed: true, .. } => self.scales.radius_at_energy(mu),
            Profile::ZeroTemperature if self.spec.statistics == Statistics::Bose => self.scales.r_bose,
            _ => 0.0,
        }
    }

    /// Radial size used to truncate integration domains: the larger of the
    /// thermal radius √(k_B T / M ω_r²) and the degenerate cloud radius.
    pub fn radial_extent(&self) -> f64 {
        let thermal = (BOLTZMANN * self.temperature() / self.spec.mass).sqrt() / self.scales.omega_r;
        let degenerate = match self.spec.statistics {
            Statistics::Fermi => self.scales.r_fermi,
            Statistics::Bose => self.condensate_radius().max(self.scales.r_bose),
            Statistics::Boltzmann => 0.0,
        };
        DOMAIN_RADII * thermal.max(degenerate)
    }

    /// Axial truncation matching [`Cloud::radial_extent`].
    pub fn axial_extent(&self) -> f64 {
        self.radial_extent() / self.trap.epsilon
    }

    /// (4π/ε) ∫₀^∞ s^{2+k} ρ(s) ds over the scaled radius s² = r² + ε² z².
    ///
    /// k = 0 gives the atom number and ∫ z² ρ dV = moment(2) / (3ε²).
    pub fn radial_moment(&self, k: i32) -> Result<f64> {
        let s_max = self.radial_extent();
        let mut breaks = vec![0.0];
        for edge in [self.condensate_radius(), self.zero_t_fermi_edge()] {
            if edge > 0.0 && edge < s_max {
                breaks.push(edge);
            }
        }
        breaks.push(s_max);
        breaks.sort_by(f64::total_cmp);
        let mass = self.spec.mass;
        let w2 = self.scales.omega_r * self.scales.omega_r;
        let integrand = |s: f64| Ok(s.powi(2 + k) * self.density_at_potential(0.5 * mass * w2 * s * s)?);
        let mut total = 0.0;
        for pair in breaks.windows(2) {
            total += integrate_1d(integrand, pair[0], pair[1], &self.tol)?;
        }
        Ok(4.0 * PI / self.trap.epsilon * total)
    }

    fn zero_t_fermi_edge(&self) -> f64 {
        match (self.profile, self.spec.statistics) {
            (Profile::ZeroTemperature, Statistics::Fermi) => self.scales.r_fermi,
            _ => 0.0,
        }
    }
}

fn zero_temperature_profile(statistics: Statistics, scales: &CharScales, s2: f64) -> Result<f64> {
    let n = scales.n_atoms;
    let eps = scales.epsilon;
    match statistics {
        Statistics::Fermi => {
            let rf = scales.r_fermi;
            let gap = rf * rf - s2;
            Ok(if gap > 0.0 { 8.0 * n * eps / (PI * PI * rf.powi(6)) * gap.powf(1.5) } else { 0.0 })
        }
        Statistics::Bose => {
            let rb = scales.r_bose;
            let gap = rb * rb - s2;
            Ok(if gap > 0.0 { 15.0 * n * eps / (8.0 * PI * rb.powi(5)) * gap } else { 0.0 })
        }
        Statistics::Boltzmann => Err(Error::UnsupportedStatistics(Statistics::Boltzmann)),
    }
}

/// Closed-form T = 0 Thomas-Fermi profiles; zero outside the cloud.
pub fn density_zero_t(spec: &GasSpec, scales: &CharScales, r: f64, z: f64) -> Result<f64> {
    zero_temperature_profile(spec.statistics, scales, r * r + scales.epsilon * scales.epsilon * z * z)
}

/// ρ(r, z) at temperature T. Builds a [`Cloud`] per call; reuse a `Cloud`
/// for repeated evaluation.
pub fn density(
    spec: &GasSpec,
    trap: &TrapGeometry,
    temperature: f64,
    r: f64,
    z: f64,
    tol: &NumericTolerances,
) -> Result<f64> {
    Cloud::new(spec, trap, temperature, tol)?.density(r, z)
}
