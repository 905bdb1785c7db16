//! Trapped-gas thermodynamics in the local density approximation.
//!
//! The trap is V(r, z) = M ω_r² (r² + ε² z²) / 2 with the probe travelling
//! along z. Characteristic temperatures use the ideal-gas trap results with
//! the geometric-mean frequency ω̄ = ε^{1/3} ω_r.

mod density;
mod thermo;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

pub use density::{density, density_zero_t, Cloud};
pub use thermo::{
    condensate_fraction, mu_bose, mu_classical, mu_fermi, mu_fermi_normalized, thermo_point, ThermoPoint,
};

use crate::constants::{BOLTZMANN, HBAR, PLANCK};
use crate::error::{Error, Result};
use crate::numerics::riemann_zeta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statistics {
    Fermi,
    Bose,
    Boltzmann,
}

impl Statistics {
    pub const ALL: [Statistics; 3] = [Statistics::Fermi, Statistics::Bose, Statistics::Boltzmann];

    pub fn as_str(self) -> &'static str {
        match self {
            Statistics::Fermi => "fermi",
            Statistics::Bose => "bose",
            Statistics::Boltzmann => "boltzmann",
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Statistics {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fermi" => Ok(Statistics::Fermi),
            "bose" => Ok(Statistics::Bose),
            "boltzmann" | "classical" => Ok(Statistics::Boltzmann),
            other => Err(format!("unknown statistics `{other}` (expected fermi, bose or boltzmann)")),
        }
    }
}

/// Cylindrically symmetric harmonic trap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapGeometry {
    /// Radial angular frequency ω_r (rad/s).
    pub omega_r: f64,
    /// Aspect ratio ε = ω_z / ω_r.
    pub epsilon: f64,
}

impl TrapGeometry {
    pub fn new(omega_r: f64, epsilon: f64) -> Result<Self> {
        let trap = TrapGeometry { omega_r, epsilon };
        trap.validate()?;
        Ok(trap)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega_r.is_finite() && self.omega_r > 0.0) {
            return Err(Error::invalid("trap.radial_frequency", format!("must be positive, got {}", self.omega_r)));
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(Error::invalid("trap.epsilon", format!("must be positive, got {}", self.epsilon)));
        }
        Ok(())
    }

    /// V(r, z) for an atom of the given mass.
    pub fn potential(&self, mass: f64, r: f64, z: f64) -> f64 {
        0.5 * mass * self.omega_r * self.omega_r * (r * r + self.epsilon * self.epsilon * z * z)
    }

    /// Geometric-mean trap frequency ω̄ = ε^{1/3} ω_r.
    pub fn omega_bar(&self) -> f64 {
        self.epsilon.cbrt() * self.omega_r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasSpec {
    pub statistics: Statistics,
    /// Total atom number N (kept real-valued for scaling studies).
    pub n_atoms: f64,
    /// Atomic mass M (kg).
    pub mass: f64,
    /// s-wave scattering length a_sc (m); only Bose statistics uses it.
    pub scattering_length: f64,
}

impl GasSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.n_atoms.is_finite() && self.n_atoms >= 1.0) {
            return Err(Error::invalid("gas.n_atoms", format!("must be at least 1, got {}", self.n_atoms)));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::invalid("gas.mass", format!("must be positive, got {}", self.mass)));
        }
        if !(self.scattering_length.is_finite() && self.scattering_length >= 0.0) {
            return Err(Error::invalid(
                "gas.scattering_length",
                format!("must be nonnegative, got {}", self.scattering_length),
            ));
        }
        if self.statistics == Statistics::Bose && self.scattering_length == 0.0 {
            return Err(Error::invalid(
                "gas.scattering_length",
                "the Thomas-Fermi condensate needs a positive scattering length",
            ));
        }
        Ok(())
    }

    pub fn with_statistics(self, statistics: Statistics) -> Self {
        GasSpec { statistics, ..self }
    }

    /// Contact coupling U = 4πħ² a_sc / M.
    pub fn interaction_strength(&self) -> f64 {
        4.0 * PI * HBAR * HBAR * self.scattering_length / self.mass
    }
}

/// Characteristic scales of a trapped cloud of N atoms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharScales {
    pub n_atoms: f64,
    pub mass: f64,
    pub omega_r: f64,
    pub epsilon: f64,
    /// E_F = ħω̄ (6N)^{1/3}
    pub e_fermi: f64,
    pub t_fermi: f64,
    /// k_B T_c = ħω̄ (N/ζ(3))^{1/3}
    pub t_critical: f64,
    /// √(ħ/(M ω_r))
    pub a_r: f64,
    /// √(ħ/(M ε^{1/3} ω_r))
    pub a_ho: f64,
    /// (48 N ε)^{1/6} a_r
    pub r_fermi: f64,
    /// (15 N ε a_sc / a_ho)^{1/5} a_r
    pub r_bose: f64,
    /// μ_TF = η k_B T_c
    pub mu_tf: f64,
    pub eta: f64,
}

impl CharScales {
    /// Thermal de Broglie wavelength Λ_T = h / √(2π M k_B T).
    pub fn thermal_wavelength(&self, temperature: f64) -> f64 {
        PLANCK / (2.0 * PI * self.mass * BOLTZMANN * temperature).sqrt()
    }

    pub fn omega_bar(&self) -> f64 {
        self.epsilon.cbrt() * self.omega_r
    }

    /// Radius of a potential-energy contour: V = M ω_r² s² / 2.
    pub fn radius_at_energy(&self, energy: f64) -> f64 {
        (2.0 * energy.max(0.0) / self.mass).sqrt() / self.omega_r
    }

    /// Zero-temperature cloud radius for the statistics, if it has one.
    pub fn cloud_radius(&self, statistics: Statistics) -> Option<f64> {
        match statistics {
            Statistics::Fermi => Some(self.r_fermi),
            Statistics::Bose => Some(self.r_bose),
            Statistics::Boltzmann => None,
        }
    }
}

pub fn char_scales(spec: &GasSpec, trap: &TrapGeometry) -> Result<CharScales> {
    spec.validate()?;
    trap.validate()?;
    let n = spec.n_atoms;
    let eps = trap.epsilon;
    let zeta3 = riemann_zeta(3.0);
    let hbar_omega_bar = HBAR * trap.omega_bar();

    let a_r = (HBAR / (spec.mass * trap.omega_r)).sqrt();
    let a_ho = (HBAR / (spec.mass * trap.omega_bar())).sqrt();
    let e_fermi = hbar_omega_bar * (6.0 * n).cbrt();
    let t_critical = hbar_omega_bar * (n / zeta3).cbrt() / BOLTZMANN;
    let eta = 0.5 * zeta3.cbrt() * (15.0 * n.powf(1.0 / 6.0) * spec.scattering_length / a_ho).powf(0.4);

    Ok(CharScales {
        n_atoms: n,
        mass: spec.mass,
        omega_r: trap.omega_r,
        epsilon: eps,
        e_fermi,
        t_fermi: e_fermi / BOLTZMANN,
        t_critical,
        a_r,
        a_ho,
        r_fermi: (48.0 * n * eps).powf(1.0 / 6.0) * a_r,
        r_bose: (15.0 * n * eps * spec.scattering_length / a_ho).powf(0.2) * a_r,
        mu_tf: eta * BOLTZMANN * t_critical,
        eta,
    })
}
