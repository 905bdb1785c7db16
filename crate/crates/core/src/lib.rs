//! Slow-light propagation of a weak, far-detuned probe through a harmonically
//! trapped cloud of two-level atoms.
//!
//! Layers, bottom-up:
//!
//! * [`numerics`]: polylogarithms, Fermi–Dirac functions, adaptive quadrature
//!   and bracketed root finding.
//! * [`gas`]: trap geometry, characteristic scales, chemical potentials and
//!   local-density profiles for Fermi, Bose and Boltzmann statistics.
//! * [`optics`]: susceptibility with the Lorentz–Lorenz local-field
//!   denominator, group velocity, effective length, pinhole-averaged delay
//!   and transmission.
//! * [`config`], [`sweep`] and [`output`]: the `section.key = value` run
//!   configuration, sweeps over temperature or detuning, and CSV/SVG writers.
//!
//! ```
//! use slowlight::{char_scales, GasSpec, Statistics, TrapGeometry};
//! use slowlight::constants::SODIUM_MASS;
//!
//! let spec = GasSpec { statistics: Statistics::Bose, n_atoms: 3.8e6, mass: SODIUM_MASS, scattering_length: 2.75e-9 };
//! let trap = TrapGeometry::new(2.0 * std::f64::consts::PI * 69.0, 1.0 / 3.0).unwrap();
//! let scales = char_scales(&spec, &trap).unwrap();
//! assert!((scales.r_bose - 17.76e-6).abs() < 0.1e-6);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod constants;
pub mod error;
pub mod gas;
pub mod numerics;
pub mod optics;
pub mod output;
pub mod sweep;

pub use config::{parse_config, OutputPaths, RunConfig, SweepAxis, SweepScale, SweepSpec};
pub use error::{Error, Result};
pub use gas::{
    char_scales, condensate_fraction, density, density_zero_t, mu_bose, mu_classical, mu_fermi, mu_fermi_normalized,
    thermo_point, CharScales, Cloud, GasSpec, Statistics, ThermoPoint, TrapGeometry,
};
pub use numerics::NumericTolerances;
pub use optics::{
    char_volume, delay_time, effective_group_velocity, effective_length, group_velocity_dispersion,
    group_velocity_local, polarizability, susceptibility, transmission, transmission_estimate, v_g_zero_t, PathLimits,
    ProbeParams, PropagationResult, Susceptibility,
};
pub use output::{emit_chart, format_csv, parse_csv, read_csv, render_chart, write_csv, CSV_HEADER};
pub use sweep::{run_sweep, SweepRow};
