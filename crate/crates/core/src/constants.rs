//! Physical constants in SI units (CODATA 2018 exact/recommended values).

pub const HBAR: f64 = 1.054_571_817e-34;
pub const PLANCK: f64 = 6.626_070_15e-34;
pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
pub const ATOMIC_MASS_UNIT: f64 = 1.660_539_066_60e-27;

/// Mass of ²³Na.
pub const SODIUM_MASS: f64 = 22.989_769_28 * ATOMIC_MASS_UNIT;
