//! Characteristic scales of the sodium cloud used throughout the examples.

use std::f64::consts::PI;

use slowlight::constants::SODIUM_MASS;
use slowlight::{char_scales, GasSpec, Statistics, TrapGeometry};

fn main() -> slowlight::Result<()> {
    let spec = GasSpec { statistics: Statistics::Bose, n_atoms: 3.8e6, mass: SODIUM_MASS, scattering_length: 2.75e-9 };
    let trap = TrapGeometry::new(2.0 * PI * 69.0, 1.0 / 3.0)?;
    let s = char_scales(&spec, &trap)?;

    println!("a_r   = {:7.3} um", s.a_r * 1e6);
    println!("a_ho  = {:7.3} um", s.a_ho * 1e6);
    println!("R_B   = {:7.3} um", s.r_bose * 1e6);
    println!("R_F   = {:7.3} um", s.r_fermi * 1e6);
    println!("T_c   = {:7.2} nK", s.t_critical * 1e9);
    println!("T_F   = {:7.2} nK  (T_F/T_c = {:.5})", s.t_fermi * 1e9, s.t_fermi / s.t_critical);
    println!("eta   = {:7.4}", s.eta);
    println!("Lambda_T(T_c) = {:.3} um", s.thermal_wavelength(s.t_critical) * 1e6);
    Ok(())
}
