//! Radial and axial density cuts for the three statistics at T = T_c / 2,
//! with a normalization check by cylindrical quadrature.

use std::f64::consts::PI;

use slowlight::constants::SODIUM_MASS;
use slowlight::numerics::integrate_cylindrical;
use slowlight::{char_scales, Cloud, GasSpec, NumericTolerances, Statistics, TrapGeometry};

fn main() -> slowlight::Result<()> {
    let trap = TrapGeometry::new(2.0 * PI * 69.0, 1.0 / 3.0)?;
    let tol = NumericTolerances::default();
    let base = GasSpec { statistics: Statistics::Bose, n_atoms: 3.8e6, mass: SODIUM_MASS, scattering_length: 2.75e-9 };
    let t = 0.5 * char_scales(&base, &trap)?.t_critical;

    let clouds: Vec<Cloud> = Statistics::ALL
        .iter()
        .map(|&s| Cloud::new(&base.with_statistics(s), &trap, t, &tol))
        .collect::<Result<_, _>>()?;

    println!("T = {:.1} nK", t * 1e9);
    for c in &clouds {
        let n = integrate_cylindrical(|r, z| c.density(r, z), c.radial_extent(), c.axial_extent(), &tol)?;
        println!(
            "{:>9}: mu/k_B = {:8.2} nK, peak {:.3e} m^-3, N = {:.6e}",
            c.spec().statistics.to_string(),
            c.thermo().mu / slowlight::constants::BOLTZMANN * 1e9,
            c.peak_density()?,
            n.value
        );
    }

    println!("\n r (um)      fermi       bose  boltzmann");
    for k in 0..=12 {
        let r = 5e-6 * k as f64;
        let row: Vec<String> =
            clouds.iter().map(|c| c.density(r, 0.0).map(|d| format!("{d:10.3e}"))).collect::<Result<_, _>>()?;
        println!("{:7.1} {}", r * 1e6, row.join(" "));
    }
    Ok(())
}
