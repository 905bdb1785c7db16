//! Polylogarithms and complete Fermi-Dirac integrals across their branches.

use slowlight::numerics::{fermi_dirac_f, polylog, riemann_zeta};
use slowlight::NumericTolerances;

fn main() -> slowlight::Result<()> {
    let tol = NumericTolerances::default();

    println!("g_s(1) against zeta(s):");
    for s in [1.5, 2.0, 3.0] {
        println!("  s = {s}: Li = {:.12}, zeta = {:.12}", polylog(s, 1.0, &tol)?, riemann_zeta(s));
    }

    println!("\nBose functions g_3/2(z), g_3(z):");
    for z in [0.1, 0.5, 0.9, 0.99, 1.0] {
        println!("  z = {z:<5} {:.10}  {:.10}", polylog(1.5, z, &tol)?, polylog(3.0, z, &tol)?);
    }

    // f_nu(x) = -Li_nu(-e^x): series, log-expansion, quadrature, Sommerfeld.
    println!("\nFermi-Dirac f_3/2(e^x):");
    for x in [-5.0, -1.0, 0.0, 2.0, 10.0, 50.0] {
        let f = fermi_dirac_f(1.5, x, &tol)?;
        // x^{3/2} / Gamma(5/2) once the gas is degenerate
        let leading = x.max(0.0).powf(1.5) / (0.75 * std::f64::consts::PI.sqrt());
        println!("  x = {x:>5}: {f:.10e}  (degenerate limit {leading:.4e})");
    }
    Ok(())
}
