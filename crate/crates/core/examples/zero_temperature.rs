//! Closed-form zero-temperature group velocities: pinhole dependence and
//! atom-number scaling, compared with the numerical pipeline.

use slowlight::{
    char_scales, delay_time, effective_length, parse_config, v_g_zero_t, Cloud, GasSpec, PathLimits, Statistics,
};

fn main() -> slowlight::Result<()> {
    let cfg = parse_config(include_str!("../presets/fig1.preset"))?;
    let probe = cfg.probe.with_local_field(false);

    for stats in [Statistics::Bose, Statistics::Fermi] {
        let radius = cfg.scales.cloud_radius(stats).expect("degenerate statistics");
        let cloud = Cloud::new(&cfg.gas.with_statistics(stats), &cfg.trap, 0.0, &cfg.numerics)?;
        let length = effective_length(&cloud)?;
        println!("{stats}: cloud radius {:.2} um, L = {:.2} um", radius * 1e6, length * 1e6);
        println!("  R/R_cloud   closed form (m/s)   pipeline (m/s)   ratio");
        for f in [0.01, 0.25, 0.5, 0.75, 1.0] {
            let p = probe.with_pinhole(f * radius);
            let closed = v_g_zero_t(stats, &cfg.scales, &p)?;
            let numeric = length / delay_time(&cloud, &p, PathLimits::FullColumn)?;
            println!("  {f:9.2}   {closed:17.3}   {numeric:14.3}   {:.6}", numeric / closed);
        }
    }

    println!("\nN scaling with R = R_cloud / 2:");
    for n_atoms in [1e5, 1e6, 1e7, 1e8] {
        let spec = GasSpec { n_atoms, ..cfg.gas };
        let scales = char_scales(&spec, &cfg.trap)?;
        let v = |s: Statistics| v_g_zero_t(s, &scales, &probe.with_pinhole(0.5 * scales.cloud_radius(s).unwrap()));
        println!(
            "  N = {n_atoms:.0e}: bose {:10.3} m/s, fermi {:10.3} m/s",
            v(Statistics::Bose)?,
            v(Statistics::Fermi)?
        );
    }
    Ok(())
}
