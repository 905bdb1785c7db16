//! Transmission against detuning at T = T_c / 2.
//!
//! `cargo run --release --example fig2_transmission [out-dir]` writes
//! fig2.csv and fig2.svg.

use std::path::PathBuf;

use slowlight::{emit_chart, parse_config, run_sweep, transmission_estimate, write_csv, Cloud, Statistics};

fn main() -> slowlight::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let cfg = parse_config(include_str!("../presets/fig2.preset"))?;
    let rows = run_sweep(&cfg)?;
    write_csv(&rows, &out.join("fig2.csv"))?;
    emit_chart(&rows, &cfg.sweep, &out.join("fig2.svg"))?;

    let t = 0.5 * cfg.scales.t_critical;
    println!("Delta/gamma  statistics  transmission  peak-density estimate");
    for r in rows.iter().filter(|r| [3.0, 20.0].contains(&r.x)) {
        let cloud = Cloud::new(&cfg.gas.with_statistics(r.statistics), &cfg.trap, t, &cfg.numerics)?;
        let estimate = transmission_estimate(&cloud, &cfg.probe.with_detuning(r.x * cfg.probe.gamma))?;
        println!("{:11.1}  {:>10}  {:12.5}  {:.5}", r.x, r.statistics.to_string(), r.transmission, estimate);
    }
    let bose = rows.iter().filter(|r| r.statistics == Statistics::Bose);
    let opaque = bose.clone().filter(|r| r.transmission < 0.1).count();
    println!("Bose points with transmission below 0.1: {opaque} of {}", bose.count());
    Ok(())
}
