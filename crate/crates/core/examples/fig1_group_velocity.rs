//! Group velocity against temperature for the three statistics.
//!
//! `cargo run --release --example fig1_group_velocity [out-dir]` writes
//! fig1.csv and fig1.svg.

use std::path::PathBuf;

use slowlight::{emit_chart, parse_config, run_sweep, write_csv, Statistics};

fn main() -> slowlight::Result<()> {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    let cfg = parse_config(include_str!("../presets/fig1.preset"))?;
    let rows = run_sweep(&cfg)?;
    write_csv(&rows, &out.join("fig1.csv"))?;
    emit_chart(&rows, &cfg.sweep, &out.join("fig1.svg"))?;

    println!("  T/T_c     fermi      bose  boltzmann   (m/s)");
    let curve = |s: Statistics| rows.iter().filter(move |r| r.statistics == s);
    for ((f, b), c) in
        curve(Statistics::Fermi).zip(curve(Statistics::Bose)).zip(curve(Statistics::Boltzmann)).step_by(7)
    {
        println!("{:7.3} {:9.1} {:9.1} {:9.1}", f.x, f.group_velocity_mps, b.group_velocity_mps, c.group_velocity_mps);
    }
    println!("wrote {}", out.join("fig1.{csv,svg}").display());
    Ok(())
}
