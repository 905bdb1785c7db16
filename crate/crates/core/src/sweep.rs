//! Temperature and detuning sweeps.

use rayon::prelude::*;

use crate::config::{RunConfig, SweepAxis};
use crate::error::{Error, Result};
use crate::gas::{Cloud, Statistics};
use crate::optics::effective_group_velocity;

/// One line of the output table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub statistics: Statistics,
    /// Reduced temperature or Δ/γ, depending on the sweep axis.
    pub x: f64,
    pub length_m: f64,
    pub delay_s: f64,
    pub group_velocity_mps: f64,
    pub transmission: f64,
}

fn evaluate(config: &RunConfig, statistics: Statistics, x: f64) -> Result<SweepRow> {
    let t_ref = config.sweep.reference_temperature(&config.scales);
    let (temperature, probe) = match config.sweep.axis {
        SweepAxis::Temperature => (x * t_ref, config.probe),
        SweepAxis::Detuning => {
            let t = config.sweep.temperature.expect("validated detuning sweep");
            (t * t_ref, config.probe.with_detuning(x * config.probe.gamma))
        }
    };
    let cloud = Cloud::new(&config.gas.with_statistics(statistics), &config.trap, temperature, &config.numerics)?;
    let result = effective_group_velocity(&cloud, &probe)?;
    Ok(SweepRow {
        statistics,
        x,
        length_m: result.length,
        delay_s: result.delay,
        group_velocity_mps: result.group_velocity,
        transmission: result.transmission,
    })
}

/// Evaluates every (statistics, x) pair of the sweep on the current rayon
/// pool. Rows come back ordered by statistics, then x; the first failing
/// point in that order aborts the run.
pub fn run_sweep(config: &RunConfig) -> Result<Vec<SweepRow>> {
    let grid = config.sweep.grid();
    let mut statistics = config.sweep.statistics.clone();
    statistics.sort();
    let points: Vec<(Statistics, f64)> = statistics.iter().flat_map(|&s| grid.iter().map(move |&x| (s, x))).collect();

    let results: Vec<Result<SweepRow>> = points.par_iter().map(|&(s, x)| evaluate(config, s, x)).collect();
    results
        .into_iter()
        .zip(&points)
        .map(|(r, &(statistics, x))| r.map_err(|e| Error::SweepPoint { statistics, x, source: Box::new(e) }))
        .collect()
}
