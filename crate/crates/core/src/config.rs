//! Line-oriented run configuration.
//!
//! ```text
//! # comment
//! gas.n_atoms = 3.8e6
//! trap.radial_frequency = 69 Hz      # ordinary frequency, stored ×2π
//! probe.pinhole_radius = 7.5 um
//! probe.detuning = 10                # units of the linewidth
//! sweep.axis = temperature
//! ```
//!
//! Lengths accept `m`, `cm`, `mm`, `um`/`µm` and `nm`; frequencies `Hz`,
//! `kHz`, `MHz`, `GHz`, `THz` or an explicit angular `rad/s`; masses `kg` or
//! `u`. Dimensionless values may be written as fractions such as `1/3`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::str::FromStr;

use crate::constants::ATOMIC_MASS_UNIT;
use crate::error::{Error, Result};
use crate::gas::{char_scales, CharScales, GasSpec, Statistics, TrapGeometry};
use crate::numerics::NumericTolerances;
use crate::optics::ProbeParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// x = T / T_ref with T_ref = T_F for Fermi-only runs, T_c otherwise.
    Temperature,
    /// x = Δ / γ.
    Detuning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SweepScale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: SweepScale,
    pub statistics: Vec<Statistics>,
    /// Fixed reduced temperature of a detuning sweep.
    pub temperature: Option<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(Error::invalid(
                "sweep.stop",
                format!("need start < stop, got {} and {}", self.start, self.stop),
            ));
        }
        if !(self.start > 0.0) {
            return Err(Error::invalid("sweep.start", format!("must be positive, got {}", self.start)));
        }
        if self.points < 2 {
            return Err(Error::invalid("sweep.points", format!("need at least 2, got {}", self.points)));
        }
        if self.statistics.is_empty() {
            return Err(Error::invalid("sweep.statistics", "empty list"));
        }
        match (self.axis, self.temperature) {
            (SweepAxis::Detuning, None) => {
                Err(Error::invalid("sweep.temperature", "required when sweep.axis = detuning"))
            }
            (SweepAxis::Detuning, Some(t)) if !(t > 0.0 && t.is_finite()) => {
                Err(Error::invalid("sweep.temperature", format!("must be positive, got {t}")))
            }
            (SweepAxis::Temperature, Some(_)) => {
                Err(Error::invalid("sweep.temperature", "only valid when sweep.axis = detuning"))
            }
            _ => Ok(()),
        }
    }

    /// Grid points, endpoints exact.
    pub fn grid(&self) -> Vec<f64> {
        let last = (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    return self.stop;
                }
                let t = i as f64 / last;
                match self.scale {
                    SweepScale::Linear => self.start + t * (self.stop - self.start),
                    SweepScale::Log => (self.start.ln() + t * (self.stop / self.start).ln()).exp(),
                }
            })
            .collect()
    }

    /// Temperatures are reduced by T_F only when every curve is Fermi.
    pub fn reference_temperature(&self, scales: &CharScales) -> f64 {
        if self.statistics.iter().all(|&s| s == Statistics::Fermi) {
            scales.t_fermi
        } else {
            scales.t_critical
        }
    }

    pub fn x_label(&self) -> &'static str {
        match self.axis {
            SweepAxis::Detuning => "Δ / γ",
            SweepAxis::Temperature if self.statistics.iter().all(|&s| s == Statistics::Fermi) => "T / T_F",
            SweepAxis::Temperature => "T / T_c",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OutputPaths {
    pub csv: Option<PathBuf>,
    pub chart: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Gas parameters; `statistics` is overridden per sweep curve.
    pub gas: GasSpec,
    pub trap: TrapGeometry,
    /// Probe at the configured detuning (or at γ for detuning sweeps).
    pub probe: ProbeParams,
    pub sweep: SweepSpec,
    pub numerics: NumericTolerances,
    pub output: OutputPaths,
    pub scales: CharScales,
}

impl RunConfig {
    pub fn with_local_field(mut self, on: bool) -> Self {
        self.probe.local_field = on;
        self
    }
}

impl FromStr for RunConfig {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_config(s)
    }
}

struct Entry {
    line: usize,
    value: String,
}

struct Document {
    entries: BTreeMap<String, Entry>,
}

const KNOWN_KEYS: &[&str] = &[
    "gas.n_atoms",
    "gas.mass",
    "gas.scattering_length",
    "trap.radial_frequency",
    "trap.epsilon",
    "probe.resonance_frequency",
    "probe.wavelength",
    "probe.linewidth",
    "probe.detuning",
    "probe.pinhole_radius",
    "probe.dipole_sq",
    "probe.local_field",
    "sweep.axis",
    "sweep.start",
    "sweep.stop",
    "sweep.points",
    "sweep.scale",
    "sweep.statistics",
    "sweep.temperature",
    "numerics.rel_tol_quadrature",
    "numerics.rel_tol_root",
    "numerics.series_cutoff",
    "numerics.max_iterations",
    "output.csv",
    "output.chart",
];

fn tokenize(text: &str) -> Result<Document> {
    let mut entries = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Parse {
            line,
            message: format!("expected `section.key = value`, got `{content}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        if key.split('.').count() != 2 || key.split('.').any(str::is_empty) {
            return Err(Error::Parse { line, message: format!("key `{key}` is not of the form section.key") });
        }
        if !KNOWN_KEYS.contains(&key) {
            return Err(Error::Parse { line, message: format!("unknown key `{key}`") });
        }
        if value.is_empty() {
            return Err(Error::Parse { line, message: format!("missing value for `{key}`") });
        }
        if let Some(previous) = entries.get(key) {
            let Entry { line: first, .. } = previous;
            return Err(Error::Parse { line, message: format!("duplicate key `{key}` (first set on line {first})") });
        }
        entries.insert(key.to_string(), Entry { line, value: value.to_string() });
    }
    if entries.is_empty() {
        return Err(Error::Parse { line: 1, message: "configuration is empty".into() });
    }
    Ok(Document { entries })
}

#[derive(Clone, Copy)]
enum Unit {
    None,
    Length,
    Frequency,
    Mass,
}

impl Document {
    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.get(key)
    }

    fn require(&self, key: &str) -> Result<&Entry> {
        self.get(key).ok_or_else(|| Error::invalid(key, "missing"))
    }

    fn quantity(&self, key: &str, unit: Unit) -> Result<Option<f64>> {
        self.get(key)
            .map(|e| {
                parse_quantity(&e.value, unit)
                    .map_err(|m| Error::Parse { line: e.line, message: format!("{key}: {m}") })
            })
            .transpose()
    }

    fn required_quantity(&self, key: &str, unit: Unit) -> Result<f64> {
        self.require(key)?;
        Ok(self.quantity(key, unit)?.expect("present"))
    }

    fn parsed<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        self.get(key)
            .map(|e| {
                e.value.parse::<T>().map_err(|err| Error::Parse { line: e.line, message: format!("{key}: {err}") })
            })
            .transpose()
    }
}

fn parse_number(text: &str) -> std::result::Result<f64, String> {
    let text = text.trim();
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("`{text}` is not a number"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("`{text}` is not a number"))?;
            num / den
        }
        None => text.parse().map_err(|_| format!("`{text}` is not a number"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{text}` is not finite"))
    }
}

fn parse_quantity(text: &str, unit: Unit) -> std::result::Result<f64, String> {
    let (number, suffix) = match text.find(|c: char| c.is_whitespace()) {
        Some(split) => (&text[..split], text[split..].trim()),
        None => (text, ""),
    };
    let value = parse_number(number)?;
    // (multiplier, divisor); dividing by powers of ten keeps "7.5 um" exact.
    let (mul, div) = match (unit, suffix) {
        (Unit::Frequency, "") => (2.0 * PI, 1.0),
        (_, "") => (1.0, 1.0),
        (Unit::Length, "m") => (1.0, 1.0),
        (Unit::Length, "cm") => (1.0, 1e2),
        (Unit::Length, "mm") => (1.0, 1e3),
        (Unit::Length, "um" | "µm" | "μm") => (1.0, 1e6),
        (Unit::Length, "nm") => (1.0, 1e9),
        (Unit::Frequency, "Hz") => (2.0 * PI, 1.0),
        (Unit::Frequency, "kHz") => (2.0 * PI * 1e3, 1.0),
        (Unit::Frequency, "MHz") => (2.0 * PI * 1e6, 1.0),
        (Unit::Frequency, "GHz") => (2.0 * PI * 1e9, 1.0),
        (Unit::Frequency, "THz") => (2.0 * PI * 1e12, 1.0),
        (Unit::Frequency, "rad/s") => (1.0, 1.0),
        (Unit::Mass, "kg") => (1.0, 1.0),
        (Unit::Mass, "u") => (ATOMIC_MASS_UNIT, 1.0),
        (_, other) => return Err(format!("unsupported unit `{other}`")),
    };
    Ok(value / div * mul)
}

fn parse_bool(key: &str, entry: &Entry) -> Result<bool> {
    match entry.value.to_ascii_lowercase().as_str() {
        "true" | "on" | "yes" => Ok(true),
        "false" | "off" | "no" => Ok(false),
        other => {
            Err(Error::Parse { line: entry.line, message: format!("{key}: expected true or false, got `{other}`") })
        }
    }
}

fn parse_statistics(entry: &Entry) -> Result<Vec<Statistics>> {
    let mut list = Vec::new();
    for item in entry.value.split(',') {
        let s: Statistics =
            item.parse().map_err(|m| Error::Parse { line: entry.line, message: format!("sweep.statistics: {m}") })?;
        if list.contains(&s) {
            return Err(Error::Parse { line: entry.line, message: format!("sweep.statistics: `{s}` listed twice") });
        }
        list.push(s);
    }
    list.sort();
    Ok(list)
}

fn parse_axis(entry: &Entry) -> Result<SweepAxis> {
    match entry.value.to_ascii_lowercase().as_str() {
        "temperature" => Ok(SweepAxis::Temperature),
        "detuning" => Ok(SweepAxis::Detuning),
        other => Err(Error::Parse {
            line: entry.line,
            message: format!("sweep.axis: expected temperature or detuning, got `{other}`"),
        }),
    }
}

fn parse_scale(entry: &Entry) -> Result<SweepScale> {
    match entry.value.to_ascii_lowercase().as_str() {
        "linear" => Ok(SweepScale::Linear),
        "log" => Ok(SweepScale::Log),
        other => Err(Error::Parse {
            line: entry.line,
            message: format!("sweep.scale: expected linear or log, got `{other}`"),
        }),
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let doc = tokenize(text)?;

    let sweep = SweepSpec {
        axis: parse_axis(doc.require("sweep.axis")?)?,
        start: doc.required_quantity("sweep.start", Unit::None)?,
        stop: doc.required_quantity("sweep.stop", Unit::None)?,
        points: doc.parsed::<usize>("sweep.points")?.ok_or_else(|| Error::invalid("sweep.points", "missing"))?,
        scale: doc.get("sweep.scale").map(parse_scale).transpose()?.unwrap_or_default(),
        statistics: doc
            .get("sweep.statistics")
            .map(parse_statistics)
            .transpose()?
            .unwrap_or_else(|| Statistics::ALL.to_vec()),
        temperature: doc.quantity("sweep.temperature", Unit::None)?,
    };
    sweep.validate()?;

    let gas = GasSpec {
        statistics: sweep.statistics[0],
        n_atoms: doc.required_quantity("gas.n_atoms", Unit::None)?,
        mass: doc.required_quantity("gas.mass", Unit::Mass)?,
        scattering_length: doc.quantity("gas.scattering_length", Unit::Length)?.unwrap_or(0.0),
    };
    for &s in &sweep.statistics {
        gas.with_statistics(s).validate()?;
    }
    let trap = TrapGeometry::new(
        doc.required_quantity("trap.radial_frequency", Unit::Frequency)?,
        doc.required_quantity("trap.epsilon", Unit::None)?,
    )?;

    let gamma = doc.required_quantity("probe.linewidth", Unit::Frequency)?;
    let detuning = match (sweep.axis, doc.quantity("probe.detuning", Unit::None)?) {
        (SweepAxis::Temperature, Some(d)) => d,
        (SweepAxis::Temperature, None) => {
            return Err(Error::invalid("probe.detuning", "required when sweep.axis = temperature"))
        }
        (SweepAxis::Detuning, Some(_)) => {
            return Err(Error::invalid("probe.detuning", "set by the sweep when sweep.axis = detuning"))
        }
        (SweepAxis::Detuning, None) => 1.0,
    };
    let pinhole = doc.required_quantity("probe.pinhole_radius", Unit::Length)?;
    let mut probe = match (
        doc.quantity("probe.resonance_frequency", Unit::Frequency)?,
        doc.quantity("probe.wavelength", Unit::Length)?,
    ) {
        (Some(omega_0), None) => ProbeParams::new(omega_0, gamma, detuning * gamma, pinhole)?,
        (None, Some(lambda)) => ProbeParams::from_wavelength(lambda, gamma, detuning * gamma, pinhole)?,
        (Some(_), Some(_)) => {
            return Err(Error::invalid("probe.wavelength", "give either probe.wavelength or probe.resonance_frequency"))
        }
        (None, None) => return Err(Error::invalid("probe.resonance_frequency", "missing")),
    };
    if let Some(d_sq) = doc.quantity("probe.dipole_sq", Unit::None)? {
        probe.d_sq = d_sq;
    }
    if let Some(entry) = doc.get("probe.local_field") {
        probe.local_field = parse_bool("probe.local_field", entry)?;
    }
    probe.validate()?;

    let defaults = NumericTolerances::default();
    let numerics = NumericTolerances {
        rel_tol_quadrature: doc
            .quantity("numerics.rel_tol_quadrature", Unit::None)?
            .unwrap_or(defaults.rel_tol_quadrature),
        rel_tol_root: doc.quantity("numerics.rel_tol_root", Unit::None)?.unwrap_or(defaults.rel_tol_root),
        series_cutoff: doc.quantity("numerics.series_cutoff", Unit::None)?.unwrap_or(defaults.series_cutoff),
        max_iterations: doc.parsed::<usize>("numerics.max_iterations")?.unwrap_or(defaults.max_iterations),
    };
    numerics.validate()?;

    let output = OutputPaths {
        csv: doc.get("output.csv").map(|e| PathBuf::from(&e.value)),
        chart: doc.get("output.chart").map(|e| PathBuf::from(&e.value)),
    };

    let scales = char_scales(&gas, &trap)?;
    Ok(RunConfig { gas, trap, probe, sweep, numerics, output, scales })
}
