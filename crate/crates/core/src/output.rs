//! CSV tables and SVG line charts for sweep results.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::config::{SweepAxis, SweepSpec};
use crate::error::{Error, Result};
use crate::gas::Statistics;
use crate::sweep::SweepRow;

pub const CSV_HEADER: &str = "statistics,x,L_m,t_d_s,v_g_mps,transmission";

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.to_path_buf(), source }
}

/// Writes `contents` through a sibling temporary file so that a failed run
/// never leaves a truncated output behind.
fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_error(path))?;
    tmp.write_all(contents).map_err(io_error(path))?;
    tmp.persist(path).map_err(|e| Error::Io { path: path.to_path_buf(), source: e.error })?;
    Ok(())
}

/// Renders rows with 12 significant digits and LF line endings.
pub fn format_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(96 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{:.11e},{:.11e},{:.11e},{:.11e},{:.11e}",
            r.statistics, r.x, r.length_m, r.delay_s, r.group_velocity_mps, r.transmission
        );
    }
    out
}

pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        _ => return Err(Error::Parse { line: 1, message: format!("expected header `{CSV_HEADER}`") }),
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(idx, l)| {
            let line = idx + 1;
            let bad = |message: String| Error::Parse { line, message };
            let fields: Vec<&str> = l.split(',').collect();
            if fields.len() != 6 {
                return Err(bad(format!("expected 6 fields, found {}", fields.len())));
            }
            let statistics: Statistics = fields[0].parse().map_err(bad)?;
            let mut values = [0.0; 5];
            for (v, f) in values.iter_mut().zip(&fields[1..]) {
                *v = f.parse().map_err(|_| bad(format!("`{f}` is not a number")))?;
            }
            let [x, length_m, delay_s, group_velocity_mps, transmission] = values;
            Ok(SweepRow { statistics, x, length_m, delay_s, group_velocity_mps, transmission })
        })
        .collect()
}

pub fn write_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    write_atomic(path, format_csv(rows).as_bytes())
}

pub fn read_csv(path: &Path) -> Result<Vec<SweepRow>> {
    let text = std::fs::read_to_string(path).map_err(io_error(path))?;
    parse_csv(&text)
}

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

fn style(s: Statistics) -> (&'static str, &'static str, &'static str) {
    // colour, dash pattern, legend label
    match s {
        Statistics::Fermi => ("#1f77b4", "8 3 2 3", "Fermi"),
        Statistics::Bose => ("#d62728", "none", "Bose"),
        Statistics::Boltzmann => ("#2ca02c", "6 4", "Boltzmann"),
    }
}

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn fraction(&self, v: f64) -> f64 {
        if self.log {
            (v.log10() - self.lo) / (self.hi - self.lo)
        } else {
            (v - self.lo) / (self.hi - self.lo)
        }
    }

    fn ticks(&self) -> Vec<(f64, String)> {
        if self.log {
            (self.lo as i32..=self.hi as i32).map(|k| (10f64.powi(k), format!("1e{k}"))).collect()
        } else {
            let step = nice_step((self.hi - self.lo) / 5.0);
            let first = (self.lo / step).ceil() as i64;
            let last = (self.hi / step + 1e-9).floor() as i64;
            (first..=last)
                .map(|i| {
                    let v = i as f64 * step;
                    (v, trim_number(v, step))
                })
                .collect()
        }
    }
}

fn nice_step(raw: f64) -> f64 {
    let magnitude = 10f64.powf(raw.log10().floor());
    let r = raw / magnitude;
    let nice = if r <= 1.0 {
        1.0
    } else if r <= 2.0 {
        2.0
    } else if r <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

fn trim_number(v: f64, step: f64) -> String {
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    format!("{v:.decimals$}")
}

fn linear_axis(values: impl Iterator<Item = f64> + Clone) -> Axis {
    let lo = values.clone().fold(f64::INFINITY, f64::min);
    let hi = values.fold(f64::NEG_INFINITY, f64::max);
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, hi + 0.5) };
    let step = nice_step((hi - lo) / 5.0);
    Axis { lo: (lo / step).floor() * step, hi: (hi / step).ceil() * step, log: false }
}

fn log_axis(values: impl Iterator<Item = f64> + Clone) -> Axis {
    let positive = values.filter(|v| *v > 0.0);
    let lo = positive.clone().fold(f64::INFINITY, f64::min);
    let hi = positive.fold(f64::NEG_INFINITY, f64::max);
    if !lo.is_finite() {
        return Axis { lo: 0.0, hi: 1.0, log: true };
    }
    let (lo, hi) = (lo.log10().floor(), hi.log10().ceil());
    Axis { lo, hi: if hi > lo { hi } else { lo + 1.0 }, log: true }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Standalone SVG with one polyline per statistics: group velocity on a
/// log axis for temperature sweeps, transmission on a linear axis for
/// detuning sweeps.
pub fn render_chart(rows: &[SweepRow], sweep: &SweepSpec) -> String {
    let (y_label, y_of): (&str, fn(&SweepRow) -> f64) = match sweep.axis {
        SweepAxis::Temperature => ("group velocity v_g (m/s)", |r| r.group_velocity_mps),
        SweepAxis::Detuning => ("transmission", |r| r.transmission),
    };
    let x_axis = Axis {
        lo: rows.iter().map(|r| r.x).fold(f64::INFINITY, f64::min),
        hi: rows.iter().map(|r| r.x).fold(f64::NEG_INFINITY, f64::max),
        log: false,
    };
    let x_axis = if x_axis.hi > x_axis.lo {
        linear_axis([x_axis.lo, x_axis.hi].into_iter())
    } else {
        linear_axis(std::iter::once(0.0))
    };
    let y_axis = match sweep.axis {
        SweepAxis::Temperature => log_axis(rows.iter().map(y_of)),
        SweepAxis::Detuning => linear_axis(rows.iter().map(y_of).chain([0.0, 1.0])),
    };

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + x_axis.fraction(x) * plot_w;
    let py = |y: f64| TOP + (1.0 - y_axis.fraction(y)) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ =
        writeln!(svg, r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#);

    for (v, label) in x_axis.ticks() {
        let x = px(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{y1:.2}" stroke="#ccc"/><text x="{x:.2}" y="{ty:.2}" text-anchor="middle">{label}</text>"##,
            y0 = TOP,
            y1 = TOP + plot_h,
            ty = TOP + plot_h + 18.0
        );
    }
    for (v, label) in y_axis.ticks() {
        let y = py(v);
        let _ = writeln!(
            svg,
            r##"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" stroke="#ccc"/><text x="{tx:.2}" y="{ty:.2}" text-anchor="end">{label}</text>"##,
            x0 = LEFT,
            x1 = LEFT + plot_w,
            tx = LEFT - 6.0,
            ty = y + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 15.0,
        escape(sweep.x_label())
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">{}</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0,
        escape(y_label)
    );

    let mut present: Vec<Statistics> = rows.iter().map(|r| r.statistics).collect();
    present.sort();
    present.dedup();
    for (i, &s) in present.iter().enumerate() {
        let (colour, dash, label) = style(s);
        let points: Vec<String> = rows
            .iter()
            .filter(|r| r.statistics == s)
            .filter(|r| !y_axis.log || y_of(r) > 0.0)
            .map(|r| format!("{:.2},{:.2}", px(r.x), py(y_of(r))))
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{colour}" stroke-width="2" stroke-dasharray="{dash}" points="{}"/>"#,
            points.join(" ")
        );
        let ly = TOP + 20.0 + 20.0 * i as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{colour}" stroke-width="2" stroke-dasharray="{dash}"/><text x="{}" y="{}">{label}</text>"#,
            lx + 30.0,
            lx + 36.0,
            ly + 4.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_chart(rows: &[SweepRow], sweep: &SweepSpec, path: &Path) -> Result<()> {
    write_atomic(path, render_chart(rows, sweep).as_bytes())
}
