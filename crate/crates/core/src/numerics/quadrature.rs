//! Globally adaptive Gauss–Kronrod (7/15) quadrature and the nested
//! cylindrical rule built on it.

use std::f64::consts::PI;

use super::NumericTolerances;
use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
/// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// An integral together with its estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    magnitude: f64,
}

fn kronrod<F>(f: &F, a: f64, b: f64) -> Result<Segment>
where
    F: Fn(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut values = [0.0; 15];
    values[14] = f(center)?;
    for i in 0..7 {
        let dx = half * XGK[i];
        values[2 * i] = f(center - dx)?;
        values[2 * i + 1] = f(center + dx)?;
    }

    let weight = |j: usize| if j == 14 { WGK[7] } else { WGK[j / 2] };
    let mut kronrod = 0.0;
    let mut magnitude = 0.0;
    for (j, v) in values.iter().enumerate() {
        kronrod += weight(j) * v;
        magnitude += weight(j) * v.abs();
    }
    let mut gauss = WG[3] * values[14];
    for i in [1, 3, 5] {
        gauss += WG[i / 2] * (values[2 * i] + values[2 * i + 1]);
    }
    let mean = 0.5 * kronrod;
    let spread: f64 = values.iter().enumerate().map(|(j, v)| weight(j) * (v - mean).abs()).sum();

    let value = kronrod * half;
    if !value.is_finite() {
        return Err(Error::invalid("integrand", format!("non-finite value on [{a:e}, {b:e}]")));
    }
    // QUADPACK's error heuristic for the 15-point rule.
    let spread = spread * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if spread != 0.0 && error != 0.0 {
        error = spread * (200.0 * error / spread).powf(1.5).min(1.0);
    }
    let magnitude = magnitude * half.abs();
    error = error.max(50.0 * f64::EPSILON * magnitude);
    Ok(Segment { a, b, value, error, magnitude })
}

/// ∫_a^b f(x) dx with its error estimate.
///
/// Converges when the summed error is below `rel_tol · |I|`, with an absolute
/// floor of `1e-3 · rel_tol · ∫|f|` for integrals that cancel to near zero.
pub fn integrate_1d_estimate<F>(f: F, a: f64, b: f64, tol: &NumericTolerances) -> Result<Estimate>
where
    F: Fn(f64) -> Result<f64>,
{
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(Error::invalid("interval", format!("need finite a <= b, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(Estimate { value: 0.0, error: 0.0 });
    }

    let first = kronrod(&f, a, b)?;
    let mut segments = vec![first];
    let mut frozen_error = 0.0;
    let mut active: Vec<usize> = vec![0];

    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let magnitude: f64 = segments.iter().map(|s| s.magnitude).sum();
        let error: f64 = frozen_error + active.iter().map(|&i| segments[i].error).sum::<f64>();
        let target = tol.rel_tol_quadrature * value.abs().max(1e-3 * magnitude);
        if error <= target || active.is_empty() {
            return Ok(Estimate { value, error });
        }
        if segments.len() >= tol.max_iterations {
            return Err(Error::NoConvergence { what: "adaptive quadrature", iterations: segments.len() });
        }

        let (slot, &worst) = active
            .iter()
            .enumerate()
            .max_by(|x, y| segments[*x.1].error.total_cmp(&segments[*y.1].error))
            .expect("active set is nonempty");
        let s = segments[worst];
        let mid = 0.5 * (s.a + s.b);
        if mid <= s.a || mid >= s.b {
            // Interval at floating-point resolution: accept its error as is.
            frozen_error += s.error;
            active.swap_remove(slot);
            continue;
        }
        let left = kronrod(&f, s.a, mid)?;
        let right = kronrod(&f, mid, s.b)?;
        segments[worst] = left;
        segments.push(right);
        active.push(segments.len() - 1);
    }
}

/// ∫_a^b f(x) dx to `tol.rel_tol_quadrature`.
pub fn integrate_1d<F>(f: F, a: f64, b: f64, tol: &NumericTolerances) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    integrate_1d_estimate(f, a, b, tol).map(|e| e.value)
}

/// ∫₀^{r_max} 2πr dr ∫_{−z_max}^{z_max} dz f(r, z) for an azimuthally symmetric integrand.
///
/// The error estimate adds the outer rule's error to the largest relative
/// error reported by any inner integral, scaled by the result.
pub fn integrate_cylindrical<F>(f: F, r_max: f64, z_max: f64, tol: &NumericTolerances) -> Result<Estimate>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    if !(r_max >= 0.0) || !(z_max >= 0.0) {
        return Err(Error::invalid("domain", format!("need r_max, z_max >= 0, got {r_max}, {z_max}")));
    }
    let worst_inner = std::cell::Cell::new(0.0f64);
    let outer = integrate_1d_estimate(
        |r| {
            let inner = integrate_1d_estimate(|z| f(r, z), -z_max, z_max, tol)?;
            if inner.value != 0.0 {
                worst_inner.set(worst_inner.get().max(inner.error / inner.value.abs()));
            }
            Ok(2.0 * PI * r * inner.value)
        },
        0.0,
        r_max,
        tol,
    )?;
    Ok(Estimate { value: outer.value, error: outer.error + worst_inner.get() * outer.value.abs() })
}
