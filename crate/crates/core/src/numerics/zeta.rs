use std::f64::consts::PI;

use statrs::function::gamma::{gamma, ln_gamma};

/// B_2, B_4, ..., B_24.
const BERNOULLI_EVEN: [f64; 12] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
];

/// Riemann zeta function for real `s`; `+inf` at the pole `s = 1`.
///
/// Euler–Maclaurin summation for `s >= 0`, the reflection formula below.
pub fn riemann_zeta(s: f64) -> f64 {
    if s == 1.0 {
        return f64::INFINITY;
    }
    if s < 0.0 {
        if is_even_integer(s) {
            return 0.0;
        }
        let t = 1.0 - s;
        return 2.0 * (2.0 * PI).powf(-t) * (0.5 * PI * t).cos() * gamma(t) * euler_maclaurin(t);
    }
    euler_maclaurin(s)
}

fn euler_maclaurin(s: f64) -> f64 {
    const TERMS: usize = 16;
    let n = TERMS as f64;
    let mut sum: f64 = (1..TERMS).map(|k| (k as f64).powf(-s)).sum();
    sum += n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s);

    let mut rising = s;
    let mut factorial = 2.0;
    let mut n_pow = n.powf(-s - 1.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let j = (j + 1) as f64;
        sum += b / factorial * rising * n_pow;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        factorial *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
        n_pow /= n * n;
    }
    sum
}

fn is_even_integer(x: f64) -> bool {
    x.fract() == 0.0 && (x * 0.5).fract() == 0.0
}

/// ζ(s − k)/k!, evaluated in log space once s − k is negative so that the
/// factorially growing reflected values never overflow.
pub(crate) fn zeta_over_factorial(s: f64, k: usize) -> f64 {
    let a = s - k as f64;
    let ln_k_factorial = ln_gamma(k as f64 + 1.0);
    if a >= 0.0 {
        return riemann_zeta(a) * (-ln_k_factorial).exp();
    }
    if is_even_integer(a) {
        return 0.0;
    }
    let t = 1.0 - a;
    let cos = (0.5 * PI * t).cos();
    2.0 * cos * euler_maclaurin(t) * (ln_gamma(t) - ln_k_factorial - t * (2.0 * PI).ln()).exp()
}
