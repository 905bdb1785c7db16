use std::f64::consts::PI;

use proptest::prelude::*;
use slowlight::constants::{SODIUM_MASS, SPEED_OF_LIGHT};
use slowlight::numerics::{fermi_dirac_f, find_root, integrate_cylindrical, polylog};
use slowlight::{
    delay_time, format_csv, group_velocity_local, parse_csv, transmission, Cloud, GasSpec, NumericTolerances,
    PathLimits, ProbeParams, Statistics, SweepRow, TrapGeometry,
};

fn tol() -> NumericTolerances {
    NumericTolerances::default()
}

fn sodium(statistics: Statistics) -> (GasSpec, TrapGeometry) {
    (
        GasSpec { statistics, n_atoms: 3.8e6, mass: SODIUM_MASS, scattering_length: 2.75e-9 },
        TrapGeometry { omega_r: 2.0 * PI * 69.0, epsilon: 1.0 / 3.0 },
    )
}

fn probe() -> ProbeParams {
    let gamma = 2.0 * PI * 10.03e6;
    ProbeParams::new(2.0 * PI * 5.1e14, gamma, 10.0 * gamma, 7.5e-6).unwrap()
}

fn statistics() -> impl Strategy<Value = Statistics> {
    prop_oneof![Just(Statistics::Fermi), Just(Statistics::Bose), Just(Statistics::Boltzmann)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polylog_increases_in_argument(s in 0.5f64..4.0, z in 0.01f64..0.98, dz in 0.005f64..0.02) {
        let s = if s <= 1.0 { s + 1.0 } else { s };
        prop_assert!(polylog(s, z + dz, &tol()).unwrap() > polylog(s, z, &tol()).unwrap());
    }

    #[test]
    fn polylog_decreases_in_order(s in 0.3f64..5.0, ds in 0.05f64..1.0, z in 0.01f64..0.99) {
        prop_assert!(polylog(s + ds, z, &tol()).unwrap() < polylog(s, z, &tol()).unwrap());
    }

    #[test]
    fn fermi_dirac_increases(nu in prop_oneof![Just(0.5), Just(1.5), Just(2.0), Just(3.0)], x in -20.0f64..60.0, dx in 0.01f64..1.0) {
        prop_assert!(fermi_dirac_f(nu, x + dx, &tol()).unwrap() > fermi_dirac_f(nu, x, &tol()).unwrap());
    }

    #[test]
    fn cylindrical_integral_of_nonnegative_is_nonnegative(a in 0.1f64..10.0, b in 0.1f64..10.0, shift in -2.0f64..2.0) {
        let f = |r: f64, z: f64| Ok((-(a * r * r) - b * (z - shift).powi(2)).exp() * (r - 0.5).abs());
        prop_assert!(integrate_cylindrical(f, 2.0, 3.0, &tol()).unwrap().value >= 0.0);
    }

    #[test]
    fn root_invariant_under_positive_scaling(root in 0.05f64..0.95, k in 1e-6f64..1e6) {
        let g = |x: f64| Ok((x - root) * (1.0 + x * x));
        let plain = find_root(g, 0.0, 1.0, &tol()).unwrap();
        let scaled = find_root(|x| Ok(k * g(x)?), 0.0, 1.0, &tol()).unwrap();
        prop_assert!((plain - scaled).abs() <= 1e-11);
    }

    #[test]
    fn local_group_velocity_is_subluminal(rho in 0.0f64..1e21, detuning in 3.0f64..100.0, lf in any::<bool>()) {
        let p = probe().with_detuning(detuning * probe().gamma).with_local_field(lf);
        let v = group_velocity_local(rho, &p).unwrap();
        prop_assert!(v > 0.0 && v <= SPEED_OF_LIGHT);
    }

    #[test]
    fn densities_fall_along_rays(stats in statistics(), tau in 0.15f64..2.5, angle in 0.0f64..(PI / 2.0)) {
        let (spec, trap) = sodium(stats);
        let scales = slowlight::char_scales(&spec, &trap).unwrap();
        let c = Cloud::new(&spec, &trap, tau * scales.t_critical, &tol()).unwrap();
        let extent = c.radial_extent();
        let mut last = c.density(0.0, 0.0).unwrap();
        for k in 1..40 {
            let s = extent * k as f64 / 40.0;
            let rho = c.density(s * angle.cos(), s * angle.sin() / trap.epsilon).unwrap();
            prop_assert!(rho <= last * (1.0 + 1e-12), "rho rose at s = {s}");
            last = rho;
        }
    }

    #[test]
    fn csv_round_trip(rows in prop::collection::vec(
        (statistics(), 1e-3f64..1e3, 1e-6f64..1e-3, 1e-12f64..1e-6, 1e-2f64..3e8, 0.0f64..=1.0),
        0..20,
    )) {
        let rows: Vec<SweepRow> = rows
            .into_iter()
            .map(|(statistics, x, length_m, delay_s, group_velocity_mps, transmission)| SweepRow {
                statistics, x, length_m, delay_s, group_velocity_mps, transmission,
            })
            .collect();
        let text = format_csv(&rows);
        prop_assert_eq!(format_csv(&parse_csv(&text).unwrap()), text);
    }
}

#[test]
fn delay_is_nonnegative_and_transmission_bounded() {
    let p = probe();
    for stats in Statistics::ALL {
        let (spec, trap) = sodium(stats);
        let scales = slowlight::char_scales(&spec, &trap).unwrap();
        for tau in [0.3, 1.0, 2.0] {
            let c = Cloud::new(&spec, &trap, tau * scales.t_critical, &tol()).unwrap();
            assert!(delay_time(&c, &p, PathLimits::EffectiveLength).unwrap() >= 0.0);
            let t = transmission(&c, &p, PathLimits::EffectiveLength).unwrap();
            assert!(t > 0.0 && t <= 1.0);
        }
    }
}

#[test]
fn transmission_rises_with_detuning() {
    let p = probe();
    for stats in Statistics::ALL {
        let (spec, trap) = sodium(stats);
        let scales = slowlight::char_scales(&spec, &trap).unwrap();
        let c = Cloud::new(&spec, &trap, 0.5 * scales.t_critical, &tol()).unwrap();
        let mut last = 0.0;
        for k in 0..=40 {
            let delta = 3.0 * (100.0f64 / 3.0).powf(k as f64 / 40.0) * p.gamma;
            let t = transmission(&c, &p.with_detuning(delta), PathLimits::EffectiveLength).unwrap();
            assert!(t > last, "{stats} at {:.2} gamma", delta / p.gamma);
            last = t;
        }
    }
}

#[test]
fn local_field_effect_grows_with_peak_density() {
    let p = probe();
    let mut last = 0.0;
    for n_atoms in [1e5, 1e6, 3.8e6, 1e7, 3e7] {
        let (spec, trap) = sodium(Statistics::Bose);
        let spec = GasSpec { n_atoms, ..spec };
        let scales = slowlight::char_scales(&spec, &trap).unwrap();
        let c = Cloud::new(&spec, &trap, 0.2 * scales.t_critical, &tol()).unwrap();
        let on = slowlight::effective_group_velocity(&c, &p).unwrap().group_velocity;
        let off = slowlight::effective_group_velocity(&c, &p.with_local_field(false)).unwrap().group_velocity;
        let change = (off - on) / off;
        assert!(change > last, "N = {n_atoms:e}: {change}");
        last = change;
    }
}
