//! Size of the local-field correction: susceptibility at the peak density and
//! the change in effective group velocity across temperature.

use slowlight::{effective_group_velocity, parse_config, susceptibility, Cloud, Statistics};

fn main() -> slowlight::Result<()> {
    let cfg = parse_config(include_str!("../presets/fig1.preset"))?;
    let on = cfg.probe;
    let off = cfg.probe.with_local_field(false);

    println!("T/T_c  stats      peak rho     chi' on/off    v_g on     v_g off   change");
    for tau in [0.2, 0.5, 0.9, 1.5] {
        for stats in Statistics::ALL {
            let cloud =
                Cloud::new(&cfg.gas.with_statistics(stats), &cfg.trap, tau * cfg.scales.t_critical, &cfg.numerics)?;
            let rho = cloud.peak_density()?;
            let chi_ratio = susceptibility(rho, &on)?.chi_re / susceptibility(rho, &off)?.chi_re;
            let v_on = effective_group_velocity(&cloud, &on)?.group_velocity;
            let v_off = effective_group_velocity(&cloud, &off)?.group_velocity;
            println!(
                "{tau:5.1}  {:<9} {rho:10.3e}  {chi_ratio:10.5}  {v_on:9.1}  {v_off:9.1}  {:6.2}%",
                stats.to_string(),
                100.0 * (v_off - v_on) / v_off
            );
        }
    }
    Ok(())
}
