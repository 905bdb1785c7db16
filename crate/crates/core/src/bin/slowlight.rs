use std::error::Error as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use slowlight::constants::BOLTZMANN;
use slowlight::{emit_chart, format_csv, parse_config, run_sweep, write_csv, CharScales, Error, RunConfig};

#[derive(Parser)]
#[command(name = "slowlight", version, about = "Slow light in trapped Fermi, Bose and Boltzmann gases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the configured sweep and write the CSV table and SVG chart.
    Run {
        config: PathBuf,
        /// CSV destination; overrides output.csv.
        #[arg(long)]
        out: Option<PathBuf>,
        /// SVG destination; overrides output.chart.
        #[arg(long)]
        chart: Option<PathBuf>,
        #[arg(long)]
        no_local_field: bool,
        /// Worker threads (default: all cores).
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        threads: Option<u16>,
    },
    /// Print the characteristic scales of the configured cloud.
    Scales { config: PathBuf },
}

fn load(path: &Path) -> Result<RunConfig, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    parse_config(&text)
}

fn scales_report(s: &CharScales) -> String {
    let rows = [
        ("N", format!("{:.6e}", s.n_atoms)),
        ("omega_r", format!("{:.6e} rad/s", s.omega_r)),
        ("epsilon", format!("{:.6}", s.epsilon)),
        ("omega_bar", format!("{:.6e} rad/s", s.omega_bar())),
        ("a_r", format!("{:.4} um", s.a_r * 1e6)),
        ("a_ho", format!("{:.4} um", s.a_ho * 1e6)),
        ("R_F", format!("{:.4} um", s.r_fermi * 1e6)),
        ("R_B", format!("{:.4} um", s.r_bose * 1e6)),
        ("E_F", format!("{:.6e} J", s.e_fermi)),
        ("T_F", format!("{:.4} nK", s.t_fermi * 1e9)),
        ("T_c", format!("{:.4} nK", s.t_critical * 1e9)),
        ("T_F/T_c", format!("{:.6}", s.t_fermi / s.t_critical)),
        ("mu_TF", format!("{:.4} nK", s.mu_tf / BOLTZMANN * 1e9)),
        ("eta", format!("{:.6}", s.eta)),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn run(
    config: &Path,
    out: Option<PathBuf>,
    chart: Option<PathBuf>,
    no_local_field: bool,
    threads: Option<u16>,
) -> Result<(), Error> {
    let mut cfg = load(config)?;
    if no_local_field {
        cfg = cfg.with_local_field(false);
    }
    let csv_path = out.or(cfg.output.csv.clone());
    let chart_path = chart.or(cfg.output.chart.clone());

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads {
        pool = pool.num_threads(n.into());
    }
    let pool = pool.build().map_err(|e| Error::InvalidParameter { key: "--threads".into(), reason: e.to_string() })?;
    let rows = pool.install(|| run_sweep(&cfg))?;

    match &csv_path {
        Some(path) => write_csv(&rows, path)?,
        None => print!("{}", format_csv(&rows)),
    }
    if let Some(path) = &chart_path {
        if let Err(e) = emit_chart(&rows, &cfg.sweep, path) {
            if let Some(csv) = &csv_path {
                let _ = std::fs::remove_file(csv);
            }
            return Err(e);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run { config, out, chart, no_local_field, threads } => {
            run(&config, out, chart, no_local_field, threads)
        }
        Command::Scales { config } => load(&config).map(|cfg| print!("{}", scales_report(&cfg.scales))),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprint!("error: {e}");
            let mut source = e.source();
            while let Some(inner) = source {
                eprint!(": {inner}");
                source = inner.source();
            }
            eprintln!();
            ExitCode::FAILURE
        }
    }
}
