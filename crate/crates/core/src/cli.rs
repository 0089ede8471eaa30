//! `hecsim` command line: analytic, simulate, sweep, dist-check, reproduce.
//!
//! [`run`] takes the argument list and two writers and returns the process
//! exit code, so the whole command surface can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::config::{ConfigFile, Overrides};
use crate::error::{invalid, HecError, Result};
use crate::reporting::{self, json_bytes, Format, Metric, Source};
use crate::simulation::{self, AllocationMode, DeviationReport, FleetAggregate};
use crate::units::Gb;
use crate::workload;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REPRODUCTION_MISMATCH: i32 = 2;
pub const EXIT_DIST_CHECK_FAILED: i32 = 3;

/// Minimum sample size accepted by `dist-check`.
pub const MIN_DIST_SAMPLES: usize = 1000;

#[derive(Debug, Parser)]
#[command(name = "hecsim", version, about = "Hybrid edge-cloud energy and cost model")]
pub struct Cli {
    /// Scenario file (TOML).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format: csv, json or text.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Master seed, overrides the file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form energy and cost for one scenario.
    Analytic(ScenarioArgs),
    /// Monte Carlo fleet run compared with the closed form.
    Simulate {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Worker threads (default: all cores). Output does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Savings over a range of edge splits.
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long, default_value_t = 0.5)]
        from: f64,
        #[arg(long, default_value_t = 0.9)]
        to: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
        #[arg(long, value_enum, default_value_t = SourceArg::Analytic)]
        source: SourceArg,
    },
    /// Validates the Pareto sampler against the closed-form CDF.
    DistCheck {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        x_min: Option<f64>,
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
    /// Recomputes the published per-device figures and flags mismatches.
    Reproduce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Analytic,
    #[value(name = "monte_carlo", alias = "monte-carlo")]
    MonteCarlo,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AllocationArg {
    #[value(name = "per_task", alias = "per-task")]
    PerTask,
    Volume,
}

#[derive(Debug, Args)]
struct ScenarioArgs {
    /// Preset workload profile: traditional or agentic.
    #[arg(long)]
    profile: Option<String>,
    #[arg(long)]
    daily_gb: Option<f64>,
    #[arg(long)]
    p_edge: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    x_min: Option<f64>,
    #[arg(long)]
    n_tasks: Option<usize>,
    #[arg(long)]
    n_devices: Option<u64>,
    #[arg(long, value_enum)]
    allocation: Option<AllocationArg>,
}

impl ScenarioArgs {
    fn overrides(&self, seed: Option<u64>) -> Overrides {
        Overrides {
            profile: self.profile.clone(),
            daily_gb: self.daily_gb,
            p_edge: self.p_edge,
            alpha: self.alpha,
            x_min: self.x_min,
            n_tasks: self.n_tasks,
            n_devices: self.n_devices,
            seed,
            allocation: self.allocation.map(|a| match a {
                AllocationArg::PerTask => AllocationMode::PerTask,
                AllocationArg::Volume => AllocationMode::Volume,
            }),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&cli) {
        Ok((bytes, code)) => match emit(&cli, &bytes, stdout) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(cli: &Cli, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, bytes).map_err(HecError::from),
        None => stdout.write_all(bytes).map_err(HecError::from),
    }
}

fn load_config(cli: &Cli) -> Result<ConfigFile> {
    ConfigFile::load_or_default(cli.config.as_deref())
}

fn execute(cli: &Cli) -> Result<(Vec<u8>, i32)> {
    match &cli.command {
        Command::Analytic(args) => {
            let scenario = load_config(cli)?.apply(&args.overrides(cli.seed)).to_scenario()?;
            let r = scenario.analytic()?;
            let metrics = vec![
                Metric::new("annual_gb", r.d_total().0, Gb::UNIT),
                Metric::new("p_edge", scenario.split.p_edge(), "fraction"),
                Metric::new("d_edge_gb", r.d_edge.0, "GB"),
                Metric::new("d_cloud_gb", r.d_cloud.0, "GB"),
                Metric::new("energy_cloud_only_kwh", r.energy_cloud_only.0, "kWh"),
                Metric::new("energy_hec_kwh", r.energy_hec.0, "kWh"),
                Metric::new("energy_saved_kwh", r.energy_saved().0, "kWh"),
                Metric::new("cost_cloud_only_usd", r.cost_cloud_only.0, "USD"),
                Metric::new("cost_hec_usd", r.cost_hec.0, "USD"),
                Metric::new("cost_saved_usd", r.cost_saved().0, "USD"),
                Metric::new("energy_savings", r.savings_energy_fraction.0, "fraction"),
                Metric::new("cost_savings", r.savings_cost_fraction.0, "fraction"),
            ];
            let mut out = Vec::new();
            if cli.format == Format::Text {
                writeln!(out, "profile: {} ({} GB/day)", scenario.profile.label, scenario.profile.daily_gb)?;
            }
            out.extend(reporting::render_metrics(&metrics, cli.format)?);
            Ok((out, EXIT_OK))
        }
        Command::Simulate { scenario, threads } => {
            let scenario = load_config(cli)?.apply(&scenario.overrides(cli.seed)).to_scenario()?;
            let agg = match threads {
                Some(0) => return Err(invalid("--threads must be >= 1")),
                Some(n) => simulation::run_fleet_with_threads(&scenario, *n)?,
                None => simulation::run_fleet(&scenario)?,
            };
            let report = simulation::compare_with_analytic(&agg, &scenario.analytic()?);
            Ok((render_simulation(&scenario.profile.label, &agg, &report, cli.format)?, EXIT_OK))
        }
        Command::Sweep {
            scenario,
            from,
            to,
            step,
            source,
        } => {
            let base = load_config(cli)?.apply(&scenario.overrides(cli.seed)).to_scenario()?;
            let splits = reporting::split_range(*from, *to, *step)?;
            let rows = match source {
                SourceArg::Analytic => reporting::sweep_edge_split(&base, &splits, Source::Analytic)?,
                SourceArg::MonteCarlo => reporting::sweep_edge_split(&base, &splits, Source::MonteCarlo)?,
                SourceArg::Both => {
                    let a = reporting::sweep_edge_split(&base, &splits, Source::Analytic)?;
                    let m = reporting::sweep_edge_split(&base, &splits, Source::MonteCarlo)?;
                    a.into_iter().zip(m).flat_map(|(a, m)| [a, m]).collect()
                }
            };
            Ok((reporting::render_table(&rows, cli.format)?, EXIT_OK))
        }
        Command::DistCheck {
            alpha,
            x_min,
            samples,
        } => {
            if *samples < MIN_DIST_SAMPLES {
                return Err(invalid(format!("--samples must be >= {MIN_DIST_SAMPLES}, got {samples}")));
            }
            let config = load_config(cli)?.apply(&Overrides {
                alpha: *alpha,
                x_min: *x_min,
                seed: cli.seed,
                ..Overrides::default()
            });
            let pp = config.pareto()?;
            let check = workload::check_sampler(&pp, *samples, config.sim.master_seed)?;
            let bytes = match cli.format {
                Format::Json => json_bytes(&serde_json::to_value(check)?)?,
                format => {
                    let metrics = vec![
                        Metric::new("alpha", check.alpha, ""),
                        Metric::new("x_min", check.x_min, ""),
                        Metric::new("samples", check.samples as f64, "count"),
                        Metric::new("analytic_mean", check.analytic_mean, "GB"),
                        Metric::new("sample_mean", check.sample_mean, "GB"),
                        Metric::new("ks_statistic", check.ks_statistic, ""),
                        Metric::new("ks_threshold", check.ks_threshold, ""),
                        Metric::new("sample_min", check.sample_min, "GB"),
                        Metric::new("passed", f64::from(u8::from(check.passed)), "count"),
                    ];
                    let mut out = reporting::render_metrics(&metrics, format)?;
                    if format == Format::Text {
                        let verdict = if check.passed { "PASS" } else { "FAIL" };
                        writeln!(out, "{verdict}: KS {:.5} vs threshold {:.5}", check.ks_statistic, check.ks_threshold)?;
                    }
                    out
                }
            };
            let code = if check.passed { EXIT_OK } else { EXIT_DIST_CHECK_FAILED };
            Ok((bytes, code))
        }
        Command::Reproduce => {
            let report = reporting::reproduce_published();
            let code = if report.has_unexpected_mismatch() {
                EXIT_REPRODUCTION_MISMATCH
            } else {
                EXIT_OK
            };
            Ok((report.render(cli.format)?, code))
        }
    }
}

fn render_simulation(
    label: &str,
    agg: &FleetAggregate,
    report: &DeviationReport,
    format: Format,
) -> Result<Vec<u8>> {
    match format {
        Format::Json => json_bytes(&json!({
            "profile": label,
            "aggregate": agg,
            "deviation": report,
        })),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "quantity", "analytic", "simulated", "abs_deviation", "rel_deviation", "ci95_low", "ci95_high", "within_ci",
            ])?;
            for d in &report.entries {
                w.write_record([
                    d.quantity.clone(),
                    format!("{:.4}", d.analytic),
                    format!("{:.4}", d.simulated),
                    format!("{:.4}", d.abs_deviation),
                    format!("{:.6}", d.rel_deviation),
                    format!("{:.4}", d.ci95_low),
                    format!("{:.4}", d.ci95_high),
                    d.within_ci.to_string(),
                ])?;
            }
            w.into_inner().map_err(|e| e.into_error().into())
        }
        Format::Text => {
            let mut out = Vec::new();
            writeln!(out, "profile: {label}, devices: {}, p_edge: {:.0}%", agg.n_devices, agg.p_edge * 100.0)?;
            let metrics = [
                Metric::new("energy_hec_mean_kwh", agg.energy_hec.mean, "kWh"),
                Metric::new("energy_hec_std_kwh", agg.energy_hec.std, "kWh"),
                Metric::new("cost_hec_mean_usd", agg.cost_hec.mean, "USD"),
                Metric::new("cost_hec_std_usd", agg.cost_hec.std, "USD"),
                Metric::new("edge_fraction_mean", agg.realized_edge_fraction.mean, "fraction"),
                Metric::new("edge_fraction_std", agg.realized_edge_fraction.std, "fraction"),
                Metric::new("energy_cloud_only_kwh", agg.energy_cloud_only.0, "kWh"),
                Metric::new("cost_cloud_only_usd", agg.cost_cloud_only.0, "USD"),
                Metric::new("energy_savings", agg.mean_energy_savings.0, "fraction"),
                Metric::new("cost_savings", agg.mean_cost_savings.0, "fraction"),
            ];
            out.extend(reporting::render_metrics(&metrics, Format::Text)?);
            writeln!(out)?;
            let rows: Vec<Vec<String>> = report
                .entries
                .iter()
                .map(|d| {
                    vec![
                        d.quantity.clone(),
                        format!("{:.4}", d.analytic),
                        format!("{:.4}", d.simulated),
                        format!("{:.4}%", d.rel_deviation * 100.0),
                        format!("[{:.4}, {:.4}]", d.ci95_low, d.ci95_high),
                        if d.within_ci { "yes" } else { "no" }.to_string(),
                    ]
                })
                .collect();
            out.extend(
                reporting::aligned(&["quantity", "analytic", "simulated", "rel_dev", "95% CI", "in CI"], &rows)
                    .into_bytes(),
            );
            Ok(out)
        }
    }
}
