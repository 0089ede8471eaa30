//! Per-device Monte Carlo over a fleet, with a comparison against the
//! closed-form model.
//!
//! Each device draws Pareto task sizes, rescales them to its annual volume
//! and places every task on the edge or in the cloud. Devices are grouped
//! into fixed-size blocks; blocks run in parallel and are merged in index
//! order, so the aggregate is bit-identical for any worker count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, HecError, Result};
use crate::model::{
    self, AnalyticResult, CostParams, EnergyParams, SplitPolicy, WorkloadProfile,
};
use crate::rng;
use crate::stats::{RunningStats, Summary};
use crate::units::{Fraction, Gb, Kwh, Usd};
use crate::workload::{self, ParetoParams};

/// Devices per reduction block. Fixed so the merge tree never depends on
/// the thread pool.
const BLOCK_DEVICES: u64 = 256;

/// How tasks are placed once sizes are drawn.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AllocationMode {
    /// Independent Bernoulli(p_edge) label per task.
    #[default]
    PerTask,
    /// Exactly `p_edge` of every device's volume goes to the edge.
    Volume,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub profile: WorkloadProfile,
    pub energy: EnergyParams,
    pub cost: CostParams,
    pub split: SplitPolicy,
    pub pareto: ParetoParams,
    pub n_tasks: usize,
    pub n_devices: u64,
    pub master_seed: u64,
    #[serde(default)]
    pub allocation: AllocationMode,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            profile: WorkloadProfile::agentic(),
            energy: EnergyParams::default(),
            cost: CostParams::default(),
            split: SplitPolicy::default(),
            pareto: ParetoParams::default(),
            n_tasks: 365,
            n_devices: 10_000,
            master_seed: 42,
            allocation: AllocationMode::PerTask,
        }
    }
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        self.profile.validate()?;
        self.energy.validate()?;
        self.cost.validate()?;
        if self.n_tasks == 0 {
            return Err(invalid("n_tasks must be >= 1"));
        }
        if self.n_devices == 0 {
            return Err(invalid("n_devices must be >= 1"));
        }
        Ok(())
    }

    pub fn with_split(&self, p_edge: f64) -> Result<Self> {
        Ok(Self {
            split: SplitPolicy::new(p_edge)?,
            ..self.clone()
        })
    }

    /// Closed-form counterpart of this scenario.
    pub fn analytic(&self) -> Result<AnalyticResult> {
        model::analytic_scenario(&self.profile, &self.energy, &self.cost, &self.split)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviceResult {
    pub d_edge: Gb,
    pub d_cloud: Gb,
    pub energy_hec: Kwh,
    pub cost_hec: Usd,
    pub realized_edge_fraction: f64,
}

/// One device's year.
///
/// The realized edge share is measured on the normalized task set and then
/// applied to the profile's annual volume, so degenerate splits give exact
/// cloud-only or edge-only totals.
pub fn simulate_device(scenario: &Scenario, device_index: u64) -> Result<DeviceResult> {
    if device_index >= scenario.n_devices {
        return Err(invalid(format!(
            "device index {device_index} out of range for {} devices",
            scenario.n_devices
        )));
    }
    let annual = scenario.profile.annual_gb();
    let mut rng = rng::stream(scenario.master_seed, device_index);
    let sizes = workload::sample_tasks(&mut rng, scenario.n_tasks, &scenario.pareto)?;
    let sizes = workload::normalize_to_annual(&sizes, annual)?;

    let fraction = match scenario.allocation {
        AllocationMode::PerTask => {
            let tasks = workload::allocate(&mut rng, &sizes, &scenario.split)?;
            let (edge, cloud) = workload::edge_cloud_volumes(&tasks);
            edge / (edge + cloud)
        }
        AllocationMode::Volume => scenario.split.p_edge(),
    };

    let d_edge = annual * fraction;
    let d_cloud = annual * (1.0 - fraction);
    Ok(DeviceResult {
        d_edge,
        d_cloud,
        energy_hec: model::energy_hec(d_edge, d_cloud, &scenario.energy)?,
        cost_hec: model::cost_hec(d_edge, d_cloud, &scenario.cost)?,
        realized_edge_fraction: fraction,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FleetAggregate {
    pub n_devices: u64,
    pub p_edge: f64,
    pub energy_hec: Summary,
    pub cost_hec: Summary,
    pub realized_edge_fraction: Summary,
    pub energy_cloud_only: Kwh,
    pub cost_cloud_only: Usd,
    pub mean_energy_savings: Fraction,
    pub mean_cost_savings: Fraction,
}

#[derive(Default, Clone, Copy)]
struct BlockStats {
    energy: RunningStats,
    cost: RunningStats,
    fraction: RunningStats,
}

impl BlockStats {
    fn push(&mut self, d: &DeviceResult) {
        self.energy.push(d.energy_hec.0);
        self.cost.push(d.cost_hec.0);
        self.fraction.push(d.realized_edge_fraction);
    }

    fn merge(&mut self, other: &Self) {
        self.energy.merge(&other.energy);
        self.cost.merge(&other.cost);
        self.fraction.merge(&other.fraction);
    }
}

fn simulate_block(scenario: &Scenario, block: u64) -> Result<BlockStats> {
    let start = block * BLOCK_DEVICES;
    let end = (start + BLOCK_DEVICES).min(scenario.n_devices);
    let mut stats = BlockStats::default();
    for index in start..end {
        stats.push(&simulate_device(scenario, index)?);
    }
    Ok(stats)
}

/// Simulates every device of the scenario on the current rayon pool.
pub fn run_fleet(scenario: &Scenario) -> Result<FleetAggregate> {
    scenario.validate()?;
    let blocks = scenario.n_devices.div_ceil(BLOCK_DEVICES);
    let per_block: Vec<BlockStats> = (0..blocks)
        .into_par_iter()
        .map(|b| simulate_block(scenario, b))
        .collect::<Result<_>>()?;

    let mut total = BlockStats::default();
    for block in &per_block {
        total.merge(block);
    }

    let energy_cloud_only = model::energy_cloud(scenario.profile.annual_gb(), &scenario.energy)?;
    let cost_cloud_only = model::cost_cloud(scenario.profile.annual_gb(), &scenario.cost)?;
    Ok(FleetAggregate {
        n_devices: scenario.n_devices,
        p_edge: scenario.split.p_edge(),
        energy_hec: total.energy.summary(),
        cost_hec: total.cost.summary(),
        realized_edge_fraction: total.fraction.summary(),
        energy_cloud_only,
        cost_cloud_only,
        mean_energy_savings: savings(total.energy.mean(), energy_cloud_only.0),
        mean_cost_savings: savings(total.cost.mean(), cost_cloud_only.0),
    })
}

/// [`run_fleet`] on a dedicated pool of `threads` workers.
pub fn run_fleet_with_threads(scenario: &Scenario, threads: usize) -> Result<FleetAggregate> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| HecError::InvalidParameter(format!("cannot build thread pool: {e}")))?;
    pool.install(|| run_fleet(scenario))
}

fn savings(mean_hec: f64, baseline: f64) -> Fraction {
    if baseline > 0.0 {
        Fraction(1.0 - mean_hec / baseline)
    } else {
        Fraction(0.0)
    }
}

/// One simulated-versus-closed-form line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub quantity: String,
    pub analytic: f64,
    pub simulated: f64,
    pub abs_deviation: f64,
    pub rel_deviation: f64,
    pub ci95_low: f64,
    pub ci95_high: f64,
    pub within_ci: bool,
}

impl Deviation {
    fn new(quantity: &str, analytic: f64, simulated: f64, (lo, hi): (f64, f64)) -> Self {
        let abs_deviation = (simulated - analytic).abs();
        let rel_deviation = if abs_deviation == 0.0 {
            0.0
        } else {
            abs_deviation / analytic.abs()
        };
        Self {
            quantity: quantity.to_string(),
            analytic,
            simulated,
            abs_deviation,
            rel_deviation,
            ci95_low: lo,
            ci95_high: hi,
            within_ci: lo <= analytic && analytic <= hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeviationReport {
    pub entries: Vec<Deviation>,
}

impl DeviationReport {
    pub fn get(&self, quantity: &str) -> Option<&Deviation> {
        self.entries.iter().find(|d| d.quantity == quantity)
    }
}

/// Savings intervals are the energy/cost intervals mapped through
/// `1 - x / baseline`.
pub fn compare_with_analytic(agg: &FleetAggregate, ar: &AnalyticResult) -> DeviationReport {
    let interval = |s: &Summary| (s.ci95_low, s.ci95_high);
    let savings_interval = |s: &Summary, baseline: f64| {
        if baseline > 0.0 {
            (1.0 - s.ci95_high / baseline, 1.0 - s.ci95_low / baseline)
        } else {
            (0.0, 0.0)
        }
    };
    let p_edge = if ar.d_total().0 > 0.0 {
        ar.d_edge / ar.d_total()
    } else {
        agg.p_edge
    };
    DeviationReport {
        entries: vec![
            Deviation::new("energy_hec_kwh", ar.energy_hec.0, agg.energy_hec.mean, interval(&agg.energy_hec)),
            Deviation::new("cost_hec_usd", ar.cost_hec.0, agg.cost_hec.mean, interval(&agg.cost_hec)),
            Deviation::new(
                "edge_fraction",
                p_edge,
                agg.realized_edge_fraction.mean,
                interval(&agg.realized_edge_fraction),
            ),
            Deviation::new(
                "energy_savings",
                ar.savings_energy_fraction.0,
                agg.mean_energy_savings.0,
                savings_interval(&agg.energy_hec, agg.energy_cloud_only.0),
            ),
            Deviation::new(
                "cost_savings",
                ar.savings_cost_fraction.0,
                agg.mean_cost_savings.0,
                savings_interval(&agg.cost_hec, agg.cost_cloud_only.0),
            ),
        ],
    }
}
