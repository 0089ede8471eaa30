//! TOML scenario files and the defaults < file < command-line layering.
//!
//! ```toml
//! [profile]
//! label = "agentic"     # or "traditional"; daily_gb overrides the preset
//! daily_gb = 20.0
//!
//! [energy]
//! e_transmit = 0.7
//! e_cloud = 1.5
//! e_local = 0.5
//!
//! [cost]
//! c_bandwidth = 0.10
//! c_hosting = 0.20
//! c_software = 0.02
//!
//! [pareto]
//! alpha = 2.0
//! x_min = 1.0
//!
//! [split]
//! p_edge = 0.8
//!
//! [sim]
//! n_tasks = 365
//! n_devices = 10000
//! master_seed = 42
//! allocation = "per_task"   # or "volume"
//! ```
//!
//! Every key is optional. Unknown keys are rejected.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{HecError, Result};
use crate::model::{CostParams, EnergyParams, SplitPolicy, WorkloadProfile};
use crate::simulation::{AllocationMode, Scenario};
use crate::workload::ParetoParams;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ProfileSection {
    pub label: Option<String>,
    pub daily_gb: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ParetoSection {
    pub alpha: f64,
    pub x_min: f64,
}

impl Default for ParetoSection {
    fn default() -> Self {
        let p = ParetoParams::default();
        Self {
            alpha: p.alpha(),
            x_min: p.x_min(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SplitSection {
    pub p_edge: f64,
}

impl Default for SplitSection {
    fn default() -> Self {
        Self {
            p_edge: SplitPolicy::default().p_edge(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SimSection {
    pub n_tasks: usize,
    pub n_devices: u64,
    pub master_seed: u64,
    pub allocation: AllocationMode,
}

impl Default for SimSection {
    fn default() -> Self {
        let s = Scenario::default();
        Self {
            n_tasks: s.n_tasks,
            n_devices: s.n_devices,
            master_seed: s.master_seed,
            allocation: s.allocation,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ConfigFile {
    pub profile: ProfileSection,
    pub energy: EnergyParams,
    pub cost: CostParams,
    pub pareto: ParetoSection,
    pub split: SplitSection,
    pub sim: SimSection,
}

/// Command-line values that win over the file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub profile: Option<String>,
    pub daily_gb: Option<f64>,
    pub p_edge: Option<f64>,
    pub alpha: Option<f64>,
    pub x_min: Option<f64>,
    pub n_tasks: Option<usize>,
    pub n_devices: Option<u64>,
    pub seed: Option<u64>,
    pub allocation: Option<AllocationMode>,
}

impl ConfigFile {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| HecError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| HecError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text).map_err(|e| HecError::Config(format!("{}: {e}", path.display())))
    }

    /// Defaults, or the file at `path` when given.
    pub fn load_or_default(path: Option<&Path>) -> Result<Self> {
        path.map_or_else(|| Ok(Self::default()), Self::load)
    }

    pub fn apply(mut self, o: &Overrides) -> Self {
        if let Some(name) = &o.profile {
            // A named preset replaces both label and volume from the file.
            self.profile = ProfileSection {
                label: Some(name.clone()),
                daily_gb: None,
            };
        }
        if let Some(v) = o.daily_gb {
            self.profile.daily_gb = Some(v);
        }
        if let Some(v) = o.p_edge {
            self.split.p_edge = v;
        }
        if let Some(v) = o.alpha {
            self.pareto.alpha = v;
        }
        if let Some(v) = o.x_min {
            self.pareto.x_min = v;
        }
        if let Some(v) = o.n_tasks {
            self.sim.n_tasks = v;
        }
        if let Some(v) = o.n_devices {
            self.sim.n_devices = v;
        }
        if let Some(v) = o.seed {
            self.sim.master_seed = v;
        }
        if let Some(v) = o.allocation {
            self.sim.allocation = v;
        }
        self
    }

    pub fn profile(&self) -> Result<WorkloadProfile> {
        match (&self.profile.label, self.profile.daily_gb) {
            (label, Some(daily)) => {
                WorkloadProfile::new(label.clone().unwrap_or_else(|| "custom".into()), daily)
            }
            (Some(label), None) => WorkloadProfile::named(label),
            (None, None) => Ok(WorkloadProfile::agentic()),
        }
    }

    pub fn pareto(&self) -> Result<ParetoParams> {
        ParetoParams::new(self.pareto.alpha, self.pareto.x_min)
    }

    pub fn to_scenario(&self) -> Result<Scenario> {
        self.energy.validate()?;
        self.cost.validate()?;
        let scenario = Scenario {
            profile: self.profile()?,
            energy: self.energy,
            cost: self.cost,
            split: SplitPolicy::new(self.split.p_edge)?,
            pareto: self.pareto()?,
            n_tasks: self.sim.n_tasks,
            n_devices: self.sim.n_devices,
            master_seed: self.sim.master_seed,
            allocation: self.sim.allocation,
        };
        scenario.validate()?;
        Ok(scenario)
    }
}
