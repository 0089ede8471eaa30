//! Energy and cost model for hybrid edge-cloud (HEC) processing of
//! Pareto-distributed device workloads.
//!
//! The crate has three layers:
//!
//! * [`model`]: closed-form energy and cost for cloud-only and hybrid
//!   processing of a device's annual data volume, plus savings fractions.
//! * [`workload`] and [`simulation`]: Pareto task-size sampling,
//!   normalization to the annual volume, random edge/cloud placement, and a
//!   seeded, parallel Monte Carlo over a device fleet.
//! * [`reporting`], [`config`] and [`cli`]: edge-split sweeps, the
//!   published-figures check, TOML scenarios and the `hecsim` command.
//!
//! ```
//! use hec_sim::model::{analytic_scenario, CostParams, EnergyParams, SplitPolicy, WorkloadProfile};
//!
//! let r = analytic_scenario(
//!     &WorkloadProfile::agentic(),
//!     &EnergyParams::default(),
//!     &CostParams::default(),
//!     &SplitPolicy::new(0.8).unwrap(),
//! )
//! .unwrap();
//! assert!((r.energy_cloud_only.0 - 16_060.0).abs() < 1e-9);
//! assert!((r.savings_cost_fraction.0 - 0.7467).abs() < 1e-4);
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod config;
pub mod error;
pub mod model;
pub mod reporting;
pub mod rng;
pub mod simulation;
pub mod stats;
pub mod units;
pub mod workload;

pub use error::{HecError, Result};
pub use model::{AnalyticResult, CostParams, EnergyParams, SplitPolicy, WorkloadProfile};
pub use simulation::{FleetAggregate, Scenario};
pub use units::{Fraction, Gb, Kwh, Usd};
pub use workload::ParetoParams;
