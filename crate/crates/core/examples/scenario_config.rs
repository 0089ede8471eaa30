//! Loads a TOML scenario, layers command-line style overrides on top and
//! runs both the closed form and the simulation.
//!
//! ```bash
//! cargo run --example scenario_config -- crates/core/configs/traditional_cheap_transit.toml
//! ```

use std::path::PathBuf;

use hec_sim::config::{ConfigFile, Overrides};
use hec_sim::simulation::run_fleet;

fn main() -> hec_sim::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/configs/agentic.toml")));

    let file = ConfigFile::load(&path)?;
    for p_edge in [None, Some(0.5)] {
        let scenario = file
            .clone()
            .apply(&Overrides {
                p_edge,
                n_devices: Some(2_000),
                ..Overrides::default()
            })
            .to_scenario()?;
        let analytic = scenario.analytic()?;
        let fleet = run_fleet(&scenario)?;
        println!(
            "{} p_edge {:.2}: energy savings {:.2} analytic / {:.2} simulated, cost savings {:.2} / {:.2}",
            scenario.profile.label,
            scenario.split.p_edge(),
            analytic.savings_energy_fraction,
            fleet.mean_energy_savings,
            analytic.savings_cost_fraction,
            fleet.mean_cost_savings,
        );
    }
    Ok(())
}
