//! Closed-form energy and cost per device for both built-in profiles.
//!
//! ```bash
//! cargo run --example analytic_baseline
//! ```

use hec_sim::model::{analytic_scenario, CostParams, EnergyParams, SplitPolicy, WorkloadProfile};

fn main() -> hec_sim::Result<()> {
    let energy = EnergyParams::default();
    let cost = CostParams::default();
    let split = SplitPolicy::new(0.8)?;

    for profile in [WorkloadProfile::traditional(), WorkloadProfile::agentic()] {
        let r = analytic_scenario(&profile, &energy, &cost, &split)?;
        println!("{} ({:.0} per year, {:.0}% on device)", profile.label, profile.annual_gb(), split.p_edge() * 100.0);
        println!("  energy  cloud-only {:>10.2}  hybrid {:>10.2}  saved {:.2}", r.energy_cloud_only, r.energy_hec, r.savings_energy_fraction);
        println!("  cost    cloud-only {:>10.2}  hybrid {:>10.2}  saved {:.2}", r.cost_cloud_only, r.cost_hec, r.savings_cost_fraction);
        println!("  per device per year: {:.1} and {:.2} saved", r.energy_saved(), r.cost_saved());
    }

    // Local processing dearer than the cloud path: savings turn negative.
    let dear_local = EnergyParams::new(0.2, 0.3, 0.9)?;
    let r = analytic_scenario(&WorkloadProfile::agentic(), &dear_local, &cost, &split)?;
    println!("uneconomic edge: energy savings {:.2}", r.savings_energy_fraction);
    Ok(())
}
