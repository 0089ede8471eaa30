//! Monte Carlo over a fleet of agentic devices, checked against the closed
//! form. Pass a device count to change the fleet size.
//!
//! ```bash
//! cargo run --release --example monte_carlo_fleet -- 100000
//! ```

use std::time::Instant;

use hec_sim::simulation::{compare_with_analytic, run_fleet, Scenario};
use hec_sim::workload::ParetoParams;

fn main() -> hec_sim::Result<()> {
    let n_devices = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(10_000);

    for alpha in [2.0, 3.0] {
        let scenario = Scenario {
            pareto: ParetoParams::new(alpha, 1.0)?,
            n_devices,
            ..Scenario::default()
        };
        let start = Instant::now();
        let agg = run_fleet(&scenario)?;
        let report = compare_with_analytic(&agg, &scenario.analytic()?);

        println!("alpha = {alpha}: {n_devices} devices in {:?}", start.elapsed());
        println!(
            "  energy {:.1} +- {:.1} kWh, cost {:.2} +- {:.2} USD, edge share {:.4}",
            agg.energy_hec.mean,
            agg.energy_hec.half_width(),
            agg.cost_hec.mean,
            agg.cost_hec.half_width(),
            agg.realized_edge_fraction.mean,
        );
        for d in &report.entries {
            println!(
                "  {:<15} analytic {:>10.4}  simulated {:>10.4}  rel {:>7.4}%  in CI: {}",
                d.quantity,
                d.analytic,
                d.simulated,
                d.rel_deviation * 100.0,
                d.within_ci
            );
        }
    }
    Ok(())
}
