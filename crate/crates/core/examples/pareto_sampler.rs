//! Pareto task sizes: density, quantiles, sampling, normalization and
//! placement for a single device.
//!
//! ```bash
//! cargo run --example pareto_sampler
//! ```

use hec_sim::model::{SplitPolicy, WorkloadProfile};
use hec_sim::rng;
use hec_sim::workload::{
    allocate, check_sampler, edge_cloud_volumes, normalize_to_annual, pareto_pdf, pareto_quantile,
    sample_tasks, ParetoParams,
};

fn main() -> hec_sim::Result<()> {
    let pp = ParetoParams::default();
    println!("alpha {} x_min {} mean {}", pp.alpha(), pp.x_min(), pp.mean());
    for x in [1.0, 2.0, 4.0, 8.0] {
        println!("  f({x}) = {:.5}", pareto_pdf(x, &pp)?);
    }
    for u in [0.5, 0.9, 0.99, 0.999] {
        println!("  q({u}) = {:.3} GB", pareto_quantile(u, &pp)?);
    }

    for alpha in [2.0, 3.0] {
        let c = check_sampler(&ParetoParams::new(alpha, 1.0)?, 100_000, 42)?;
        println!(
            "alpha {alpha}: mean {:.4} (analytic {:.4}), KS {:.5}, min {:.5}, {}",
            c.sample_mean,
            c.analytic_mean,
            c.ks_statistic,
            c.sample_min,
            if c.passed { "pass" } else { "fail" }
        );
    }

    // One device-year: 365 daily tasks scaled to 7,300 GB, 80% placed on the edge.
    let mut stream = rng::stream(42, 0);
    let sizes = sample_tasks(&mut stream, 365, &pp)?;
    let sizes = normalize_to_annual(&sizes, WorkloadProfile::agentic().annual_gb())?;
    let tasks = allocate(&mut stream, &sizes, &SplitPolicy::new(0.8)?)?;
    let (edge, cloud) = edge_cloud_volumes(&tasks);
    let largest = sizes.iter().map(|g| g.0).fold(0.0, f64::max);
    println!(
        "device 0: {} of {} tasks on edge, {:.1} edge / {:.1} cloud, largest task {largest:.1} GB",
        tasks.edge_count(),
        tasks.len(),
        edge,
        cloud
    );
    Ok(())
}
