//! Savings across edge splits, closed form next to Monte Carlo, as CSV for
//! plotting.
//!
//! ```bash
//! cargo run --release --example edge_split_sweep > sweep.csv
//! ```

use std::io::Write;

use hec_sim::reporting::{render_table, split_range, sweep_edge_split, Format, Source};
use hec_sim::simulation::Scenario;

fn main() -> hec_sim::Result<()> {
    let base = Scenario {
        n_devices: 5_000,
        ..Scenario::default()
    };
    let splits = split_range(0.1, 0.9, 0.1)?;

    let mut rows = sweep_edge_split(&base, &splits, Source::Analytic)?;
    rows.extend(sweep_edge_split(&base, &splits, Source::MonteCarlo)?);

    std::io::stdout().write_all(&render_table(&rows, Format::Csv)?)?;
    eprint!("{}", String::from_utf8_lossy(&render_table(&rows[..splits.len()], Format::Text)?));
    Ok(())
}
