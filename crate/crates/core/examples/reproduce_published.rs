//! Recomputes the published per-device figures and prints which ones match
//! and which are documented errata.
//!
//! ```bash
//! cargo run --example reproduce_published
//! ```

use hec_sim::reporting::{reproduce_published, Format, MatchStatus};

fn main() -> hec_sim::Result<()> {
    let report = reproduce_published();
    print!("{}", String::from_utf8_lossy(&report.render(Format::Text)?));

    let errata: Vec<&str> = report
        .entries
        .iter()
        .filter(|e| e.status == MatchStatus::KnownErratum)
        .map(|e| e.label.as_str())
        .collect();
    println!("errata: {errata:?}");
    if report.has_unexpected_mismatch() {
        std::process::exit(2);
    }
    Ok(())
}
