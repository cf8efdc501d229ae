//! CSV of lower bound, exact complexity and synthesized length for random permutations.
//!
//!     cargo run --release --example gap_report -- 8 20

use permword::stats::{bound_gap_report, gap_rows_csv};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let samples = args.next().map(|s| s.parse()).transpose()?.unwrap_or(20);
    let rows = bound_gap_report(n, samples, 0)?;
    assert!(rows.iter().all(|r| r.is_sandwiched()));
    print!("{}", gap_rows_csv(&rows)?);
    Ok(())
}
