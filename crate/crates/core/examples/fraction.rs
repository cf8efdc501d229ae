//! Monte Carlo very-bumpy fractions next to the exhaustive count at n = 8.

use permword::bumpiness::BumpinessParams;
use permword::stats::{bumpy_fraction_estimate, exhaustive_bumpy_count};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let params = BumpinessParams::very_bumpy();
    for n in 4..=9 {
        let (bumpy, total) = exhaustive_bumpy_count(n)?;
        println!(
            "n = {n}: exhaustive {bumpy}/{total} = {:.6}",
            bumpy as f64 / total as f64
        );
    }
    for n in [8, 16, 32, 64, 128, 256, 512] {
        let r = bumpy_fraction_estimate(n, 2000, 42, &params)?;
        println!(
            "n = {n:3}: {:.4}  95% CI [{:.4}, {:.4}]",
            r.fraction, r.ci_low, r.ci_high
        );
    }
    Ok(())
}
