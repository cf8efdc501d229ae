//! The counting bound on non-bumpy permutations as a fraction of n!.

use permword::bumpiness::not_bumpy_count_bound;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = not_bumpy_count_bound(8)?;
    println!("n = 8: bound {} ({} as a ratio to 8!)", b.count, b.ratio);
    for n in [16, 64, 256, 1000, 2000, 4000, 6000, 8000] {
        let b = not_bumpy_count_bound(n)?;
        println!("n = {n:5}  p = {:5}  ln(bound / n!) = {:10.2}", b.p, b.ln_ratio());
    }
    Ok(())
}
