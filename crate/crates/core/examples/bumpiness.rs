//! Per-shift bumpiness of the hard permutation versus rotations and a random draw.

use permword::bumpiness::{bumpy_word_lower_bound, hard_permutation, is_bc_bumpy, verify_lemma33, BumpinessParams};
use permword::stats::sample_permutation;
use permword::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = 32;
    let params = BumpinessParams::very_bumpy();
    let cases = [
        ("hard", hard_permutation(n)?),
        ("tau^5", Permutation::tau_power(n, 5)?),
        ("random", sample_permutation(n, 1, 0)?),
    ];
    for (name, p) in &cases {
        let r = is_bc_bumpy(p, &params);
        let min = r.counts[r.worst_shift];
        println!(
            "{name:>7}: bumpy {}  worst shift {} with {min} far indices",
            r.is_bumpy, r.worst_shift
        );
        if r.is_bumpy {
            println!("         quadratic bound {}", bumpy_word_lower_bound(p)?);
        }
    }

    let loose = BumpinessParams::parse("1/4", "1/2")?;
    println!(
        "\n(1/4, 1/2)-bumpy hard permutation: {}",
        is_bc_bumpy(&cases[0].1, &loose).is_bumpy
    );
    println!("profile chain holds for n = 5..64: {}", (5..=64).all(verify_lemma33));
    Ok(())
}
