//! Bounds certificates for the hard permutation, with exact values where the
//! oracle can reach.

use permword::bounds::{certify_with, theorem11_formula};
use permword::bumpiness::hard_permutation;
use permword::oracle::{build_table_with, BuildOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!(
        "{:>3} {:>6} {:>6} {:>6} {:>6} {:>8} {:>8}",
        "n", "disp", "word", "exact", "synth", "budget", "formula"
    );
    for n in 3..=16 {
        let p = hard_permutation(n)?;
        let table = (n <= 9)
            .then(|| {
                build_table_with(
                    n,
                    BuildOptions {
                        track_parents: false,
                        ..Default::default()
                    },
                )
            })
            .transpose()?;
        let c = certify_with(&p, table.as_ref())?;
        assert!(c.is_consistent());
        let exact = c.exact.map_or("-".to_string(), |e| e.to_string());
        println!(
            "{:>3} {:>6} {:>6} {:>6} {:>6} {:>8} {:>8}",
            n,
            c.displacement_lb,
            c.word_lb,
            exact,
            c.upper_len,
            c.upper_formula,
            theorem11_formula(n).to_string()
        );
    }
    let c = certify_with(&hard_permutation(5)?, None)?;
    println!("\n{}", serde_json::to_string_pretty(&c)?);
    Ok(())
}
