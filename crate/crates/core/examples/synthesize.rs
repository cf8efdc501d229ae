//! Synthesize generator words for a few permutations and check them.
//!
//!     cargo run --example synthesize -- "3 1 2 5 4"

use permword::bumpiness::hard_permutation;
use permword::synthesis::{cycle_decomposition, synthesize, transposition_1l_word, upper_formula};
use permword::{evaluate_word, parse_permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut targets = vec![hard_permutation(7)?, hard_permutation(12)?];
    if let Some(text) = std::env::args().nth(1) {
        targets.insert(0, parse_permutation(&text)?);
    }
    for p in targets {
        let n = p.n();
        let w = synthesize(&p)?;
        assert_eq!(evaluate_word(&w, n)?, p);
        println!("{p}");
        println!("  cycles: {:?}", cycle_decomposition(&p));
        println!("  word:   {w}");
        println!("  length {} of budget {}", w.len(), upper_formula(n));
    }

    println!("\n(1 l) on n = 12:");
    for l in 2..=12 {
        let w = transposition_1l_word(12, l)?;
        println!("  l = {l:2}  len {:2}  {w}", w.len());
    }
    Ok(())
}
