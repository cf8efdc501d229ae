//! Build an exact complexity table, inspect it, and round-trip the binary format.
//!
//!     cargo run --release --example oracle -- 9

use permword::oracle::{build_table, ComplexityTable};
use permword::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(7);
    let table = build_table(n)?;
    println!("S_{n}: diameter {}", table.diameter());
    println!("{}", table.spheres_csv());

    for k in 0..n as i64 {
        let t = Permutation::tau_power(n, k)?;
        println!(
            "tau^{k}: {} via {}",
            table.exact_complexity(&t)?,
            table.geodesic_word(&t)?
        );
    }

    let mut buf = Vec::new();
    table.write_binary(&mut buf)?;
    let back = ComplexityTable::read_binary(&buf[..])?;
    assert_eq!(back.sphere_sizes(), table.sphere_sizes());
    println!("binary table: {} bytes", buf.len());
    Ok(())
}
