//! Perfect trees three ways: the wedge/attach recurrence, the closed forms
//! and the generating-function coefficients.

use num_bigint::BigUint;
use transmit::formulas::{gf_series, tree_closed_forms, tree_triple};

fn main() -> Result<(), transmit::Error> {
    let arity = BigUint::from(3u32);
    let series = gf_series(&arity, 8)?;
    println!("depth  size  delta  closed form  series");
    for depth in 1..=8u32 {
        let t = tree_triple(&arity, depth)?;
        let c = tree_closed_forms(&arity, depth)?;
        let s = &series.terms[depth as usize - 1];
        println!("{depth:>5}  {:>5}  {}  {}  {}", t.size, t.delta, c.delta, s);
        assert!(t.delta == c.delta && &t.delta == s);
    }

    // well past 64 bits, still exact
    let big = tree_triple(&BigUint::from(2u32), 40)?;
    println!(
        "binary tree of depth 40: {} vertices, delta = {}",
        big.size, big.delta
    );
    Ok(())
}
