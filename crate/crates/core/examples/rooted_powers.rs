//! Rooted powers: the coefficient recurrence, its closed form, and a power
//! far too large to build.

use num_bigint::BigUint;
use transmit::formulas::{power_coefficients, power_coefficients_closed};
use transmit::{evaluate_expr, parse, Builder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = BigUint::from(4u32);
    println!("k  a_k(4)  b_k(4)");
    for k in 1..=6 {
        let (a, b) = power_coefficients(&n, k)?;
        assert_eq!((a.clone(), b.clone()), power_coefficients_closed(&n, k)?);
        println!("{k}  {a}  {b}");
    }

    // small enough to check by BFS
    let expr = parse("power(star(3), 3)")?;
    let t = evaluate_expr(&expr)?;
    let g = Builder::new().build(&expr)?;
    assert_eq!(t.delta, g.graph_transmission()?);
    println!("{expr}: {} vertices, delta = {}", t.size, t.delta);

    // 2^200 vertices; only the formulas can reach this
    let expr = parse("power(complete(2), 200)")?;
    let t = evaluate_expr(&expr)?;
    println!(
        "{expr}: delta has {} decimal digits",
        t.delta.to_string().len()
    );
    match Builder::new().build(&expr) {
        Err(e) => println!("building it is refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
