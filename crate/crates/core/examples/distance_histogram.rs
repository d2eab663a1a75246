//! Distance distribution of a built topology. The histogram sums back to
//! the transmission.

use transmit::{evaluate_expr, parse, Builder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "mesh(6, 6, 6)".to_string());
    let expr = parse(&text)?;
    let g = Builder::new().build(&expr)?;
    let hist = g.distance_histogram()?;

    println!(
        "{expr}: {} vertices, diameter {}",
        g.vertex_count(),
        hist.diameter()
    );
    let widest = hist.counts().values().copied().max().unwrap_or(1);
    for (&d, &count) in hist.counts() {
        let bar = "#".repeat((count * 50 / widest).max(1) as usize);
        println!("{d:>3} {count:>8} {bar}");
    }
    assert_eq!(hist.transmission(), evaluate_expr(&expr)?.delta);
    println!("transmission {}", hist.transmission());
    Ok(())
}
