//! Parse a topology, evaluate it with the closed forms and check the result
//! against a BFS over the built graph.
//!
//! cargo run --example quickstart -- "wedge(power(cycle(6), 3), attach(tree(2, 1)))"

use transmit::{evaluate_expr, parse, Builder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "wedge(power(cycle(6), 3), attach(tree(2, 1)))".to_string());
    let expr = parse(&text)?;
    println!("expression   {expr}");

    let t = evaluate_expr(&expr)?;
    println!("size         {}", t.size);
    println!("delta        {}", t.delta);
    println!("delta0       {}", t.delta0);

    let g = Builder::new().build(&expr)?;
    let delta = g.graph_transmission()?;
    let delta0 = g.root_transmission()?;
    println!(
        "oracle       {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    println!("agrees       {}", delta == t.delta && delta0 == t.delta0);
    Ok(())
}
