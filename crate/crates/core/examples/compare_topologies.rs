//! Ranks candidate networks of 64 nodes by mean hop distance and
//! shows the expected message count for a given rate and time span.

use transmit::metrics::{compare_rank, display_rational, parse_decimal};
use transmit::{evaluate_expr, parse, summarize, SortKey};

const CANDIDATES: &[&str] = &[
    "complete(64)",
    "cycle(64)",
    "star(63)",
    "path(64)",
    "mesh(8, 8)",
    "mesh(4, 4, 4)",
    "power(complete(2), 6)",
    "power(star(3), 3)",
    "tree(2, 5)",
    "wedge(tree(3, 3), cycle(25))",
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rate = parse_decimal("0.05")?;
    let time = parse_decimal("3600")?;
    let mut reports = Vec::new();
    for text in CANDIDATES {
        let expr = parse(text)?;
        let t = evaluate_expr(&expr)?;
        reports.push(summarize(&expr.to_string(), &t, Some(&rate), Some(&time)));
    }
    let ranked = compare_rank(reports, SortKey::MeanDistinct)?;
    println!(
        "{:<44} {:>5} {:>8} {:>10} {:>12}",
        "topology", "size", "delta", "mean", "messages"
    );
    for r in &ranked {
        println!(
            "{:<44} {:>5} {:>8} {:>10} {:>12}",
            r.expression,
            r.triple.size,
            r.triple.delta,
            r.mean_distinct
                .as_ref()
                .map_or("-".into(), display_rational),
            r.expected_messages
                .as_ref()
                .map_or("-".into(), display_rational),
        );
    }
    Ok(())
}
