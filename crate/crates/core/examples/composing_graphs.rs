//! Combining triples directly, without an expression: the formulas and the
//! builder expose the same operations.

use num_bigint::BigUint;
use transmit::formulas::{
    primitive_triple, rooted_product_triple, tilde_triple, wedge_copies, wedge_triple,
};
use transmit::{Builder, Primitive};

fn main() -> Result<(), transmit::Error> {
    let cycle = Primitive::Cycle(5u32.into());
    let star = Primitive::Star(3u32.into());
    let c = primitive_triple(&cycle)?;
    let s = primitive_triple(&star)?;

    let b = Builder::new();
    let gc = b.primitive(&cycle)?;
    let gs = b.primitive(&star)?;

    let show = |name: &str, t: &transmit::TransmissionTriple, g: &transmit::RootedGraph| {
        let ok = g
            .graph_transmission()
            .map(|d| d == t.delta)
            .unwrap_or(false);
        println!(
            "{name:<22} size {:>4}  delta {:>7}  delta0 {:>5}  oracle {}",
            t.size,
            t.delta,
            t.delta0,
            if ok { "ok" } else { "MISMATCH" }
        );
    };

    show(
        "wedge(C5, S3)",
        &wedge_triple(&[c.clone(), s.clone()])?,
        &b.wedge(&[gc.clone(), gs.clone()])?,
    );
    show(
        "C5 x S3",
        &rooted_product_triple(&c, &s),
        &b.rooted_product(&gc, &gs)?,
    );
    show(
        "S3 x C5",
        &rooted_product_triple(&s, &c),
        &b.rooted_product(&gs, &gc)?,
    );
    show("attach(C5)", &tilde_triple(&c), &b.attach(&gc)?);
    show(
        "4 copies of C5",
        &wedge_copies(&c, &BigUint::from(4u32))?,
        &b.wedge(&vec![gc.clone(); 4])?,
    );
    Ok(())
}
