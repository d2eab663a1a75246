#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use transmit::{Builder, TopologyExpr, TransmissionTriple};

/// Oracle triple `(|G|, δ, δ₀)` from the built graph.
pub fn oracle(expr: &TopologyExpr, cap: usize) -> TransmissionTriple {
    let g = Builder::with_max_vertices(cap)
        .build(expr)
        .unwrap_or_else(|e| panic!("cannot build {expr}: {e}"));
    assert!(g.is_connected(), "{expr} built disconnected");
    TransmissionTriple {
        size: g.vertex_count().into(),
        delta: g.graph_transmission().unwrap(),
        delta0: g.root_transmission().unwrap(),
    }
}

/// Parameter ranges for random expressions.
#[derive(Clone, Copy)]
pub struct Ranges {
    pub max_param: u64,
    pub max_depth: u64,
    pub max_exponent: u64,
}

pub const SMALL: Ranges = Ranges {
    max_param: 6,
    max_depth: 3,
    max_exponent: 3,
};

pub const LARGE: Ranges = Ranges {
    max_param: 40,
    max_depth: 12,
    max_exponent: 6,
};

pub fn random_primitive<R: Rng>(rng: &mut R, r: Ranges) -> TopologyExpr {
    match rng.gen_range(0..6) {
        0 => TopologyExpr::complete(rng.gen_range(1..=r.max_param)),
        1 => TopologyExpr::cycle(rng.gen_range(3..=r.max_param.max(3) + 2)),
        2 => TopologyExpr::star(rng.gen_range(1..=r.max_param)),
        3 => TopologyExpr::path(rng.gen_range(1..=r.max_param + 2)),
        4 => {
            let dims: Vec<u64> = (0..rng.gen_range(1..=3))
                .map(|_| rng.gen_range(1..=r.max_param.min(5)))
                .collect();
            TopologyExpr::mesh(&dims)
        }
        _ => TopologyExpr::tree(rng.gen_range(1..=3), rng.gen_range(0..=r.max_depth)),
    }
}

/// Random valid expression of nesting depth at most `depth`.
pub fn random_expr<R: Rng>(rng: &mut R, depth: usize, r: Ranges) -> TopologyExpr {
    if depth <= 1 || rng.gen_bool(0.3) {
        return random_primitive(rng, r);
    }
    let sub = depth - 1;
    match rng.gen_range(0..4) {
        0 => {
            let n = rng.gen_range(1..=3);
            TopologyExpr::wedge((0..n).map(|_| random_expr(rng, sub, r)).collect())
        }
        1 => TopologyExpr::rprod(random_expr(rng, sub, r), random_expr(rng, sub, r)),
        2 => TopologyExpr::power(random_expr(rng, sub, r), rng.gen_range(1..=r.max_exponent)),
        _ => TopologyExpr::attach(random_expr(rng, sub, r)),
    }
}

/// `count` random expressions whose built graphs stay within `cap` vertices.
pub fn random_corpus<R: Rng>(
    rng: &mut R,
    count: usize,
    depth: usize,
    cap: usize,
) -> Vec<TopologyExpr> {
    let cap = num_bigint::BigUint::from(cap);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let e = random_expr(rng, depth, SMALL);
        if e.estimated_size() <= cap {
            out.push(e);
        }
    }
    out
}

pub fn shuffled<T: Clone, R: Rng>(rng: &mut R, items: &[T]) -> Vec<T> {
    let mut v = items.to_vec();
    v.shuffle(rng);
    v
}
