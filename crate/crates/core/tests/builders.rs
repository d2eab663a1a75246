mod common;

use num_bigint::BigUint;
use transmit::{Builder, RootedGraph, TopologyExpr as E, TransmissionTriple};

fn measured(g: &RootedGraph) -> TransmissionTriple {
    TransmissionTriple {
        size: g.vertex_count().into(),
        delta: g.graph_transmission().unwrap(),
        delta0: g.root_transmission().unwrap(),
    }
}

/// Tree built the long way: wedge of `arity` attached copies of the
/// depth-`k − 1` tree.
fn recursive_tree(arity: usize, depth: u32) -> RootedGraph {
    let b = Builder::new();
    let mut t = RootedGraph::from_edges(1, &[], 0).unwrap();
    for _ in 0..depth {
        let branch = b.attach(&t).unwrap();
        t = b.wedge(&vec![branch; arity]).unwrap();
    }
    t
}

#[test]
fn direct_trees_match_recursive_construction() {
    for arity in 1..=4u64 {
        for depth in 0..=4u32 {
            if arity == 4 && depth == 4 {
                continue;
            }
            let direct = Builder::new().build(&E::tree(arity, depth.into())).unwrap();
            let recursive = recursive_tree(arity as usize, depth);
            assert_eq!(direct.edge_count(), recursive.edge_count());
            assert_eq!(
                measured(&direct),
                measured(&recursive),
                "tree({arity}, {depth})"
            );
        }
    }
}

#[test]
fn tree_levels_have_powers_of_arity() {
    let g = Builder::new().build(&E::tree(3, 4)).unwrap();
    let depth = g.bfs_distances(0).unwrap();
    for level in 0..=4u32 {
        let count = depth.iter().filter(|&&d| d == level).count();
        assert_eq!(count, 3usize.pow(level));
    }
}

#[test]
fn size_identities() {
    let b = Builder::new();
    let parts: Vec<_> = [E::star(3), E::cycle(5), E::tree(2, 2)]
        .iter()
        .map(|e| b.build(e).unwrap())
        .collect();
    let w = b.wedge(&parts).unwrap();
    assert_eq!(w.vertex_count(), 4 + 5 + 7 - 2);
    let p = b.rooted_product(&parts[1], &parts[2]).unwrap();
    assert_eq!(p.vertex_count(), 35);
    assert_eq!(b.attach(&parts[0]).unwrap().vertex_count(), 5);
    for (n, k) in [(2u64, 5u64), (3, 3), (5, 2)] {
        let size = (n.pow(k as u32 + 1) - 1) / (n - 1);
        let g = b.build(&E::tree(n, k)).unwrap();
        assert_eq!(g.vertex_count() as u64, size);
        assert_eq!(E::tree(n, k).estimated_size(), BigUint::from(size));
    }
}

#[test]
fn degree_checks() {
    let b = Builder::new();
    for n in 1..10 {
        assert_eq!(b.build(&E::star(n)).unwrap().degree(0), n as usize);
    }
    for dims in [&[1u64, 1][..], &[5], &[2, 1, 3], &[3, 3, 3], &[1, 1, 7]] {
        let g = b.build(&E::mesh(dims)).unwrap();
        let expected = dims.iter().filter(|&&d| d >= 2).count();
        assert_eq!(g.degree(0), expected, "mesh{dims:?}");
    }
}

#[test]
fn every_built_graph_is_valid_and_connected() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for e in common::random_corpus(&mut rng, 100, 4, 2000) {
        let g = Builder::new().build(&e).unwrap();
        assert!(g.is_connected(), "{e}");
        // round-trip through the checked constructor re-validates every invariant
        let again = RootedGraph::from_adjacency(g.adjacency().to_vec(), g.root()).unwrap();
        assert_eq!(again, g);
        assert_eq!(BigUint::from(g.vertex_count()), e.estimated_size());
    }
}

#[test]
fn oracle_is_deterministic() {
    let g = Builder::new().build(&E::mesh(&[16, 16, 4])).unwrap();
    let first = g.graph_transmission().unwrap();
    for _ in 0..5 {
        assert_eq!(g.graph_transmission().unwrap(), first);
    }
}
