//! Materializes primitives and combinators as explicit [`RootedGraph`]s.
//!
//! Vertex numbering is fixed so that oracle results are reproducible:
//!
//! * complete, cycle, path: `0..n` in natural order, root 0;
//! * star: center 0 (the root), leaves `1..=n`;
//! * mesh: row-major over 0-based coordinates (last coordinate fastest),
//!   root at the all-zero corner;
//! * tree: breadth-first, root 0, children of `v` are `a*v + 1 ..= a*v + a`;
//! * wedge: shared root 0, then each part's non-root vertices in part order;
//! * rooted product: `(g, h)` maps to `g * |H| + h`;
//! * attach: new root 0, old vertices shifted by one.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::expr::{small, Primitive, TopologyExpr};
use crate::graph::{RootedGraph, DEFAULT_MAX_VERTICES};

/// Graph constructor with a vertex cap.
#[derive(Debug, Clone, Copy)]
pub struct Builder {
    max_vertices: usize,
}

impl Default for Builder {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self { max_vertices }
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    fn admit(&self, size: &BigUint) -> Result<usize> {
        match size.to_usize() {
            Some(n) if n <= self.max_vertices => Ok(n),
            _ => Err(Error::ResourceLimit {
                estimated: size.clone(),
                cap: self.max_vertices,
            }),
        }
    }

    pub fn primitive(&self, p: &Primitive) -> Result<RootedGraph> {
        p.validate()?;
        let n = self.admit(&p.size())?;
        let mut edges = Vec::new();
        match p {
            Primitive::Complete(_) => {
                for i in 0..n {
                    edges.extend((i + 1..n).map(|j| (i, j)));
                }
            }
            Primitive::Cycle(_) => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
            Primitive::Star(_) => edges.extend((1..n).map(|i| (0, i))),
            Primitive::Path(_) => edges.extend((1..n).map(|i| (i - 1, i))),
            Primitive::Mesh(dims) => {
                // each dim fits in usize since the product does
                let dims: Vec<usize> = dims.iter().map(|d| d.to_usize().unwrap()).collect();
                let mut strides = vec![1usize; dims.len()];
                for t in (0..dims.len().saturating_sub(1)).rev() {
                    strides[t] = strides[t + 1] * dims[t + 1];
                }
                for v in 0..n {
                    for (&len, &stride) in dims.iter().zip(&strides) {
                        if (v / stride) % len + 1 < len {
                            edges.push((v, v + stride));
                        }
                    }
                }
            }
            Primitive::Tree { arity, .. } => {
                // a huge arity only validates at depth 0, where no edges exist
                let a = arity.to_usize().unwrap_or(usize::MAX);
                edges.extend((1..n).map(|child| ((child - 1) / a, child)));
            }
        }
        RootedGraph::from_edges(n, &edges, 0)
    }

    /// One-point union: the roots of all parts become vertex 0.
    pub fn wedge(&self, parts: &[RootedGraph]) -> Result<RootedGraph> {
        if parts.is_empty() {
            return Err(Error::single_violation(
                "wedge",
                "wedge needs at least one part",
            ));
        }
        ensure_connected(parts)?;
        let total: usize = parts.iter().map(|p| p.vertex_count() - 1).sum::<usize>() + 1;
        let n = self.admit(&total.into())?;
        let mut edges = Vec::new();
        let mut next = 1;
        for part in parts {
            let map: Vec<usize> = (0..part.vertex_count())
                .map(|v| {
                    if v == part.root() {
                        0
                    } else {
                        next += 1;
                        next - 1
                    }
                })
                .collect();
            edges.extend(part.edges().into_iter().map(|(u, v)| (map[u], map[v])));
        }
        RootedGraph::from_edges(n, &edges, 0)
    }

    /// Rooted product `G ∘ H`: a copy of `h` hangs from every vertex of `g`.
    pub fn rooted_product(&self, g: &RootedGraph, h: &RootedGraph) -> Result<RootedGraph> {
        ensure_connected([g, h])?;
        let hn = h.vertex_count();
        let n = self.admit(&(BigUint::from(g.vertex_count()) * hn))?;
        let h0 = h.root();
        let h_edges = h.edges();
        let mut edges: Vec<_> = g
            .edges()
            .into_iter()
            .map(|(a, b)| (a * hn + h0, b * hn + h0))
            .collect();
        for copy in 0..g.vertex_count() {
            let base = copy * hn;
            edges.extend(h_edges.iter().map(|&(a, b)| (base + a, base + b)));
        }
        RootedGraph::from_edges(n, &edges, g.root() * hn + h0)
    }

    /// Adds a pendant vertex 0 joined to the old root and makes it the root.
    pub fn attach(&self, g: &RootedGraph) -> Result<RootedGraph> {
        ensure_connected([g])?;
        let n = self.admit(&(BigUint::from(g.vertex_count()) + 1u32))?;
        let mut edges: Vec<_> = g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect();
        edges.push((0, g.root() + 1));
        RootedGraph::from_edges(n, &edges, 0)
    }

    /// `G¹ = G`, `Gᵏ⁺¹ = Gᵏ ∘ G`.
    pub fn power(&self, g: &RootedGraph, k: u32) -> Result<RootedGraph> {
        if k == 0 {
            return Err(Error::single_violation("power", "exponent must be ≥ 1"));
        }
        self.admit(&BigUint::from(g.vertex_count()).pow(k))?;
        let mut acc = g.clone();
        for _ in 1..k {
            acc = self.rooted_product(&acc, g)?;
        }
        Ok(acc)
    }

    /// Validates, checks the estimated size against the cap, then builds.
    pub fn build(&self, e: &TopologyExpr) -> Result<RootedGraph> {
        e.validate()?;
        self.admit(&e.estimated_size())?;
        self.build_validated(e)
    }

    fn build_validated(&self, e: &TopologyExpr) -> Result<RootedGraph> {
        match e {
            TopologyExpr::Primitive(p) => self.primitive(p),
            TopologyExpr::Wedge(children) => {
                let parts = children
                    .iter()
                    .map(|c| self.build_validated(c))
                    .collect::<Result<Vec<_>>>()?;
                self.wedge(&parts)
            }
            TopologyExpr::RootedProduct(l, r) => {
                self.rooted_product(&self.build_validated(l)?, &self.build_validated(r)?)
            }
            TopologyExpr::Power { base, exponent } => {
                let k = small(exponent).expect("validated exponent");
                self.power(&self.build_validated(base)?, k)
            }
            TopologyExpr::Attach(child) => self.attach(&self.build_validated(child)?),
        }
    }
}

fn ensure_connected<'a>(graphs: impl IntoIterator<Item = &'a RootedGraph>) -> Result<()> {
    if graphs.into_iter().all(RootedGraph::is_connected) {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TopologyExpr as E;

    fn b() -> Builder {
        Builder::new()
    }

    fn prim(e: TopologyExpr) -> RootedGraph {
        b().build(&e).unwrap()
    }

    fn single() -> RootedGraph {
        RootedGraph::from_edges(1, &[], 0).unwrap()
    }

    fn k2() -> RootedGraph {
        prim(E::complete(2))
    }

    fn path_edges(n: usize) -> Vec<(usize, usize)> {
        (1..n).map(|i| (i - 1, i)).collect()
    }

    #[test]
    fn star_and_tree_numbering() {
        let s = prim(E::star(3));
        assert_eq!(
            (s.vertex_count(), s.edges(), s.root()),
            (4, vec![(0, 1), (0, 2), (0, 3)], 0)
        );
        let t = prim(E::tree(2, 2));
        assert_eq!(
            t.edges(),
            vec![(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]
        );
        assert_eq!(prim(E::tree(3, 0)).vertex_count(), 1);
        assert_eq!(prim(E::tree(1, 3)).edges(), path_edges(4));
    }

    #[test]
    fn mesh_numbering() {
        let m = prim(E::mesh(&[2, 3]));
        assert_eq!(m.vertex_count(), 6);
        assert_eq!(m.edge_count(), 7);
        assert_eq!(
            m.edges(),
            vec![(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]
        );
        assert_eq!(m.graph_transmission().unwrap(), 50u32.into());
        // corner degree counts dimensions of length ≥ 2
        assert_eq!(prim(E::mesh(&[1, 4, 3])).degree(0), 2);
        assert_eq!(prim(E::mesh(&[2, 2, 2])).degree(0), 3);
        assert_eq!(prim(E::mesh(&[1])).vertex_count(), 1);
    }

    #[test]
    fn cycle_and_complete() {
        let c = prim(E::cycle(5));
        assert!(c.adjacency().iter().all(|l| l.len() == 2));
        assert_eq!(prim(E::complete(4)).edge_count(), 6);
        assert_eq!(prim(E::complete(1)).vertex_count(), 1);
    }

    #[test]
    fn primitive_errors() {
        assert!(matches!(b().build(&E::cycle(2)), Err(Error::Validation(_))));
        assert!(matches!(
            Builder::with_max_vertices(10).build(&E::path(11)),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn wedge_cases() {
        let s = prim(E::star(3));
        let w = b().wedge(std::slice::from_ref(&s)).unwrap();
        assert_eq!(w, s);

        let w = b().wedge(&[k2(), k2()]).unwrap();
        assert_eq!((w.edges(), w.root()), (vec![(0, 1), (0, 2)], 0));

        let w = b().wedge(&[k2(), k2(), k2()]).unwrap();
        assert_eq!(w, s);
        assert_eq!(w.graph_transmission().unwrap(), 18u32.into());

        assert!(matches!(b().wedge(&[]), Err(Error::Validation(_))));
    }

    #[test]
    fn wedge_renumbers_non_zero_roots() {
        let p = RootedGraph::from_edges(3, &path_edges(3), 1).unwrap();
        let w = b().wedge(std::slice::from_ref(&p)).unwrap();
        assert_eq!((w.root(), w.edges()), (0, vec![(0, 1), (0, 2)]));
        assert_eq!(
            w.root_transmission().unwrap(),
            p.root_transmission().unwrap()
        );
    }

    #[test]
    fn rooted_product_cases() {
        let p = b().rooted_product(&k2(), &k2()).unwrap();
        // copies {0,1} and {2,3} joined at their roots 0 and 2
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(p.graph_transmission().unwrap(), 20u32.into());
        assert_eq!(p.root_transmission().unwrap(), 4u32.into());

        let g = prim(E::tree(2, 2));
        assert_eq!(b().rooted_product(&g, &single()).unwrap(), g);
        assert_eq!(b().rooted_product(&single(), &g).unwrap(), g);
        assert!(Builder::with_max_vertices(40)
            .rooted_product(&g, &g)
            .is_err());
    }

    #[test]
    fn attach_cases() {
        let t = b().attach(&single()).unwrap();
        assert_eq!((t.edges(), t.root()), (vec![(0, 1)], 0));
        let t = b().attach(&t).unwrap();
        assert_eq!((t.edges(), t.root()), (path_edges(3), 0));
        let t = b().attach(&prim(E::star(2))).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.root_transmission().unwrap(), 5u32.into());
    }

    #[test]
    fn power_cases() {
        assert_eq!(b().power(&k2(), 1).unwrap(), k2());
        let p2 = b().power(&k2(), 2).unwrap();
        assert_eq!(p2, b().rooted_product(&k2(), &k2()).unwrap());
        let p3 = b().power(&k2(), 3).unwrap();
        assert_eq!(p3.vertex_count(), 8);
        assert_eq!(p3.graph_transmission().unwrap(), 136u32.into());
        assert!(b().power(&k2(), 0).is_err());
    }

    #[test]
    fn build_expressions() {
        assert_eq!(prim(E::complete(3)).edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            prim(E::wedge(vec![E::complete(2), E::complete(2)])).edges(),
            vec![(0, 1), (0, 2)]
        );
        assert_eq!(prim(E::power(E::complete(2), 2)).edge_count(), 3);
        match b().build(&E::power(E::complete(2), 30)) {
            Err(Error::ResourceLimit { estimated, cap }) => {
                assert_eq!(estimated, BigUint::from(1u64 << 30));
                assert_eq!(cap, DEFAULT_MAX_VERTICES);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn disconnected_inputs_rejected() {
        let g = RootedGraph::from_edges(2, &[], 0).unwrap();
        assert!(matches!(b().attach(&g), Err(Error::Disconnected)));
        assert!(matches!(
            b().wedge(std::slice::from_ref(&g)),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            b().rooted_product(&k2(), &g),
            Err(Error::Disconnected)
        ));
    }
}
