//! Rooted simple graphs and the brute-force distance oracle.
//!
//! Everything here works on an explicit adjacency list and runs one BFS per
//! source vertex. It is the reference the closed forms in
//! [`crate::formulas`] are checked against, so it stays deliberately plain.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default vertex cap for oracle-backed construction.
pub const DEFAULT_MAX_VERTICES: usize = 100_000;

/// Distance reported by [`RootedGraph::bfs_distances`] for unreachable vertices.
pub const UNREACHABLE: u32 = u32::MAX;

/// A finite simple undirected graph with a distinguished root vertex.
///
/// Vertices are `0..vertex_count()`. Neighbor lists are strictly increasing,
/// which rules out duplicate edges and keeps iteration order deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    adjacency: Vec<Vec<usize>>,
    root: usize,
}

impl RootedGraph {
    /// Builds a graph from an edge list. Edges may be given in any order and
    /// either orientation; repeated edges collapse.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)], root: usize) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge {u}-{v} out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_adjacency(adjacency, root)
    }

    /// Builds a graph from neighbor lists, checking every invariant.
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>, root: usize) -> Result<Self> {
        let n = adjacency.len();
        if n == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        if root >= n {
            return Err(Error::invalid(format!(
                "root {root} out of range for {n} vertices"
            )));
        }
        for (i, list) in adjacency.iter().enumerate() {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!(
                    "neighbors of {i} are not strictly increasing"
                )));
            }
            for &j in list {
                if j >= n {
                    return Err(Error::invalid(format!("neighbor {j} of {i} out of range")));
                }
                if j == i {
                    return Err(Error::invalid(format!("self-loop at vertex {i}")));
                }
                if adjacency[j].binary_search(&i).is_err() {
                    return Err(Error::invalid(format!("edge {i}-{j} is not symmetric")));
                }
            }
        }
        Ok(Self { adjacency, root })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    /// Same graph with a different root.
    pub fn with_root(&self, root: usize) -> Result<Self> {
        if root >= self.vertex_count() {
            return Err(Error::invalid(format!("root {root} out of range")));
        }
        Ok(Self {
            adjacency: self.adjacency.clone(),
            root,
        })
    }

    /// Hop counts from `source` to every vertex; [`UNREACHABLE`] where no path exists.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        self.check_vertex(source)?;
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        self.bfs_into(source, &mut dist, &mut queue);
        Ok(dist)
    }

    fn bfs_into(&self, source: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) {
        dist.fill(UNREACHABLE);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == UNREACHABLE {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        let dist = self.bfs_distances(0).expect("vertex 0 always exists");
        dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// Sum of distances from `v` to every vertex (the status of `v`).
    pub fn vertex_transmission(&self, v: usize) -> Result<BigUint> {
        self.check_vertex(v)?;
        let mut dist = vec![UNREACHABLE; self.vertex_count()];
        let mut queue = VecDeque::new();
        Ok(BigUint::from(self.status(v, &mut dist, &mut queue)?))
    }

    /// Status of the root.
    pub fn root_transmission(&self) -> Result<BigUint> {
        self.vertex_transmission(self.root)
    }

    /// Sum of `d(i, j)` over all ordered vertex pairs.
    ///
    /// Sources are processed in parallel; per-source sums are combined in
    /// source order so the result does not depend on scheduling.
    pub fn graph_transmission(&self) -> Result<BigUint> {
        let n = self.vertex_count();
        let per_source: Vec<u64> = (0..n)
            .into_par_iter()
            .map_init(
                || (vec![UNREACHABLE; n], VecDeque::with_capacity(n)),
                |(dist, queue), s| self.status(s, dist, queue),
            )
            .collect::<Result<_>>()?;
        Ok(per_source
            .into_iter()
            .fold(BigUint::default(), |acc, s| acc + s))
    }

    /// Number of ordered pairs at each hop count.
    pub fn distance_histogram(&self) -> Result<DistanceHistogram> {
        let n = self.vertex_count();
        let partials: Vec<BTreeMap<u32, u64>> = (0..n)
            .into_par_iter()
            .map_init(
                || (vec![UNREACHABLE; n], VecDeque::with_capacity(n)),
                |(dist, queue), s| {
                    self.bfs_into(s, dist, queue);
                    let mut counts = BTreeMap::new();
                    for &d in dist.iter() {
                        if d == UNREACHABLE {
                            return Err(Error::Disconnected);
                        }
                        *counts.entry(d).or_insert(0u64) += 1;
                    }
                    Ok(counts)
                },
            )
            .collect::<Result<_>>()?;
        let mut counts = BTreeMap::new();
        for partial in partials {
            for (d, c) in partial {
                *counts.entry(d).or_insert(0u64) += c;
            }
        }
        Ok(DistanceHistogram { counts })
    }

    fn status(&self, v: usize, dist: &mut [u32], queue: &mut VecDeque<usize>) -> Result<u64> {
        self.bfs_into(v, dist, queue);
        dist.iter().try_fold(0u64, |acc, &d| {
            if d == UNREACHABLE {
                Err(Error::Disconnected)
            } else {
                Ok(acc + u64::from(d))
            }
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.vertex_count()
            )));
        }
        Ok(())
    }
}

/// Number of ordered vertex pairs at each hop count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DistanceHistogram {
    counts: BTreeMap<u32, u64>,
}

impl DistanceHistogram {
    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn count(&self, distance: u32) -> u64 {
        self.counts.get(&distance).copied().unwrap_or(0)
    }

    /// Total ordered pairs, i.e. `|G|²`.
    pub fn total_pairs(&self) -> BigUint {
        self.counts
            .values()
            .fold(BigUint::default(), |acc, &c| acc + c)
    }

    /// `Σ d · counts[d]`, which is the graph transmission.
    pub fn transmission(&self) -> BigUint {
        self.counts
            .iter()
            .fold(BigUint::default(), |acc, (&d, &c)| {
                acc + BigUint::from(d) * c
            })
    }

    pub fn diameter(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }
}
