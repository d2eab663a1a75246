//! Exact transmission of composed network topologies.
//!
//! The transmission `δ(G)` of a connected graph is the sum of hop distances
//! over all ordered vertex pairs. Under shortest-path routing with a uniform
//! message rate it is proportional to the expected traffic, which makes it a
//! direct way to compare network topologies.
//!
//! This crate computes `δ(G)` two independent ways:
//!
//! * [`formulas`] evaluates closed forms on `(|G|, δ, δ₀)` triples, composing
//!   one-point unions, rooted products, rooted powers and pendant-root
//!   attachment, in arbitrary precision and without building any graph;
//! * [`graph`] runs a BFS from every vertex of an explicitly built graph
//!   (see [`build`]).
//!
//! Topologies are written in a small expression language ([`parse`]):
//!
//! ```
//! use transmit::{evaluate_expr, parse, Builder};
//!
//! let expr = parse("wedge(tree(2, 2), power(complete(2), 3))").unwrap();
//! let formula = evaluate_expr(&expr).unwrap();
//! let graph = Builder::new().build(&expr).unwrap();
//! assert_eq!(formula.delta, graph.graph_transmission().unwrap());
//! assert_eq!(formula.delta0, graph.root_transmission().unwrap());
//! ```
//!
//! The `examples/` directory has one runnable program per capability, e.g.
//! `cargo run --example compare_topologies`.

pub mod build;
pub mod cli;
pub mod error;
pub mod expr;
pub mod formulas;
pub mod graph;
pub mod metrics;
pub mod parse;

pub use build::Builder;
pub use error::{Error, Result, Violation};
pub use expr::{Primitive, TopologyExpr};
pub use formulas::{evaluate_expr, TransmissionTriple};
pub use graph::{DistanceHistogram, RootedGraph, DEFAULT_MAX_VERTICES};
pub use metrics::{summarize, SortKey, TopologyReport};
pub use parse::{parse, ParseError};
