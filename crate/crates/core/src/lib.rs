//! Exact metric invariants of finite connected graphs.
//!
//! Everything in this crate is built on top of two immutable values: a
//! validated simple connected [`Graph`] and its dense all-pairs
//! [`DistanceMatrix`] (BFS hop counts). On top of those it computes, with
//! exact integer / half-integer arithmetic and deterministic extremal
//! witnesses:
//!
//! * the alpha index (smallest `i` such that two shortest paths sharing a
//!   terminal edge concatenate to a path short by at most `i`),
//! * Gromov hyperbolicity via the four-point condition,
//! * interval thinness (maximum slice diameter) and slice triangle thinness,
//! * bow-metric defects for a given half-integer overlap threshold,
//! * metric triangles, their types, and quasi-medians,
//! * 1-subdivisions, graph powers, and injective (Helly) hulls,
//! * BFS, classical, and `(s, s')`/`(s, s')*` dismantling orderings,
//! * convexity of disks, slice clique tests, and isometric subgraph search.
//!
//! The [`checks`] module packages the structural facts relating these
//! invariants as machine-checkable predicates over a graph, and [`corpus`]
//! provides the deterministic graph corpus they are exercised on.
//!
//! All heavy loops are pure functions of `(Graph, DistanceMatrix)` and are
//! parallelized with rayon; ties between equally extremal witnesses are
//! always broken toward the lexicographically smallest tuple, so results are
//! identical for any worker count.

pub mod checks;
pub mod corpus;
pub mod dismantling;
pub mod dist;
pub mod generators;
pub mod graph;
pub mod half;
pub mod hull;
pub mod invariants;
pub mod pattern;
pub mod report;
pub mod transforms;
pub mod triangles;

pub use dist::{eccentricities, interval, open_interval, slice, DistanceMatrix, Eccentricities};
pub use graph::Graph;
pub use half::HalfInteger;
