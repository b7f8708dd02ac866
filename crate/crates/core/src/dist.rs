//! Dense all-pairs BFS distances and the interval/slice machinery built on
//! them.
//!
//! The matrix is computed once per graph (one BFS per source, sources in
//! parallel) and then shared immutably by every invariant. Distances are hop
//! counts; `d(u, v) <= n - 1` always holds because graphs are connected.

use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("distance matrix for n = {n} needs {needed} bytes, over the cap of {cap}")]
pub struct MatrixCapError {
    pub n: usize,
    pub needed: usize,
    pub cap: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("slice index {k} out of range 0..={max} for this vertex pair")]
pub struct SliceError {
    pub k: u32,
    pub max: u32,
}

/// Exact all-pairs shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// Default memory cap: 2 GiB, enough for roughly n = 23,000.
    pub const DEFAULT_MEMORY_CAP: usize = 2 << 30;

    /// Computes the matrix under [`Self::DEFAULT_MEMORY_CAP`].
    ///
    /// Panics if the graph is too large for the default cap; use
    /// [`Self::compute_with_cap`] to handle that case gracefully.
    pub fn compute(g: &Graph) -> DistanceMatrix {
        Self::compute_with_cap(g, Self::DEFAULT_MEMORY_CAP).expect("graph over default memory cap")
    }

    /// Computes the matrix, refusing allocations above `cap_bytes`.
    pub fn compute_with_cap(g: &Graph, cap_bytes: usize) -> Result<DistanceMatrix, MatrixCapError> {
        let n = g.n();
        let needed = n
            .checked_mul(n)
            .and_then(|c| c.checked_mul(std::mem::size_of::<u32>()))
            .unwrap_or(usize::MAX);
        if needed > cap_bytes {
            return Err(MatrixCapError {
                n,
                needed,
                cap: cap_bytes,
            });
        }
        let mut d = vec![0u32; n * n];
        d.par_chunks_mut(n)
            .enumerate()
            .for_each(|(source, row)| bfs_into(g, source, row));
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Row of distances from `u`, indexed by target vertex.
    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

fn bfs_into(g: &Graph, source: usize, row: &mut [u32]) {
    const UNSEEN: u32 = u32::MAX;
    row.fill(UNSEEN);
    row[source] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let du = row[u];
        for &v in g.neighbors(u) {
            if row[v] == UNSEEN {
                row[v] = du + 1;
                queue.push_back(v);
            }
        }
    }
    debug_assert!(row.iter().all(|&x| x != UNSEEN), "graph must be connected");
}

/// The interval `I(u, v)`: all vertices on shortest `(u, v)`-paths, in
/// ascending id order.
pub fn interval(d: &DistanceMatrix, u: usize, v: usize) -> Vec<usize> {
    let duv = d.get(u, v);
    let (du, dv) = (d.row(u), d.row(v));
    (0..d.n()).filter(|&w| du[w] + dv[w] == duv).collect()
}

/// The open interval `I(u, v) \ {u, v}`.
pub fn open_interval(d: &DistanceMatrix, u: usize, v: usize) -> Vec<usize> {
    interval(d, u, v)
        .into_iter()
        .filter(|&w| w != u && w != v)
        .collect()
}

/// The slice `S_k(u, v)`: vertices of `I(u, v)` at distance exactly `k`
/// from `u`. Fails if `k > d(u, v)`.
pub fn slice(d: &DistanceMatrix, u: usize, v: usize, k: u32) -> Result<Vec<usize>, SliceError> {
    let duv = d.get(u, v);
    if k > duv {
        return Err(SliceError { k, max: duv });
    }
    let (du, dv) = (d.row(u), d.row(v));
    Ok((0..d.n())
        .filter(|&w| du[w] == k && du[w] + dv[w] == duv)
        .collect())
}

/// Per-vertex eccentricities with the graph diameter and radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Eccentricities {
    pub ecc: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
}

pub fn eccentricities(d: &DistanceMatrix) -> Eccentricities {
    let ecc: Vec<u32> = (0..d.n())
        .map(|u| d.row(u).iter().copied().max().unwrap())
        .collect();
    let diameter = ecc.iter().copied().max().unwrap();
    let radius = ecc.iter().copied().min().unwrap();
    Eccentricities {
        ecc,
        diameter,
        radius,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn path3() -> Graph {
        parse_graph("3 2\n0 1\n1 2\n").unwrap()
    }

    fn c4() -> Graph {
        parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap()
    }

    fn c5() -> Graph {
        parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap()
    }

    fn c6() -> Graph {
        parse_graph("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap()
    }

    #[test]
    fn path_distances() {
        let d = DistanceMatrix::compute(&path3());
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(2, 0), 2);
        assert_eq!(d.get(1, 1), 0);
    }

    #[test]
    fn cycle_metric() {
        let d = DistanceMatrix::compute(&c5());
        assert_eq!(d.get(0, 2), 2);
        assert_eq!(d.get(0, 3), 2);
    }

    #[test]
    fn memory_cap() {
        let err = DistanceMatrix::compute_with_cap(&c5(), 10).unwrap_err();
        assert_eq!(err.n, 5);
        assert_eq!(err.needed, 100);
    }

    #[test]
    fn interval_of_tree_is_unique_path() {
        let d = DistanceMatrix::compute(&path3());
        assert_eq!(interval(&d, 0, 2), vec![0, 1, 2]);
        assert_eq!(interval(&d, 0, 0), vec![0]);
        assert_eq!(open_interval(&d, 0, 2), vec![1]);
    }

    #[test]
    fn interval_of_c4_opposite_pair_is_everything() {
        let d = DistanceMatrix::compute(&c4());
        assert_eq!(interval(&d, 0, 2), vec![0, 1, 2, 3]);
    }

    #[test]
    fn slices() {
        let d4 = DistanceMatrix::compute(&c4());
        assert_eq!(slice(&d4, 0, 2, 0).unwrap(), vec![0]);
        assert_eq!(slice(&d4, 0, 2, 1).unwrap(), vec![1, 3]);
        assert_eq!(slice(&d4, 0, 2, 2).unwrap(), vec![2]);
        assert!(slice(&d4, 0, 2, 3).is_err());

        let d6 = DistanceMatrix::compute(&c6());
        assert_eq!(slice(&d6, 0, 3, 1).unwrap(), vec![1, 5]);
    }

    #[test]
    fn eccentricities_of_path_and_cycle() {
        let e = eccentricities(&DistanceMatrix::compute(&path3()));
        assert_eq!(e.ecc, vec![2, 1, 2]);
        assert_eq!((e.diameter, e.radius), (2, 1));

        let e5 = eccentricities(&DistanceMatrix::compute(&c5()));
        assert!(e5.ecc.iter().all(|&x| x == 2));
        assert_eq!((e5.diameter, e5.radius), (2, 2));
    }
}
