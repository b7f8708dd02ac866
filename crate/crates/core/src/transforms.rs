//! Graph transforms: 1-subdivision and graph powers.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph power requires lambda >= 1, got {lambda}")]
pub struct PowerError {
    pub lambda: u32,
}

/// A 1-subdivision together with its vertex maps. Original vertices keep
/// their ids `0..original_n`; the vertex splitting the k-th canonical edge
/// gets id `original_n + k`.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    pub original_n: usize,
    /// Endpoints of the subdivided edge behind each new vertex, indexed by
    /// `id - original_n`.
    pub edge_endpoints: Vec<(usize, usize)>,
}

impl Subdivision {
    pub fn is_original(&self, id: usize) -> bool {
        id < self.original_n
    }
}

/// Replaces every edge `uv` by a path `u - e - v` of length two through a
/// fresh edge-vertex `e`. The result has `n + m` vertices and `2m` edges,
/// and doubles all original distances.
pub fn subdivide(g: &Graph) -> Subdivision {
    let n = g.n();
    let canonical = g.edges();
    let mut edges = Vec::with_capacity(2 * canonical.len());
    for (k, &(u, v)) in canonical.iter().enumerate() {
        let mid = n + k;
        edges.push((u, mid));
        edges.push((mid, v));
    }
    let graph = Graph::new(n + canonical.len(), &edges)
        .expect("subdivision of a connected graph is connected");
    Subdivision {
        graph,
        original_n: n,
        edge_endpoints: canonical,
    }
}

/// The power `G^lambda`: same vertices, an edge wherever
/// `0 < d(u, v) <= lambda`. Computed by one depth-capped BFS per vertex.
pub fn power(g: &Graph, lambda: u32) -> Result<Graph, PowerError> {
    if lambda < 1 {
        return Err(PowerError { lambda });
    }
    let n = g.n();
    let mut edges = Vec::new();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        dist.fill(u32::MAX);
        dist[u] = 0;
        queue.clear();
        queue.push_back(u);
        while let Some(a) = queue.pop_front() {
            if dist[a] == lambda {
                continue;
            }
            for &b in g.neighbors(a) {
                if dist[b] == u32::MAX {
                    dist[b] = dist[a] + 1;
                    queue.push_back(b);
                    if b > u {
                        edges.push((u, b));
                    }
                }
            }
        }
    }
    Ok(Graph::new(n, &edges).expect("a power of a connected graph is connected"))
}
