//! BFS orderings and dismantling-order verification.
//!
//! A graph is dismantlable when its vertices can be eliminated one by one,
//! each dominated (closed neighborhood inside the remaining suffix covered
//! by another remaining vertex) at the moment of its removal. The `(s, s')`
//! and `(s, s')*` variants replace closed neighborhoods by disks of radii
//! `s` and `s'`; the starred variant measures both disks in the intact
//! graph, the plain variant measures the moving disk in the graph with the
//! dominating vertex deleted.

use std::collections::VecDeque;

use thiserror::Error;

use crate::dist::DistanceMatrix;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrderingError {
    #[error("ordering is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    #[error("ordering must end at its base vertex {base}")]
    BaseMismatch { base: usize },
}

/// A permutation `v_1..v_n` of the vertices ending at its base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    pub order: Vec<usize>,
    pub base: usize,
}

impl VertexOrdering {
    pub fn new(order: Vec<usize>, base: usize) -> Result<Self, OrderingError> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || seen[v] {
                return Err(OrderingError::NotAPermutation { n });
            }
            seen[v] = true;
        }
        if order.last() != Some(&base) {
            return Err(OrderingError::BaseMismatch { base });
        }
        Ok(VertexOrdering { order, base })
    }

    /// Wraps a permutation, taking its last element as the base.
    pub fn from_order(order: Vec<usize>) -> Result<Self, OrderingError> {
        let base = *order.last().ok_or(OrderingError::NotAPermutation { n: 0 })?;
        Self::new(order, base)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// The BFS ordering from `u`: the reverse of a FIFO BFS visit order with
/// neighbors expanded in descending id, so `v_n = u`, distances from `u`
/// are non-increasing along the ordering, and equidistant vertices appear
/// in ascending id order.
pub fn bfs_ordering(g: &Graph, u: usize) -> VertexOrdering {
    let mut seen = vec![false; g.n()];
    let mut visit = Vec::with_capacity(g.n());
    let mut queue = VecDeque::new();
    seen[u] = true;
    queue.push_back(u);
    while let Some(a) = queue.pop_front() {
        visit.push(a);
        for &b in g.neighbors(a).iter().rev() {
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    visit.reverse();
    VertexOrdering { order: visit, base: u }
}

/// Whether `o` qualifies as a BFS ordering: it ends at its base and the
/// distance to the base is non-increasing along it. This monotone-distance
/// property is the only one the dismantling arguments rely on.
pub fn is_bfs_ordering(_g: &Graph, d: &DistanceMatrix, o: &VertexOrdering) -> bool {
    if o.order.last() != Some(&o.base) {
        return false;
    }
    let db = d.row(o.base);
    o.order.windows(2).all(|w| db[w[0]] >= db[w[1]])
}

/// Classical dismantling check: for every position `k` there must be a
/// later vertex whose closed neighborhood covers `N[v_k]` within the
/// suffix. Returns the first failing position (1-based) on failure.
pub fn is_dismantling_ordering(g: &Graph, o: &VertexOrdering) -> (bool, Option<usize>) {
    let n = o.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in o.order.iter().enumerate() {
        pos[v] = i;
    }
    for k in 0..n.saturating_sub(1) {
        let vk = o.order[k];
        let mut needed: Vec<usize> = g
            .neighbors(vk)
            .iter()
            .copied()
            .filter(|&x| pos[x] >= k)
            .collect();
        needed.push(vk);
        let dominated = (k + 1..n).any(|l| {
            let vl = o.order[l];
            needed.iter().all(|&x| x == vl || g.has_edge(x, vl))
        });
        if !dominated {
            return (false, Some(k + 1));
        }
    }
    (true, None)
}

/// Result of the greedy elimination of dominated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DismantleOutcome {
    /// Reduced to a single vertex; the full elimination ordering is a
    /// dismantling ordering.
    Dismantled { elimination: Vec<usize> },
    /// No dominated vertex remains among more than one survivor.
    Stuck {
        eliminated: Vec<usize>,
        kernel: Vec<usize>,
    },
}

impl DismantleOutcome {
    pub fn is_dismantlable(&self) -> bool {
        matches!(self, DismantleOutcome::Dismantled { .. })
    }
}

/// Repeatedly removes the smallest-id vertex dominated in the remaining
/// induced subgraph. Removing any dominated vertex preserves
/// dismantlability, so the greedy run is complete: it reduces the graph to
/// one vertex exactly when some dismantling ordering exists.
pub fn greedy_dismantle(g: &Graph) -> DismantleOutcome {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut elimination = Vec::new();
    while remaining > 1 {
        let victim = (0..n).filter(|&v| alive[v]).find(|&v| {
            let needed: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&x| alive[x])
                .collect();
            // u dominates v: u ~ v (covers v itself) and u covers every
            // remaining neighbor of v
            (0..n).filter(|&u| alive[u] && u != v).any(|u| {
                g.has_edge(v, u) && needed.iter().all(|&x| x == u || g.has_edge(x, u))
            })
        });
        match victim {
            Some(v) => {
                alive[v] = false;
                remaining -= 1;
                elimination.push(v);
            }
            None => {
                return DismantleOutcome::Stuck {
                    eliminated: elimination,
                    kernel: (0..n).filter(|&v| alive[v]).collect(),
                }
            }
        }
    }
    if let Some(last) = (0..n).find(|&v| alive[v]) {
        elimination.push(last);
    }
    DismantleOutcome::Dismantled { elimination }
}

/// `(s, s')` and `(s, s')*` dismantling check over a given ordering. For
/// every position `k`, some later `v_l` must satisfy the disk containment
/// `D(v_k, s) ∩ suffix ⊆ D(v_l, s')`; the starred variant (`star = true`)
/// measures `D(v_k, s)` in the intact graph, the plain variant in the graph
/// with `v_l` deleted. Returns the first failing position (1-based).
pub fn is_ss_dismantling_ordering(
    g: &Graph,
    d: &DistanceMatrix,
    o: &VertexOrdering,
    s: u32,
    s_prime: u32,
    star: bool,
) -> (bool, Option<usize>) {
    assert!(s >= 1 && s_prime >= 1, "radii must be at least 1");
    let n = o.len();
    let mut pos = vec![0usize; n];
    for (i, &v) in o.order.iter().enumerate() {
        pos[v] = i;
    }
    let mut deleted_disk = vec![u32::MAX; n];
    for k in 0..n.saturating_sub(1) {
        let vk = o.order[k];
        let dk = d.row(vk);
        let mut found = false;
        'candidates: for l in k + 1..n {
            let vl = o.order[l];
            let dl = d.row(vl);
            if star {
                for x in 0..n {
                    if pos[x] >= k && dk[x] <= s && dl[x] > s_prime {
                        continue 'candidates;
                    }
                }
            } else {
                bfs_avoiding(g, vk, vl, s, &mut deleted_disk);
                for x in 0..n {
                    if pos[x] >= k && deleted_disk[x] <= s && dl[x] > s_prime {
                        continue 'candidates;
                    }
                }
            }
            found = true;
            break;
        }
        if !found {
            return (false, Some(k + 1));
        }
    }
    (true, None)
}

/// Distances from `source` in the graph with `removed` deleted, capped at
/// `depth`; unreachable or too-far vertices stay `u32::MAX`.
fn bfs_avoiding(g: &Graph, source: usize, removed: usize, depth: u32, dist: &mut [u32]) {
    dist.fill(u32::MAX);
    if source == removed {
        return;
    }
    dist[source] = 0;
    let mut queue = VecDeque::new();
    queue.push_back(source);
    while let Some(a) = queue.pop_front() {
        if dist[a] == depth {
            continue;
        }
        for &b in g.neighbors(a) {
            if b != removed && dist[b] == u32::MAX {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn with_d(g: Graph) -> (Graph, DistanceMatrix) {
        let d = DistanceMatrix::compute(&g);
        (g, d)
    }

    #[test]
    fn bfs_ordering_on_path_and_star() {
        let p = generators::path(3).unwrap();
        assert_eq!(bfs_ordering(&p, 0).order, vec![2, 1, 0]);

        let s = generators::star(5).unwrap();
        assert_eq!(bfs_ordering(&s, 0).order, vec![1, 2, 3, 4, 0]);
    }

    #[test]
    fn bfs_orderings_validate() {
        for seed in 0..5 {
            let (g, d) = with_d(generators::random_connected(9, 13, seed).unwrap());
            for u in g.vertices() {
                assert!(is_bfs_ordering(&g, &d, &bfs_ordering(&g, u)));
            }
        }
        let (p, d) = with_d(generators::path(3).unwrap());
        let bad = VertexOrdering::new(vec![1, 2, 0], 0).unwrap();
        assert!(!is_bfs_ordering(&p, &d, &bad));
        let ok = VertexOrdering::new(vec![2, 1, 0], 0).unwrap();
        assert!(is_bfs_ordering(&p, &d, &ok));
    }

    #[test]
    fn complete_graph_any_ordering_is_bfs() {
        let (g, d) = with_d(generators::complete(5).unwrap());
        let o = VertexOrdering::new(vec![3, 1, 4, 0, 2], 2).unwrap();
        assert!(is_bfs_ordering(&g, &d, &o));
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 0, 1], 1).is_err());
        assert!(VertexOrdering::new(vec![0, 1, 5], 5).is_err());
        assert!(VertexOrdering::new(vec![0, 1, 2], 1).is_err());
        assert!(VertexOrdering::from_order(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn path_orderings_dismantle() {
        let g = generators::path(4).unwrap();
        let o = VertexOrdering::from_order(vec![3, 2, 1, 0]).unwrap();
        assert_eq!(is_dismantling_ordering(&g, &o), (true, None));
    }

    #[test]
    fn c4_never_dismantles() {
        let g = generators::cycle(4).unwrap();
        // exhaustive: no ordering works, and each fails immediately
        let mut perm = vec![0, 1, 2, 3];
        let fails = permutations(&mut perm)
            .into_iter()
            .map(|p| is_dismantling_ordering(&g, &VertexOrdering::from_order(p).unwrap()))
            .collect::<Vec<_>>();
        assert!(fails.iter().all(|r| *r == (false, Some(1))));
    }

    fn permutations(items: &mut Vec<usize>) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        fn rec(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k == items.len() {
                out.push(items.clone());
                return;
            }
            for i in k..items.len() {
                items.swap(k, i);
                rec(items, k + 1, out);
                items.swap(k, i);
            }
        }
        rec(items, 0, &mut out);
        out
    }

    #[test]
    fn greedy_on_trees_cycles_and_cliques() {
        assert!(greedy_dismantle(&generators::random_tree(9, 2).unwrap()).is_dismantlable());
        assert!(greedy_dismantle(&generators::complete(5).unwrap()).is_dismantlable());

        match greedy_dismantle(&generators::cycle(4).unwrap()) {
            DismantleOutcome::Stuck { eliminated, kernel } => {
                assert!(eliminated.is_empty());
                assert_eq!(kernel, vec![0, 1, 2, 3]);
            }
            other => panic!("C_4 must be stuck, got {other:?}"),
        }
        assert!(!greedy_dismantle(&generators::cycle(5).unwrap()).is_dismantlable());
    }

    #[test]
    fn ss_star_with_radius_one_is_classical() {
        for seed in 0..5 {
            let (g, d) = with_d(generators::random_connected(8, 12, seed).unwrap());
            for u in g.vertices() {
                let o = bfs_ordering(&g, u);
                assert_eq!(
                    is_ss_dismantling_ordering(&g, &d, &o, 1, 1, true),
                    is_dismantling_ordering(&g, &o)
                );
            }
        }
    }

    #[test]
    fn c4_is_2_2_star_dismantlable() {
        let (g, d) = with_d(generators::cycle(4).unwrap());
        let o = bfs_ordering(&g, 0);
        assert_eq!(is_ss_dismantling_ordering(&g, &d, &o, 2, 2, true), (true, None));
    }

    #[test]
    fn star_pass_implies_plain_pass() {
        // deleting the dominating vertex only shrinks the moving disk
        for seed in 0..4 {
            let (g, d) = with_d(generators::random_connected(8, 14, seed).unwrap());
            for u in [0, 3] {
                let o = bfs_ordering(&g, u);
                for (s, sp) in [(1, 2), (2, 2), (2, 3), (3, 4)] {
                    if is_ss_dismantling_ordering(&g, &d, &o, s, sp, true).0 {
                        assert!(is_ss_dismantling_ordering(&g, &d, &o, s, sp, false).0);
                    }
                }
            }
        }
    }
}
