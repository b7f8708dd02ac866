//! Injective (Helly) hulls realized by extremal integer functions.
//!
//! An extremal function assigns every vertex a radius `f(v)` such that
//! `f(u) + f(v) >= d(u, v)` for all pairs (the disks `D(v, f(v))` pairwise
//! intersect) and no value can be lowered, i.e.
//! `f(u) = max_v (d(u, v) - f(v))`. The hull graph has one vertex per
//! extremal function, edges between functions at sup-distance exactly one,
//! and contains the original graph isometrically through `v -> d(v, .)`.
//!
//! Extremal functions are enumerated by backtracking over vertices in id
//! order. Feasibility gives the lower bound `f(v) >= d(u, v) - f(u)` and
//! extremality forces `f` to be 1-Lipschitz, giving the upper bound
//! `f(v) <= f(u) + d(u, v)`; both prune the search hard. A complete
//! assignment is kept after an exact extremality check.

use thiserror::Error;

use crate::dist::{eccentricities, DistanceMatrix};
use crate::graph::Graph;

/// Default ceiling on the number of hull vertices; hulls can be
/// exponential in the input size.
pub const DEFAULT_HULL_CAP: usize = 50_000;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("injective hull exceeds the cap of {cap} vertices ({reached} found before aborting)")]
pub struct HullCapError {
    pub cap: usize,
    pub reached: usize,
}

/// The injective hull of a graph, with the embedding of the original
/// vertices.
#[derive(Debug, Clone)]
pub struct HullGraph {
    pub graph: Graph,
    /// One extremal function per hull vertex, sorted lexicographically;
    /// the position is the hull vertex id.
    pub functions: Vec<Vec<u32>>,
    /// Hull id of the distance function `d(v, .)` for each original `v`.
    pub original_to_hull: Vec<usize>,
}

/// Builds the injective hull, refusing to grow past `cap` vertices.
pub fn injective_hull(
    g: &Graph,
    d: &DistanceMatrix,
    cap: usize,
) -> Result<HullGraph, HullCapError> {
    let mut functions = Vec::new();
    enumerate_extremal(g, d, cap, &mut |f| {
        functions.push(f.to_vec());
        true
    })?;
    let h = functions.len();
    let n = g.n();
    let mut edges = Vec::new();
    for i in 0..h {
        'pair: for j in i + 1..h {
            let mut any_one = false;
            for v in 0..n {
                let gap = functions[i][v].abs_diff(functions[j][v]);
                if gap > 1 {
                    continue 'pair;
                }
                any_one |= gap == 1;
            }
            if any_one {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(h, &edges).expect("the injective hull is a connected graph");
    let original_to_hull = (0..n)
        .map(|v| {
            let dv: Vec<u32> = d.row(v).to_vec();
            functions
                .binary_search(&dv)
                .expect("every distance function is extremal")
        })
        .collect();
    Ok(HullGraph {
        graph,
        functions,
        original_to_hull,
    })
}

/// Whether every family of pairwise intersecting disks has a common
/// vertex; equivalently, whether every extremal function is a distance
/// function (the hull adds no vertex).
///
/// An extremal function is a distance function exactly when it has a zero
/// entry, so the enumeration stops at the first all-positive function.
pub fn is_helly(g: &Graph, d: &DistanceMatrix) -> Result<bool, HullCapError> {
    is_helly_with_cap(g, d, DEFAULT_HULL_CAP)
}

pub fn is_helly_with_cap(g: &Graph, d: &DistanceMatrix, cap: usize) -> Result<bool, HullCapError> {
    let mut helly = true;
    enumerate_extremal(g, d, cap, &mut |f| {
        if f.iter().all(|&x| x > 0) {
            helly = false;
            false
        } else {
            true
        }
    })?;
    Ok(helly)
}

/// Calls `accept` on every extremal function in lexicographic order;
/// `accept` returning false stops the enumeration early. Errors out after
/// `cap` accepted functions.
fn enumerate_extremal(
    g: &Graph,
    d: &DistanceMatrix,
    cap: usize,
    accept: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<(), HullCapError> {
    let n = g.n();
    let ecc = eccentricities(d).ecc;
    let mut f = vec![0u32; n];
    let mut count = 0usize;
    let mut stopped = false;
    fn descend(
        d: &DistanceMatrix,
        ecc: &[u32],
        f: &mut Vec<u32>,
        v: usize,
        cap: usize,
        count: &mut usize,
        stopped: &mut bool,
        accept: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<(), HullCapError> {
        let n = d.n();
        if *stopped {
            return Ok(());
        }
        if v == n {
            if (0..n).all(|u| {
                let m = (0..n)
                    .map(|t| d.get(u, t).saturating_sub(f[t]))
                    .max()
                    .unwrap();
                m == f[u]
            }) {
                *count += 1;
                if *count > cap {
                    return Err(HullCapError {
                        cap,
                        reached: *count,
                    });
                }
                if !accept(f) {
                    *stopped = true;
                }
            }
            return Ok(());
        }
        let mut lo = 0u32;
        let mut hi = ecc[v];
        for u in 0..v {
            let duv = d.get(u, v);
            lo = lo.max(duv.saturating_sub(f[u]));
            hi = hi.min(f[u] + duv);
        }
        for val in lo..=hi {
            f[v] = val;
            descend(d, ecc, f, v + 1, cap, count, stopped, accept)?;
            if *stopped {
                return Ok(());
            }
        }
        Ok(())
    }
    if n == 0 {
        return Ok(());
    }
    descend(d, &ecc, &mut f, 0, cap, &mut count, &mut stopped, accept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::invariants::hyperbolicity;

    fn hull_of(g: &Graph) -> HullGraph {
        let d = DistanceMatrix::compute(g);
        injective_hull(g, &d, DEFAULT_HULL_CAP).unwrap()
    }

    #[test]
    fn hull_of_tree_is_the_tree() {
        for g in [
            generators::path(6).unwrap(),
            generators::star(6).unwrap(),
            generators::random_tree(7, 3).unwrap(),
        ] {
            let h = hull_of(&g);
            assert_eq!(h.graph.n(), g.n());
            // the embedding is a bijection; compare edge sets through it
            let mut mapped: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .map(|(u, v)| {
                    let (a, b) = (h.original_to_hull[u], h.original_to_hull[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            mapped.sort_unstable();
            assert_eq!(mapped, h.graph.edges());
        }
    }

    #[test]
    fn hull_of_c4_adds_one_hub() {
        let g = generators::cycle(4).unwrap();
        let h = hull_of(&g);
        assert_eq!(h.graph.n(), 5);
        let hub = (0..5)
            .find(|&i| !h.original_to_hull.contains(&i))
            .unwrap();
        assert_eq!(h.functions[hub], vec![1, 1, 1, 1]);
        assert_eq!(h.graph.degree(hub), 4);
        for (u, v) in g.edges() {
            assert!(h
                .graph
                .has_edge(h.original_to_hull[u], h.original_to_hull[v]));
        }
    }

    #[test]
    fn hull_of_c5_is_the_5_wheel() {
        let g = generators::cycle(5).unwrap();
        let h = hull_of(&g);
        assert_eq!(h.graph.n(), 6);
        let hub = (0..6)
            .find(|&i| !h.original_to_hull.contains(&i))
            .unwrap();
        assert_eq!(h.functions[hub], vec![1; 5]);
        assert_eq!(h.graph.degree(hub), 5);
        assert!(h
            .graph
            .vertices()
            .filter(|&v| v != hub)
            .all(|v| h.graph.degree(v) == 3));
    }

    #[test]
    fn embedding_is_isometric() {
        for seed in 0..5 {
            let g = generators::random_connected(7, 10, seed).unwrap();
            let d = DistanceMatrix::compute(&g);
            let h = injective_hull(&g, &d, DEFAULT_HULL_CAP).unwrap();
            let dh = DistanceMatrix::compute(&h.graph);
            for u in g.vertices() {
                for v in g.vertices() {
                    assert_eq!(
                        dh.get(h.original_to_hull[u], h.original_to_hull[v]),
                        d.get(u, v)
                    );
                }
            }
        }
    }

    #[test]
    fn helly_classification() {
        let k4 = generators::complete(4).unwrap();
        let d = DistanceMatrix::compute(&k4);
        assert_eq!(is_helly(&k4, &d), Ok(true));

        let c4 = generators::cycle(4).unwrap();
        let d4 = DistanceMatrix::compute(&c4);
        assert_eq!(is_helly(&c4, &d4), Ok(false));
    }

    #[test]
    fn hull_is_helly() {
        for g in [
            generators::cycle(4).unwrap(),
            generators::cycle(5).unwrap(),
            generators::cycle(6).unwrap(),
            generators::random_connected(6, 9, 2).unwrap(),
        ] {
            let h = hull_of(&g);
            let dh = DistanceMatrix::compute(&h.graph);
            assert_eq!(is_helly(&h.graph, &dh), Ok(true));
        }
    }

    #[test]
    fn hull_preserves_hyperbolicity() {
        for seed in 0..4 {
            let g = generators::random_connected(6, 8, seed).unwrap();
            let d = DistanceMatrix::compute(&g);
            let h = injective_hull(&g, &d, DEFAULT_HULL_CAP).unwrap();
            let dh = DistanceMatrix::compute(&h.graph);
            assert_eq!(hyperbolicity(&g, &d).0, hyperbolicity(&h.graph, &dh).0);
        }
    }

    #[test]
    fn cap_error_reports_count() {
        let g = generators::cycle(6).unwrap();
        let d = DistanceMatrix::compute(&g);
        let err = injective_hull(&g, &d, 3).unwrap_err();
        assert_eq!(err.cap, 3);
        assert_eq!(err.reached, 4);
    }
}
