//! Metric triangles: triples whose three open intervals are pairwise
//! disjoint, their types, and quasi-medians of arbitrary triples.

use rayon::prelude::*;
use thiserror::Error;

use crate::dist::{open_interval, DistanceMatrix};
use crate::graph::Graph;

/// Guard against the cubic triple enumeration on large graphs.
pub const DEFAULT_TRIANGLE_CAP: usize = 512;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("metric triangle enumeration refused: n = {n} exceeds cap {cap}")]
pub struct TriangleCapError {
    pub n: usize,
    pub cap: usize,
}

/// A metric triangle on distinct vertices `u < v < w`. `sides` is the
/// type: the three side lengths sorted ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricTriangle {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub sides: [u32; 3],
    pub max_side: u32,
}

/// All metric triangles of a graph. Degenerate triples (repeated
/// vertices) are counted but not listed: the multiset `{u, u, u}` is
/// always one, and `{u, u, v}` is one exactly when `d(u, v) <= 1`, so the
/// count is `n + 2m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricTriangles {
    pub triangles: Vec<MetricTriangle>,
    pub degenerate_count: u64,
}

/// Enumerates all metric triangles on distinct vertices, sorted
/// lexicographically by `(u, v, w)`, under [`DEFAULT_TRIANGLE_CAP`].
pub fn enumerate_metric_triangles(
    g: &Graph,
    d: &DistanceMatrix,
) -> Result<MetricTriangles, TriangleCapError> {
    enumerate_metric_triangles_with_cap(g, d, DEFAULT_TRIANGLE_CAP)
}

pub fn enumerate_metric_triangles_with_cap(
    g: &Graph,
    d: &DistanceMatrix,
    cap: usize,
) -> Result<MetricTriangles, TriangleCapError> {
    let n = g.n();
    if n > cap {
        return Err(TriangleCapError { n, cap });
    }
    let words = n.div_ceil(64);
    // open intervals of all ordered pairs as bitsets, row-major
    let mut open = vec![0u64; n * n * words];
    open.par_chunks_mut(n * words)
        .enumerate()
        .for_each(|(u, chunk)| {
            let du = d.row(u);
            for v in 0..n {
                let duv = du[v];
                let dv = d.row(v);
                let bits = &mut chunk[v * words..(v + 1) * words];
                for w in 0..n {
                    if w != u && w != v && du[w] + dv[w] == duv {
                        bits[w / 64] |= 1 << (w % 64);
                    }
                }
            }
        });
    let bitset = |u: usize, v: usize| &open[(u * n + v) * words..(u * n + v + 1) * words];
    let disjoint =
        |a: &[u64], b: &[u64]| a.iter().zip(b.iter()).all(|(&x, &y)| x & y == 0);

    let per_u: Vec<Vec<MetricTriangle>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut found = Vec::new();
            for v in u + 1..n {
                let uv = bitset(u, v);
                for w in v + 1..n {
                    let vw = bitset(v, w);
                    let uw = bitset(u, w);
                    if disjoint(uv, vw) && disjoint(vw, uw) && disjoint(uw, uv) {
                        let mut sides = [d.get(u, v), d.get(v, w), d.get(w, u)];
                        sides.sort_unstable();
                        found.push(MetricTriangle {
                            u,
                            v,
                            w,
                            sides,
                            max_side: sides[2],
                        });
                    }
                }
            }
            found
        })
        .collect();
    Ok(MetricTriangles {
        triangles: per_u.into_iter().flatten().collect(),
        degenerate_count: (n + 2 * g.m()) as u64,
    })
}

/// Maximum side length over all metric triangles on distinct vertices;
/// zero when there are none.
pub fn max_metric_triangle_side(g: &Graph, d: &DistanceMatrix) -> Result<u32, TriangleCapError> {
    let all = enumerate_metric_triangles(g, d)?;
    Ok(all.triangles.iter().map(|t| t.max_side).max().unwrap_or(0))
}

/// A quasi-median of the triple `(u, v, w)`: a metric triangle
/// `(u', v', w')` splitting each pairwise distance additively, e.g.
/// `d(u,v) = d(u,u') + d(u',v') + d(v',v)`.
///
/// Computed by hill descent from `(u, v, w)` itself: cycling through the
/// corners in order, a corner moves to its smallest-id neighbor that lies
/// in both of its intervals toward the other two corners. Every move
/// shrinks the corner's distance sum to the other two by two, so the
/// descent terminates; when no corner can move the open intervals are
/// pairwise disjoint.
pub fn quasi_median(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
    w: usize,
) -> (usize, usize, usize) {
    let mut corner = [u, v, w];
    loop {
        let mut moved = false;
        for c in 0..3 {
            let here = corner[c];
            let (a, b) = (corner[(c + 1) % 3], corner[(c + 2) % 3]);
            let (da, db) = (d.row(a), d.row(b));
            let (ha, hb) = (da[here], db[here]);
            let step = g.neighbors(here).iter().copied().find(|&t| {
                da[t] + 1 == ha && db[t] + 1 == hb
            });
            if let Some(t) = step {
                corner[c] = t;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let [cu, cv, cw] = corner;
    // the stop condition implies a metric triangle satisfying the three
    // interpolation equalities; re-check both to make the output
    // self-verifying
    let opens = [
        open_interval(d, cu, cv),
        open_interval(d, cv, cw),
        open_interval(d, cw, cu),
    ];
    for i in 0..3 {
        for j in i + 1..3 {
            assert!(
                opens[i].iter().all(|p| !opens[j].contains(p)),
                "quasi-median open intervals must be pairwise disjoint"
            );
        }
    }
    for (s, t, cs, ct) in [(u, v, cu, cv), (v, w, cv, cw), (w, u, cw, cu)] {
        assert_eq!(
            d.get(s, t),
            d.get(s, cs) + d.get(cs, ct) + d.get(ct, t),
            "quasi-median must interpolate every pairwise distance"
        );
    }
    (cu, cv, cw)
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
    fn trees_have_no_distinct_metric_triangle() {
        for g in [
            generators::path(8).unwrap(),
            generators::star(8).unwrap(),
            generators::random_tree(8, 2).unwrap(),
        ] {
            let d = DistanceMatrix::compute(&g);
            let all = enumerate_metric_triangles(&g, &d).unwrap();
            assert!(all.triangles.is_empty());
            assert_eq!(all.degenerate_count, (g.n() + 2 * g.m()) as u64);
            assert_eq!(max_metric_triangle_side(&g, &d).unwrap(), 0);
        }
    }

    #[test]
    fn k3_has_one_triangle() {
        let (g, d) = with_d(generators::complete(3).unwrap());
        let all = enumerate_metric_triangles(&g, &d).unwrap();
        assert_eq!(all.triangles.len(), 1);
        let t = all.triangles[0];
        assert_eq!((t.u, t.v, t.w, t.sides), (0, 1, 2, [1, 1, 1]));
        assert_eq!(max_metric_triangle_side(&g, &d).unwrap(), 1);
    }

    #[test]
    fn g_p_contains_the_long_triangle() {
        for p in 2..=5usize {
            let (g, d) = with_d(generators::g_p(p).unwrap());
            let (x0, ylast, zlast) = (p, 2 * p + p - 1, 3 * p + p - 1);
            let all = enumerate_metric_triangles(&g, &d).unwrap();
            let mut key = [x0, ylast, zlast];
            key.sort_unstable();
            let t = all
                .triangles
                .iter()
                .find(|t| [t.u, t.v, t.w] == key)
                .expect("long metric triangle present");
            assert_eq!(t.sides, [2, p as u32, p as u32]);
            assert_eq!(max_metric_triangle_side(&g, &d).unwrap(), p as u32);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let (g, d) = with_d(generators::cycle(12).unwrap());
        let err = enumerate_metric_triangles_with_cap(&g, &d, 10).unwrap_err();
        assert_eq!(err, TriangleCapError { n: 12, cap: 10 });
    }

    #[test]
    fn quasi_median_in_tree_is_the_median() {
        // star with center 0: the median of three leaves is the center
        let (g, d) = with_d(generators::star(6).unwrap());
        assert_eq!(quasi_median(&g, &d, 1, 3, 5), (0, 0, 0));

        let (p, dp) = with_d(generators::path(7).unwrap());
        // median of 0, 4, 6 on a path is 4
        assert_eq!(quasi_median(&p, &dp, 0, 4, 6), (4, 4, 4));
    }

    #[test]
    fn quasi_median_fixes_metric_triangles() {
        let (g, d) = with_d(generators::complete(3).unwrap());
        assert_eq!(quasi_median(&g, &d, 0, 1, 2), (0, 1, 2));

        for p in 2..=4usize {
            let (gp, dp) = with_d(generators::g_p(p).unwrap());
            let (x0, ylast, zlast) = (p, 3 * p - 1, 4 * p - 1);
            assert_eq!(quasi_median(&gp, &dp, x0, ylast, zlast), (x0, ylast, zlast));
        }
    }

    #[test]
    fn quasi_median_postconditions_on_random_triples() {
        for seed in 0..6 {
            let (g, d) = with_d(generators::random_connected(9, 14, seed).unwrap());
            for (u, v, w) in [(0, 4, 8), (1, 2, 3), (7, 5, 0), (2, 2, 6)] {
                // quasi_median asserts disjointness and interpolation itself
                let _ = quasi_median(&g, &d, u, v, w);
            }
        }
    }
}
