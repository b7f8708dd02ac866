//! Exact metric invariants with deterministic extremal witnesses.
//!
//! Every operation here is a pure function of `(Graph, DistanceMatrix)`.
//! Outer loops are partitioned across rayon workers; partial maxima are
//! merged by "larger value wins, ties broken by lexicographically smaller
//! witness tuple", which is associative and commutative, so the result is
//! identical for any worker count or schedule.

use rayon::prelude::*;

use crate::dist::DistanceMatrix;
use crate::graph::Graph;
use crate::half::HalfInteger;

/// Merge of `(value, witness)` candidates: maximal value first,
/// lexicographically smallest witness on ties.
fn better<V: Ord + Copy, W: Ord>(a: Option<(V, W)>, b: Option<(V, W)>) -> Option<(V, W)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some((va, wa)), Some((vb, wb))) => {
            if (vb > va) || (vb == va && wb < wa) {
                Some((vb, wb))
            } else {
                Some((va, wa))
            }
        }
    }
}

/// A quadruple realizing the alpha index: `v` lies between `u` and `w`,
/// `w` lies between `v` and `x`, `vw` is an edge, and the concatenation
/// falls short of a shortest `(u, x)`-path by `defect`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub defect: u32,
}

/// Smallest `i` such that for every edge `vw` with `v` between `u` and `w`
/// and `w` between `v` and `x`: `d(u,x) >= d(u,v) + d(v,x) - i`.
///
/// Enumerates edges `vw` and then the admissible `u` (with
/// `d(u,w) = d(u,v) + 1`) and `x` (with `d(v,x) = d(w,x) + 1`), which is
/// `O(m n^2)` instead of the naive `O(n^4)`. The witness is the
/// lexicographically smallest `(u, v, w, x)` attaining the maximum defect,
/// or `None` when the graph has no edge.
pub fn alpha_index(g: &Graph, d: &DistanceMatrix) -> (u32, Option<AlphaWitness>) {
    let n = g.n();
    let mut arcs = Vec::with_capacity(2 * g.m());
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            arcs.push((v, w));
        }
    }
    let best = arcs
        .par_iter()
        .map(|&(v, w)| {
            let (dv, dw) = (d.row(v), d.row(w));
            let us: Vec<usize> = (0..n).filter(|&u| dw[u] == dv[u] + 1).collect();
            let xs: Vec<usize> = (0..n).filter(|&x| dv[x] == dw[x] + 1).collect();
            let mut local: Option<(u32, [usize; 4])> = None;
            for &u in &us {
                let du = d.row(u);
                for &x in &xs {
                    let defect = dv[u] + 1 + dw[x] - du[x];
                    local = better(local, Some((defect, [u, v, w, x])));
                }
            }
            local
        })
        .reduce(|| None, better);
    match best {
        None => (0, None),
        Some((defect, [u, v, w, x])) => (defect, Some(AlphaWitness { u, v, w, x, defect })),
    }
}

/// A quadruple realizing the hyperbolicity, with its three pairing sums
/// sorted descending and `delta = (sums[0] - sums[1]) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourPointWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub sums: [u32; 3],
    pub delta: HalfInteger,
}

/// Gromov hyperbolicity by the four-point condition: half the maximum gap
/// between the largest and second largest of the three pairing sums, over
/// all vertex quadruples.
///
/// Degenerate quadruples (repeated vertices) contribute zero, so when the
/// maximum is zero the witness is the all-zero quadruple; otherwise it is
/// the lexicographically smallest sorted quadruple attaining the maximum.
pub fn hyperbolicity(g: &Graph, d: &DistanceMatrix) -> (HalfInteger, FourPointWitness) {
    let n = g.n();
    let best = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut local: Option<(u32, [usize; 4])> = None;
            for v in u + 1..n {
                let dv = d.row(v);
                let duv = du[v];
                for w in v + 1..n {
                    let dw = d.row(w);
                    let (duw, dvw) = (du[w], dv[w]);
                    for x in w + 1..n {
                        let s1 = duv + dw[x];
                        let s2 = duw + dv[x];
                        let s3 = du[x] + dvw;
                        let top = s1.max(s2).max(s3);
                        let bottom = s1.min(s2).min(s3);
                        let mid = s1 + s2 + s3 - top - bottom;
                        let gap = top - mid;
                        local = better(local, Some((gap, [u, v, w, x])));
                    }
                }
            }
            local
        })
        .reduce(|| None, better);
    let (gap, quad) = match best {
        Some((gap, quad)) if gap > 0 => (gap, quad),
        _ => (0, [0, 0, 0, 0]),
    };
    let [u, v, w, x] = quad;
    let mut sums = [
        d.get(u, v) + d.get(w, x),
        d.get(u, w) + d.get(v, x),
        d.get(u, x) + d.get(v, w),
    ];
    sums.sort_unstable_by(|a, b| b.cmp(a));
    debug_assert_eq!(sums[0] - sums[1], gap);
    let delta = HalfInteger::from_doubled(gap as i64);
    (
        delta,
        FourPointWitness {
            u,
            v,
            w,
            x,
            sums,
            delta,
        },
    )
}

/// A slice pair realizing the interval thinness: `x, y` both lie in
/// `S_k(u, v)` at distance `dist`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThinnessWitness {
    pub u: usize,
    pub v: usize,
    pub k: u32,
    pub x: usize,
    pub y: usize,
    pub dist: u32,
}

/// Interval thinness: the maximum diameter of a slice `S_k(u, v)` over all
/// ordered pairs `u != v` and slice indices. Zero on graphs with unique
/// shortest paths. Witness is `None` only on a single-vertex graph.
pub fn interval_thinness(g: &Graph, d: &DistanceMatrix) -> (u32, Option<ThinnessWitness>) {
    let n = g.n();
    let best = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut local: Option<(u32, [usize; 5])> = None;
            let mut slices: Vec<Vec<usize>> = Vec::new();
            for v in 0..n {
                if v == u {
                    continue;
                }
                let dv = d.row(v);
                let duv = du[v];
                slices.clear();
                slices.resize(duv as usize + 1, Vec::new());
                for w in 0..n {
                    if du[w] + dv[w] == duv {
                        slices[du[w] as usize].push(w);
                    }
                }
                for (k, members) in slices.iter().enumerate() {
                    for (i, &x) in members.iter().enumerate() {
                        let dx = d.row(x);
                        for &y in &members[i..] {
                            local = better(local, Some((dx[y], [u, v, k, x, y])));
                        }
                    }
                }
            }
            local
        })
        .reduce(|| None, better);
    match best {
        None => (0, None),
        Some((dist, [u, v, k, x, y])) => (
            dist,
            Some(ThinnessWitness {
                u,
                v,
                k: k as u32,
                x,
                y,
                dist,
            }),
        ),
    }
}

/// The Gromov product `(x | y)_z = (d(x,z) + d(y,z) - d(x,y)) / 2`, exact.
pub fn gromov_product(d: &DistanceMatrix, x: usize, y: usize, z: usize) -> HalfInteger {
    HalfInteger::from_doubled(d.get(x, z) as i64 + d.get(y, z) as i64 - d.get(x, y) as i64)
}

/// A triple with apex realizing the slice triangle thinness: for the
/// ordered triple `(x, y, z)` with apex `y` and `k = floor((x|z)_y)`, the
/// vertices `z1 in S_k(y, x)` and `x1 in S_k(y, z)` are `dist` apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceTriangleWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub k: u32,
    pub z1: usize,
    pub x1: usize,
    pub dist: u32,
}

/// Maximum distance between the two "legs" of a geodesic triangle measured
/// at the branch height of its apex: over all ordered triples `(x, y, z)`
/// with apex `y`, `k = floor((x|z)_y)`, and all `z1 in S_k(y, x)`,
/// `x1 in S_k(y, z)`, the largest `d(z1, x1)`.
///
/// Triples with all three vertices equal are skipped (they contribute
/// zero), so a single-vertex graph reports `(0, None)`.
pub fn slice_triangle_thinness(
    g: &Graph,
    d: &DistanceMatrix,
) -> (u32, Option<SliceTriangleWitness>) {
    let n = g.n();
    let best = (0..n)
        .into_par_iter()
        .map(|x| {
            let dx = d.row(x);
            let mut local: Option<(u32, [usize; 6])> = None;
            for y in 0..n {
                let dy = d.row(y);
                for z in 0..n {
                    if x == y && y == z {
                        continue;
                    }
                    let dz = d.row(z);
                    let k = ((dx[y] as i64 + dy[z] as i64 - dx[z] as i64) / 2) as u32;
                    // S_k(y, x) and S_k(y, z) in one vertex pass
                    let mut on_x = Vec::new();
                    let mut on_z = Vec::new();
                    for w in 0..n {
                        if dy[w] == k {
                            if dy[w] + dx[w] == dx[y] {
                                on_x.push(w);
                            }
                            if dy[w] + dz[w] == dy[z] {
                                on_z.push(w);
                            }
                        }
                    }
                    for &z1 in &on_x {
                        let dz1 = d.row(z1);
                        for &x1 in &on_z {
                            local = better(local, Some((dz1[x1], [x, y, z, k as usize, z1, x1])));
                        }
                    }
                }
            }
            local
        })
        .reduce(|| None, better);
    match best {
        None => (0, None),
        Some((dist, [x, y, z, k, z1, x1])) => (
            dist,
            Some(SliceTriangleWitness {
                x,
                y,
                z,
                k: k as u32,
                z1,
                x1,
                dist,
            }),
        ),
    }
}

/// A chain realizing the bow defect: `v` between `u` and `w`, `w` between
/// `v` and `x`, the shared segment `vw` longer than the queried threshold,
/// and the concatenation short of `d(u, x)` by `defect`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BowWitness {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    pub x: usize,
    pub overlap: u32,
    pub defect: u32,
}

/// Bow defect at threshold `lambda`: the maximum of
/// `d(u,v) + d(v,w) + d(w,x) - d(u,x)` over all quadruples with
/// `v in I(u,w)`, `w in I(v,x)`, and `d(v,w) > lambda`. Zero with no
/// witness when no pair is more than `lambda` apart.
///
/// At `lambda = 0` this equals the alpha index: an overlap of length one
/// is exactly the shared terminal edge, and longer overlaps reduce to it.
pub fn bow_defect(g: &Graph, d: &DistanceMatrix, lambda: HalfInteger) -> (u32, Option<BowWitness>) {
    let n = g.n();
    let best = (0..n)
        .into_par_iter()
        .map(|v| {
            let dv = d.row(v);
            let mut local: Option<(u32, [usize; 4])> = None;
            for w in 0..n {
                let dvw = dv[w];
                if 2 * dvw as i64 <= lambda.doubled() {
                    continue;
                }
                let dw = d.row(w);
                let us: Vec<usize> = (0..n).filter(|&u| dw[u] == dv[u] + dvw).collect();
                let xs: Vec<usize> = (0..n).filter(|&x| dv[x] == dvw + dw[x]).collect();
                for &u in &us {
                    let du = d.row(u);
                    for &x in &xs {
                        let defect = dv[u] + dvw + dw[x] - du[x];
                        local = better(local, Some((defect, [u, v, w, x])));
                    }
                }
            }
            local
        })
        .reduce(|| None, better);
    match best {
        None => (0, None),
        Some((defect, [u, v, w, x])) => (
            defect,
            Some(BowWitness {
                u,
                v,
                w,
                x,
                overlap: d.get(v, w),
                defect,
            }),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::parse_graph;

    fn with_d(g: Graph) -> (Graph, DistanceMatrix) {
        let d = DistanceMatrix::compute(&g);
        (g, d)
    }

    fn c4() -> (Graph, DistanceMatrix) {
        with_d(generators::cycle(4).unwrap())
    }

    #[test]
    fn alpha_of_trees_is_zero() {
        for g in [
            generators::path(6).unwrap(),
            generators::star(7).unwrap(),
            generators::random_tree(9, 3).unwrap(),
        ] {
            let d = DistanceMatrix::compute(&g);
            assert_eq!(alpha_index(&g, &d).0, 0);
        }
    }

    #[test]
    fn alpha_of_c4() {
        let (g, d) = c4();
        let (idx, wit) = alpha_index(&g, &d);
        assert_eq!(idx, 2);
        let w = wit.unwrap();
        assert_eq!((w.u, w.v, w.w, w.x, w.defect), (0, 1, 2, 3, 2));
    }

    #[test]
    fn alpha_of_single_vertex_has_no_witness() {
        let (g, d) = with_d(generators::path(1).unwrap());
        assert_eq!(alpha_index(&g, &d), (0, None));
    }

    #[test]
    fn alpha_of_ladders() {
        for ell in 1..=4 {
            let (g, d) = with_d(generators::ladder(ell).unwrap());
            assert_eq!(alpha_index(&g, &d).0 as usize, 2 * ell);
        }
    }

    #[test]
    fn hyperbolicity_of_tree_and_block_graph_is_zero() {
        let (g, d) = with_d(generators::random_tree(8, 1).unwrap());
        assert_eq!(hyperbolicity(&g, &d).0, HalfInteger::ZERO);

        // two triangles sharing vertex 0
        let block = parse_graph("5 6\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n").unwrap();
        let db = DistanceMatrix::compute(&block);
        let (delta, wit) = hyperbolicity(&block, &db);
        assert_eq!(delta, HalfInteger::ZERO);
        assert_eq!((wit.u, wit.v, wit.w, wit.x), (0, 0, 0, 0));
    }

    #[test]
    fn hyperbolicity_of_c4_and_c5() {
        let (g, d) = c4();
        let (delta, wit) = hyperbolicity(&g, &d);
        assert_eq!(delta, HalfInteger::from_integer(1));
        assert_eq!(wit.sums, [4, 2, 2]);
        assert_eq!((wit.u, wit.v, wit.w, wit.x), (0, 1, 2, 3));

        let (g5, d5) = with_d(generators::cycle(5).unwrap());
        let (delta5, wit5) = hyperbolicity(&g5, &d5);
        assert_eq!(delta5, HalfInteger::from_doubled(1));
        assert_eq!(wit5.sums, [4, 3, 2]);
    }

    #[test]
    fn thinness_of_tree_and_c4() {
        let (g, d) = with_d(generators::random_tree(9, 5).unwrap());
        assert_eq!(interval_thinness(&g, &d).0, 0);

        let (g4, d4) = c4();
        let (kappa, wit) = interval_thinness(&g4, &d4);
        assert_eq!(kappa, 2);
        let w = wit.unwrap();
        assert_eq!((w.u, w.v, w.k, w.x, w.y, w.dist), (0, 2, 1, 1, 3, 2));
    }

    #[test]
    fn thinness_single_vertex() {
        let (g, d) = with_d(generators::path(1).unwrap());
        assert_eq!(interval_thinness(&g, &d), (0, None));
    }

    #[test]
    fn gromov_products() {
        let (_, d) = with_d(generators::path(3).unwrap());
        assert_eq!(gromov_product(&d, 0, 2, 1), HalfInteger::ZERO);
        assert_eq!(gromov_product(&d, 0, 2, 0), HalfInteger::ZERO);
        let (_, d3) = with_d(generators::complete(3).unwrap());
        assert_eq!(gromov_product(&d3, 0, 1, 2), HalfInteger::from_doubled(1));
    }

    #[test]
    fn slice_triangle_thinness_tree_and_c4() {
        let (g, d) = with_d(generators::random_tree(9, 7).unwrap());
        assert_eq!(slice_triangle_thinness(&g, &d).0, 0);

        let (g4, d4) = c4();
        let (tau, wit) = slice_triangle_thinness(&g4, &d4);
        assert_eq!(tau, 2);
        let w = wit.unwrap();
        assert_eq!(
            (w.x, w.y, w.z, w.k, w.z1, w.x1, w.dist),
            (0, 1, 3, 1, 0, 2, 2)
        );
    }

    #[test]
    fn bow_defect_of_trees_is_zero() {
        let (g, d) = with_d(generators::random_tree(9, 11).unwrap());
        for lam in [0, 1, 2, 3] {
            assert_eq!(bow_defect(&g, &d, HalfInteger::from_doubled(lam)).0, 0);
        }
    }

    #[test]
    fn bow_defect_at_zero_equals_alpha() {
        for g in [
            generators::cycle(6).unwrap(),
            generators::g_p(3).unwrap(),
            generators::ladder(3).unwrap(),
            generators::random_connected(9, 14, 4).unwrap(),
        ] {
            let d = DistanceMatrix::compute(&g);
            assert_eq!(
                bow_defect(&g, &d, HalfInteger::ZERO).0,
                alpha_index(&g, &d).0
            );
        }
    }

    #[test]
    fn bow_defect_of_ladder() {
        for ell in 1..=4 {
            let (g, d) = with_d(generators::ladder(ell).unwrap());
            assert_eq!(bow_defect(&g, &d, HalfInteger::ZERO).0 as usize, 2 * ell);
        }
    }

    #[test]
    fn bow_no_configuration() {
        let (g, d) = with_d(generators::path(2).unwrap());
        // threshold above the diameter: no admissible overlap
        let (mu, wit) = bow_defect(&g, &d, HalfInteger::from_integer(5));
        assert_eq!(mu, 0);
        assert!(wit.is_none());
    }
}
