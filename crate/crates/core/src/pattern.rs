//! Convexity of disks, slice clique tests, isometric subgraph search, and
//! the convex-disks / forbidden-pattern characterization of alpha index at
//! most one.

use rayon::prelude::*;

use crate::dist::{eccentricities, DistanceMatrix};
use crate::generators;
use crate::graph::Graph;

/// Whether `set` is convex (closed under intervals). The witness is the
/// lexicographically smallest `(a, b, c)` with `a, b` in the set and `c`
/// on a shortest `(a, b)`-path outside it.
pub fn is_convex_set(d: &DistanceMatrix, set: &[usize]) -> (bool, Option<(usize, usize, usize)>) {
    let n = d.n();
    let mut inside = vec![false; n];
    for &v in set {
        inside[v] = true;
    }
    let mut members: Vec<usize> = set.to_vec();
    members.sort_unstable();
    members.dedup();
    for &a in &members {
        let da = d.row(a);
        for &b in &members {
            let dab = da[b];
            let db = d.row(b);
            for c in 0..n {
                if !inside[c] && da[c] + db[c] == dab {
                    return (false, Some((a, b, c)));
                }
            }
        }
    }
    (true, None)
}

/// A non-convex disk: `a, b` lie in `D(center, radius)` but `c` on a
/// shortest `(a, b)`-path does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvexityWitness {
    pub center: usize,
    pub radius: u32,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Checks every disk `D(v, k)` for `1 <= k <= ecc(v)`; the witness is the
/// first failure in `(center, radius, a, b, c)` order.
pub fn all_disks_convex(g: &Graph, d: &DistanceMatrix) -> (bool, Option<ConvexityWitness>) {
    let ecc = eccentricities(d).ecc;
    let n = g.n();
    let witness = (0..n)
        .into_par_iter()
        .map(|center| {
            let dc = d.row(center);
            for radius in 1..=ecc[center] {
                let disk: Vec<usize> = (0..n).filter(|&v| dc[v] <= radius).collect();
                if let (false, Some((a, b, c))) = is_convex_set(d, &disk) {
                    return Some(ConvexityWitness {
                        center,
                        radius,
                        a,
                        b,
                        c,
                    });
                }
            }
            None
        })
        .reduce(
            || None,
            |x, y| match (x, y) {
                (None, w) | (w, None) => w,
                (Some(a), Some(b)) => {
                    if (b.center, b.radius, b.a, b.b, b.c) < (a.center, a.radius, a.a, a.b, a.c) {
                        Some(b)
                    } else {
                        Some(a)
                    }
                }
            },
        );
    (witness.is_none(), witness)
}

/// A non-clique first slice: `a, b` both neighbor `x` on shortest
/// `(x, y)`-paths yet are not adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceCliqueWitness {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

/// Whether `S_1(x, y)` induces a clique for every pair at distance two or
/// more.
pub fn s1_slices_clique(g: &Graph, d: &DistanceMatrix) -> (bool, Option<SliceCliqueWitness>) {
    let n = g.n();
    for x in 0..n {
        let dx = d.row(x);
        for y in 0..n {
            if dx[y] < 2 {
                continue;
            }
            let s1: Vec<usize> = g
                .neighbors(x)
                .iter()
                .copied()
                .filter(|&w| 1 + d.get(w, y) == dx[y])
                .collect();
            for (i, &a) in s1.iter().enumerate() {
                for &b in &s1[i + 1..] {
                    if !g.has_edge(a, b) {
                        return (false, Some(SliceCliqueWitness { x, y, a, b }));
                    }
                }
            }
        }
    }
    (true, None)
}

/// A distance-preserving injection of a pattern graph into a host,
/// indexed by pattern vertex id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometricEmbedding {
    pub mapping: Vec<usize>,
}

/// Searches for an isometric embedding of `pattern` into `host` by
/// backtracking. Pattern vertices are placed in a greedy connected order
/// (starting at 0, then always the smallest unplaced vertex adjacent to a
/// placed one) so the pairwise distance constraints bind as early as
/// possible; host candidates are tried in ascending id. The search is
/// exhaustive: `None` means no embedding exists.
pub fn find_isometric_embedding(pattern: &Graph, host: &Graph) -> Option<IsometricEmbedding> {
    let dp = DistanceMatrix::compute(pattern);
    let dh = DistanceMatrix::compute(host);
    find_isometric_embedding_with(pattern, &dp, host, &dh)
}

pub fn find_isometric_embedding_with(
    pattern: &Graph,
    dp: &DistanceMatrix,
    host: &Graph,
    dh: &DistanceMatrix,
) -> Option<IsometricEmbedding> {
    let np = pattern.n();
    let nh = host.n();
    if np > nh {
        return None;
    }
    // greedy connected placement order
    let mut order = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    order.push(0);
    placed[0] = true;
    while order.len() < np {
        let next = (0..np)
            .find(|&v| !placed[v] && order.iter().any(|&p| pattern.has_edge(p, v)))
            .expect("pattern graphs are connected");
        placed[next] = true;
        order.push(next);
    }

    let mut image = vec![usize::MAX; np];
    let mut used = vec![false; nh];
    fn descend(
        order: &[usize],
        depth: usize,
        dp: &DistanceMatrix,
        dh: &DistanceMatrix,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let p = order[depth];
        'cand: for h in 0..dh.n() {
            if used[h] {
                continue;
            }
            for &q in &order[..depth] {
                if dh.get(h, image[q]) != dp.get(p, q) {
                    continue 'cand;
                }
            }
            image[p] = h;
            used[h] = true;
            if descend(order, depth + 1, dp, dh, image, used) {
                return true;
            }
            image[p] = usize::MAX;
            used[h] = false;
        }
        false
    }
    if descend(&order, 0, dp, dh, &mut image, &mut used) {
        Some(IsometricEmbedding { mapping: image })
    } else {
        None
    }
}

/// Largest `l` such that the cycle `C_l` embeds isometrically (searching
/// downward from `min(n, 2 diam + 1)`); zero when no cycle does.
pub fn max_isometric_cycle(g: &Graph, d: &DistanceMatrix) -> u32 {
    let diam = eccentricities(d).diameter as usize;
    let upper = g.n().min(2 * diam + 1);
    for l in (3..=upper).rev() {
        let pattern = generators::cycle(l).expect("l >= 3");
        let dp = DistanceMatrix::compute(&pattern);
        if find_isometric_embedding_with(&pattern, &dp, g, d).is_some() {
            return l as u32;
        }
    }
    0
}

/// Outcome of the convex-disks plus forbidden-pattern test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Alpha1Reason {
    Satisfied,
    NonConvexDisk(ConvexityWitness),
    ContainsW6pp(IsometricEmbedding),
}

/// Whether all disks are convex and the 9-vertex wheel obstruction does
/// not embed isometrically; this characterizes the graphs of alpha index
/// at most one. The reason names the failing clause with its witness.
pub fn alpha1_characterization(g: &Graph, d: &DistanceMatrix) -> (bool, Alpha1Reason) {
    let (convex, witness) = all_disks_convex(g, d);
    if !convex {
        return (false, Alpha1Reason::NonConvexDisk(witness.unwrap()));
    }
    let pattern = generators::w6pp();
    let dp = DistanceMatrix::compute(&pattern);
    match find_isometric_embedding_with(&pattern, &dp, g, d) {
        Some(embedding) => (false, Alpha1Reason::ContainsW6pp(embedding)),
        None => (true, Alpha1Reason::Satisfied),
    }
}

/// A configuration falsifying the equality characterization checked by
/// [`check_equality_case`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EqualityCaseWitness {
    pub x: usize,
    pub y: usize,
    pub v: usize,
    pub u: usize,
    pub equality_holds: bool,
    pub pair_exists: bool,
}

/// For every `x, y, v, u` with `v` on a shortest `(x, y)`-path, `x` on a
/// shortest `(v, u)`-path, and `x ~ v`: tests that
/// `d(u, y) = d(u, x) + d(v, y)` holds exactly when some neighbor `x'` of
/// `x` toward `u` and some neighbor `v'` of `v` toward `y` are at distance
/// two. Intended for graphs of alpha index at most one; elsewhere the
/// equivalence can fail and the result is only a report.
pub fn check_equality_case(
    g: &Graph,
    d: &DistanceMatrix,
) -> (bool, Option<EqualityCaseWitness>, u64) {
    let n = g.n();
    let mut checked = 0u64;
    for x in 0..n {
        let dx = d.row(x);
        for &v in g.neighbors(x) {
            let dv = d.row(v);
            for y in 0..n {
                // v between x and y, one step from x
                if dx[y] != 1 + dv[y] {
                    continue;
                }
                for u in 0..n {
                    // x between v and u, one step from v
                    if dv[u] != 1 + dx[u] {
                        continue;
                    }
                    checked += 1;
                    let equality_holds = d.get(u, y) == dx[u] + dv[y];
                    let pair_exists = g
                        .neighbors(x)
                        .iter()
                        .copied()
                        .filter(|&xp| 1 + d.get(xp, u) == dx[u])
                        .any(|xp| {
                            g.neighbors(v)
                                .iter()
                                .copied()
                                .filter(|&vp| 1 + d.get(vp, y) == dv[y])
                                .any(|vp| d.get(xp, vp) == 2)
                        });
                    if equality_holds != pair_exists {
                        return (
                            false,
                            Some(EqualityCaseWitness {
                                x,
                                y,
                                v,
                                u,
                                equality_holds,
                                pair_exists,
                            }),
                            checked,
                        );
                    }
                }
            }
        }
    }
    (true, None, checked)
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
    fn convexity_basics() {
        let (_, d) = with_d(generators::path(5).unwrap());
        assert_eq!(is_convex_set(&d, &[1, 2, 3]), (true, None));
        assert_eq!(is_convex_set(&d, &[0, 1, 2, 3, 4]), (true, None));

        let (_, d4) = with_d(generators::cycle(4).unwrap());
        // D(0, 1) = {0, 1, 3}: vertex 2 sits between 1 and 3
        let (ok, wit) = is_convex_set(&d4, &[0, 1, 3]);
        assert!(!ok);
        assert_eq!(wit, Some((1, 3, 2)));
    }

    #[test]
    fn disk_convexity_of_trees_cycles_and_grids() {
        let (g, d) = with_d(generators::random_tree(9, 4).unwrap());
        assert!(all_disks_convex(&g, &d).0);

        let (c6, d6) = with_d(generators::cycle(6).unwrap());
        let (ok, wit) = all_disks_convex(&c6, &d6);
        assert!(!ok);
        let w = wit.unwrap();
        assert_eq!((w.center, w.radius), (0, 2));

        for n in 2..=6 {
            let (tg, dt) = with_d(generators::triangular_grid(n).unwrap());
            assert!(all_disks_convex(&tg, &dt).0);
        }
    }

    #[test]
    fn chordal_graphs_have_convex_disks() {
        for seed in 0..8 {
            let (g, d) = with_d(generators::random_chordal(9, seed).unwrap());
            assert!(all_disks_convex(&g, &d).0, "seed {seed}");
        }
    }

    #[test]
    fn s1_cliques() {
        let (c5, d5) = with_d(generators::cycle(5).unwrap());
        assert_eq!(s1_slices_clique(&c5, &d5), (true, None));

        let (c4, d4) = with_d(generators::cycle(4).unwrap());
        let (ok, wit) = s1_slices_clique(&c4, &d4);
        assert!(!ok);
        assert_eq!(wit, Some(SliceCliqueWitness { x: 0, y: 2, a: 1, b: 3 }));

        let (k5, dk) = with_d(generators::complete(5).unwrap());
        assert_eq!(s1_slices_clique(&k5, &dk), (true, None));
    }

    #[test]
    fn embedding_identity_and_impossible() {
        let c4 = generators::cycle(4).unwrap();
        let found = find_isometric_embedding(&c4, &c4).unwrap();
        assert_eq!(found.mapping, vec![0, 1, 2, 3]);

        let k4 = generators::complete(4).unwrap();
        assert!(find_isometric_embedding(&c4, &k4).is_none());
    }

    #[test]
    fn c6_embeds_isometrically_in_q3() {
        let c6 = generators::cycle(6).unwrap();
        let q3 = generators::hypercube(3).unwrap();
        let dq = DistanceMatrix::compute(&q3);
        let dp = DistanceMatrix::compute(&c6);
        let emb = find_isometric_embedding_with(&c6, &dp, &q3, &dq).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(dq.get(emb.mapping[a], emb.mapping[b]), dp.get(a, b));
            }
        }
    }

    #[test]
    fn max_isometric_cycles() {
        let (t, dt) = with_d(generators::random_tree(8, 6).unwrap());
        assert_eq!(max_isometric_cycle(&t, &dt), 0);

        let (c7, d7) = with_d(generators::cycle(7).unwrap());
        assert_eq!(max_isometric_cycle(&c7, &d7), 7);

        let (q3, dq) = with_d(generators::hypercube(3).unwrap());
        assert_eq!(max_isometric_cycle(&q3, &dq), 6);
    }

    #[test]
    fn alpha1_characterization_cases() {
        for n in 2..=6 {
            let (tg, dt) = with_d(generators::triangular_grid(n).unwrap());
            assert!(alpha1_characterization(&tg, &dt).0);
        }

        let (w, dw) = with_d(generators::w6pp());
        let (ok, reason) = alpha1_characterization(&w, &dw);
        assert!(!ok);
        assert!(matches!(reason, Alpha1Reason::ContainsW6pp(_)));

        let (c4, d4) = with_d(generators::cycle(4).unwrap());
        let (ok4, reason4) = alpha1_characterization(&c4, &d4);
        assert!(!ok4);
        assert!(matches!(reason4, Alpha1Reason::NonConvexDisk(_)));
    }

    #[test]
    fn equality_case_on_trees_and_grids() {
        for g in [
            generators::path(8).unwrap(),
            generators::star(8).unwrap(),
            generators::random_tree(8, 9).unwrap(),
            generators::triangular_grid(5).unwrap(),
        ] {
            let d = DistanceMatrix::compute(&g);
            let (ok, wit, _) = check_equality_case(&g, &d);
            assert!(ok, "unexpected counterexample {wit:?}");
        }
    }
}
