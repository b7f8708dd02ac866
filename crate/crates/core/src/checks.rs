//! Machine-checkable structural facts about a graph, keyed by check id.
//!
//! Each check quantifies a property over all admissible configurations of
//! one graph and reports pass/fail, the number of configurations examined,
//! and on failure the first counterexample in a fixed configuration order
//! (so parallel and serial runs print the same witness). Facts that are
//! conditional on the alpha index take the index as an explicit argument;
//! [`run_check`] passes the computed one.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dismantling::{bfs_ordering, is_dismantling_ordering, is_ss_dismantling_ordering};
use crate::dist::{eccentricities, DistanceMatrix, Eccentricities};
use crate::generators::gp_expected_distance;
use crate::graph::Graph;
use crate::half::HalfInteger;
use crate::hull::{injective_hull, is_helly, HullGraph, DEFAULT_HULL_CAP};
use crate::invariants::{
    alpha_index, bow_defect, hyperbolicity, interval_thinness, slice_triangle_thinness,
    AlphaWitness, FourPointWitness,
};
use crate::pattern::{
    all_disks_convex, alpha1_characterization, check_equality_case, max_isometric_cycle,
    s1_slices_clique, Alpha1Reason,
};
use crate::transforms::{power, subdivide};
use crate::triangles::enumerate_metric_triangles_with_cap;

/// Hull-based checks only run on inputs this small; hulls grow
/// exponentially and the point is desk-scale verification.
pub const HULL_CHECK_MAX_N: usize = 8;

/// Identifier of one checkable fact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    ThreeBalls,
    AuxGd,
    Thinness,
    SubdivisionThinness,
    DismantlI,
    SsStar,
    TriangleThinness,
    MainBound,
    Alpha1Hyp,
    TriangleTypes,
    C3,
    C3OrC5,
    Alpha1Thinness,
    CloseBalls,
    EqualityCase,
    Charact,
    ConvexCriterion,
    DiamApprox,
    Bow,
    BowAlpha,
    HullHyp,
    HullHelly,
    HullDist,
    GpDistances,
}

impl CheckId {
    pub const ALL: [CheckId; 24] = [
        CheckId::ThreeBalls,
        CheckId::AuxGd,
        CheckId::Thinness,
        CheckId::SubdivisionThinness,
        CheckId::DismantlI,
        CheckId::SsStar,
        CheckId::TriangleThinness,
        CheckId::MainBound,
        CheckId::Alpha1Hyp,
        CheckId::TriangleTypes,
        CheckId::C3,
        CheckId::C3OrC5,
        CheckId::Alpha1Thinness,
        CheckId::CloseBalls,
        CheckId::EqualityCase,
        CheckId::Charact,
        CheckId::ConvexCriterion,
        CheckId::DiamApprox,
        CheckId::Bow,
        CheckId::BowAlpha,
        CheckId::HullHyp,
        CheckId::HullHelly,
        CheckId::HullDist,
        CheckId::GpDistances,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::ThreeBalls => "three-balls",
            CheckId::AuxGd => "aux-gd",
            CheckId::Thinness => "thinness",
            CheckId::SubdivisionThinness => "subdivision-thinness",
            CheckId::DismantlI => "dismantl-i",
            CheckId::SsStar => "ss-star",
            CheckId::TriangleThinness => "triangle-thinness",
            CheckId::MainBound => "main-bound",
            CheckId::Alpha1Hyp => "alpha1-hyp",
            CheckId::TriangleTypes => "triangle-types",
            CheckId::C3 => "c3",
            CheckId::C3OrC5 => "c3-or-c5",
            CheckId::Alpha1Thinness => "alpha1-thinness",
            CheckId::CloseBalls => "close-balls",
            CheckId::EqualityCase => "equality-case",
            CheckId::Charact => "charact",
            CheckId::ConvexCriterion => "convex-criterion",
            CheckId::DiamApprox => "diam-approx",
            CheckId::Bow => "bow",
            CheckId::BowAlpha => "bow-alpha",
            CheckId::HullHyp => "hull-hyp",
            CheckId::HullHelly => "hull-helly",
            CheckId::HullDist => "hull-dist",
            CheckId::GpDistances => "gp-distances",
        }
    }

    pub fn parse(name: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// Result of one check on one graph.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    pub witness: Option<Value>,
    pub configurations_checked: u64,
}

impl CheckReport {
    fn pass(id: CheckId, configurations: u64) -> CheckReport {
        CheckReport {
            check: id.name().to_string(),
            pass: true,
            witness: None,
            configurations_checked: configurations,
        }
    }

    fn fail(id: CheckId, configurations: u64, witness: Value) -> CheckReport {
        CheckReport {
            check: id.name().to_string(),
            pass: false,
            witness: Some(witness),
            configurations_checked: configurations,
        }
    }

    /// A check whose hypothesis does not apply to this graph.
    fn skipped(id: CheckId) -> CheckReport {
        CheckReport::pass(id, 0)
    }
}

/// A failing configuration keyed for "smallest counterexample" merges.
struct Fail {
    key: Vec<usize>,
    witness: Value,
}

fn merge_fail(a: Option<Fail>, b: Option<Fail>) -> Option<Fail> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => Some(if b.key < a.key { b } else { a }),
    }
}

fn merge_part(a: (u64, Option<Fail>), b: (u64, Option<Fail>)) -> (u64, Option<Fail>) {
    (a.0 + b.0, merge_fail(a.1, b.1))
}

/// One graph with the shared data every check needs.
pub struct GraphCtx {
    pub graph: Graph,
    pub dist: DistanceMatrix,
    pub ecc: Eccentricities,
    pub alpha: u32,
    pub alpha_witness: Option<AlphaWitness>,
    pub delta: HalfInteger,
    pub hyp_witness: FourPointWitness,
}

impl GraphCtx {
    pub fn new(graph: Graph) -> GraphCtx {
        let dist = DistanceMatrix::compute(&graph);
        let ecc = eccentricities(&dist);
        let (alpha, alpha_witness) = alpha_index(&graph, &dist);
        let (delta, hyp_witness) = hyperbolicity(&graph, &dist);
        GraphCtx {
            graph,
            dist,
            ecc,
            alpha,
            alpha_witness,
            delta,
            hyp_witness,
        }
    }
}

/// Runs one check against a prepared graph context.
pub fn run_check(id: CheckId, ctx: &GraphCtx) -> CheckReport {
    let (g, d, i) = (&ctx.graph, &ctx.dist, ctx.alpha);
    match id {
        CheckId::ThreeBalls => check_three_balls(g, d, &ctx.ecc, i),
        CheckId::AuxGd => check_aux_gd(g, d, i),
        CheckId::Thinness => check_thinness(g, d, i),
        CheckId::SubdivisionThinness => check_subdivision_thinness(g, d, i),
        CheckId::DismantlI => check_dismantl_i(g, i),
        CheckId::SsStar => check_ss_star(g, d, &ctx.ecc, i),
        CheckId::TriangleThinness => check_triangle_thinness(g, d, i),
        CheckId::MainBound => check_main_bound(ctx),
        CheckId::Alpha1Hyp => check_alpha1_hyp(ctx),
        CheckId::TriangleTypes => check_triangle_types(g, d, i),
        CheckId::C3 => check_c3(g, d, i),
        CheckId::C3OrC5 => check_c3_or_c5(g, d, i),
        CheckId::Alpha1Thinness => check_alpha1_thinness(g, d, i),
        CheckId::CloseBalls => check_close_balls(g, d, i),
        CheckId::EqualityCase => check_equality_case_report(g, d, i),
        CheckId::Charact => check_charact(ctx),
        CheckId::ConvexCriterion => check_convex_criterion(g, d),
        CheckId::DiamApprox => check_diam_approx(g, d, &ctx.ecc, i),
        CheckId::Bow => check_bow(g, d, ctx.delta),
        CheckId::BowAlpha => check_bow_alpha(g, d, i),
        CheckId::HullHyp => check_hull_hyp(ctx),
        CheckId::HullHelly => check_hull_helly(ctx),
        CheckId::HullDist => check_hull_dist(ctx),
        CheckId::GpDistances => check_gp_distances(g, d),
    }
}

/// Three pairwise intersecting disks always share a point after relaxing
/// the third radius by the alpha index: for all centers `u, v, w` and
/// radii `r_u, r_v <= diam` with the minimal compatible `r_w`, some vertex
/// lies within `r_u` of `u`, `r_v` of `v`, and `r_w + i` of `w`. Larger
/// `r_w` only weaken the claim, so minimizing it is exhaustive.
pub fn check_three_balls(g: &Graph, d: &DistanceMatrix, ecc: &Eccentricities, i: u32) -> CheckReport {
    let n = g.n();
    let diam = ecc.diameter;
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for v in u..n {
                let dv = d.row(v);
                let duv = du[v];
                for ru in 0..=diam {
                    for rv in 0..=diam {
                        if ru + rv < duv {
                            continue;
                        }
                        let members: Vec<usize> =
                            (0..n).filter(|&x| du[x] <= ru && dv[x] <= rv).collect();
                        for w in 0..n {
                            let dw = d.row(w);
                            let rw = dw[u].saturating_sub(ru).max(dw[v].saturating_sub(rv));
                            count += 1;
                            let best = members.iter().map(|&x| dw[x]).min().unwrap_or(u32::MAX);
                            if best > rw + i {
                                fail = merge_fail(
                                    fail,
                                    Some(Fail {
                                        key: vec![u, v, w, ru as usize, rv as usize],
                                        witness: json!({
                                            "centers": [u, v, w],
                                            "radii": [ru, rv, rw],
                                            "alpha_index": i,
                                            "closest_to_w": best,
                                        }),
                                    }),
                                );
                            }
                        }
                    }
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::ThreeBalls, count, fail)
}

/// For `x` on a shortest `(u, v)`-path and `y` equidistant from `u`, with
/// `d(v, y) <= d(v, x) + k` for the minimal admissible `k >= 0`:
/// `d(x, y) <= k + i + 2`.
pub fn check_aux_gd(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    let n = g.n();
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for v in 0..n {
                let dv = d.row(v);
                let duv = du[v];
                for x in 0..n {
                    if du[x] + dv[x] != duv {
                        continue;
                    }
                    let dx = d.row(x);
                    for y in 0..n {
                        if du[y] != du[x] {
                            continue;
                        }
                        count += 1;
                        let k = dv[y].saturating_sub(dv[x]);
                        if dx[y] > k + i + 2 {
                            fail = merge_fail(
                                fail,
                                Some(Fail {
                                    key: vec![u, v, x, y],
                                    witness: json!({
                                        "u": u, "v": v, "x": x, "y": y,
                                        "k": k, "alpha_index": i,
                                        "d_x_y": dx[y],
                                        "bound": k + i + 2,
                                    }),
                                }),
                            );
                        }
                    }
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::AuxGd, count, fail)
}

/// Interval thinness is at most `i + 1`.
pub fn check_thinness(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    let (kappa, wit) = interval_thinness(g, d);
    if kappa <= i + 1 {
        CheckReport::pass(CheckId::Thinness, 1)
    } else {
        let w = wit.unwrap();
        CheckReport::fail(
            CheckId::Thinness,
            1,
            json!({
                "interval_thinness": kappa,
                "bound": i + 1,
                "endpoints": [w.u, w.v],
                "k": w.k,
                "pair": [w.x, w.y],
                "dist": w.dist,
            }),
        )
    }
}

/// The 1-subdivision has interval thinness at most `2i + 12`.
pub fn check_subdivision_thinness(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    let _ = d;
    let s = subdivide(g);
    let ds = DistanceMatrix::compute(&s.graph);
    let (kappa, wit) = interval_thinness(&s.graph, &ds);
    if kappa <= 2 * i + 12 {
        CheckReport::pass(CheckId::SubdivisionThinness, 1)
    } else {
        let w = wit.unwrap();
        CheckReport::fail(
            CheckId::SubdivisionThinness,
            1,
            json!({
                "subdivision_thinness": kappa,
                "bound": 2 * i + 12,
                "endpoints": [w.u, w.v],
                "k": w.k,
                "pair": [w.x, w.y],
            }),
        )
    }
}

/// Every BFS ordering of the graph dismantles its `(i+1)`-st power.
pub fn check_dismantl_i(g: &Graph, i: u32) -> CheckReport {
    let gp = power(g, i + 1).expect("i + 1 >= 1");
    let n = g.n();
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|start| {
            let o = bfs_ordering(g, start);
            let (ok, at) = is_dismantling_ordering(&gp, &o);
            if ok {
                (1u64, None)
            } else {
                (
                    1u64,
                    Some(Fail {
                        key: vec![start],
                        witness: json!({
                            "scheme": "classic",
                            "power": i + 1,
                            "start": start,
                            "ordering": o.order,
                            "dismantling": false,
                            "fail_k": at,
                        }),
                    }),
                )
            }
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::DismantlI, count, fail)
}

/// Every BFS ordering is `(r, ceil(r/2) + 2i + 1)*`-dismantling for every
/// `r` from 1 to twice the diameter. Vacuous on a single vertex.
pub fn check_ss_star(g: &Graph, d: &DistanceMatrix, ecc: &Eccentricities, i: u32) -> CheckReport {
    let n = g.n();
    if n == 1 {
        return CheckReport::skipped(CheckId::SsStar);
    }
    let rmax = (2 * ecc.diameter).max(1);
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|start| {
            let o = bfs_ordering(g, start);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for r in 1..=rmax {
                count += 1;
                let s_prime = r.div_ceil(2) + 2 * i + 1;
                let (ok, at) = is_ss_dismantling_ordering(g, d, &o, r, s_prime, true);
                if !ok {
                    fail = merge_fail(
                        fail,
                        Some(Fail {
                            key: vec![start, r as usize],
                            witness: json!({
                                "scheme": "ss-star",
                                "start": start,
                                "s": r,
                                "s_prime": s_prime,
                                "ordering": o.order,
                                "dismantling": false,
                                "fail_k": at,
                            }),
                        }),
                    );
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::SsStar, count, fail)
}

/// Slice triangle thinness is at most `3 (i + 1)`.
pub fn check_triangle_thinness(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    let (tau, wit) = slice_triangle_thinness(g, d);
    if tau <= 3 * (i + 1) {
        CheckReport::pass(CheckId::TriangleThinness, 1)
    } else {
        let w = wit.unwrap();
        CheckReport::fail(
            CheckId::TriangleThinness,
            1,
            json!({
                "slice_triangle_thinness": tau,
                "bound": 3 * (i + 1),
                "triple": [w.x, w.y, w.z],
                "k": w.k,
                "pair": [w.z1, w.x1],
                "dist": w.dist,
            }),
        )
    }
}

/// `2 delta <= 2 (i + ceil((i+1)/2))`.
pub fn check_main_bound(ctx: &GraphCtx) -> CheckReport {
    let i = ctx.alpha as i64;
    let bound_x2 = 2 * (i + (i + 1).div_euclid(2) + (i + 1).rem_euclid(2));
    if ctx.delta.doubled() <= bound_x2 {
        CheckReport::pass(CheckId::MainBound, 1)
    } else {
        let w = &ctx.hyp_witness;
        CheckReport::fail(
            CheckId::MainBound,
            1,
            json!({
                "alpha_index": ctx.alpha,
                "hyperbolicity_x2": ctx.delta.doubled(),
                "bound_x2": bound_x2,
                "quadruple": [w.u, w.v, w.w, w.x],
                "sums": w.sums,
            }),
        )
    }
}

/// Graphs of alpha index at most one are 1-hyperbolic.
pub fn check_alpha1_hyp(ctx: &GraphCtx) -> CheckReport {
    if ctx.alpha > 1 {
        return CheckReport::skipped(CheckId::Alpha1Hyp);
    }
    if ctx.delta.doubled() <= 2 {
        CheckReport::pass(CheckId::Alpha1Hyp, 1)
    } else {
        let w = &ctx.hyp_witness;
        CheckReport::fail(
            CheckId::Alpha1Hyp,
            1,
            json!({
                "alpha_index": ctx.alpha,
                "hyperbolicity_x2": ctx.delta.doubled(),
                "quadruple": [w.u, w.v, w.w, w.x],
                "sums": w.sums,
            }),
        )
    }
}

/// In graphs of alpha index at most one every metric triangle has type
/// `(1,1,1)`, `(1,2,2)`, or `(2,2,2)` up to role order.
pub fn check_triangle_types(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::TriangleTypes);
    }
    const ALLOWED: [[u32; 3]; 3] = [[1, 1, 1], [1, 2, 2], [2, 2, 2]];
    match enumerate_metric_triangles_with_cap(g, d, 4096) {
        Err(_) => CheckReport::skipped(CheckId::TriangleTypes),
        Ok(all) => {
            let count = all.triangles.len() as u64;
            for t in &all.triangles {
                if !ALLOWED.contains(&t.sides) {
                    return CheckReport::fail(
                        CheckId::TriangleTypes,
                        count,
                        json!({
                            "triangle": [t.u, t.v, t.w],
                            "type": t.sides,
                            "alpha_index": i,
                        }),
                    );
                }
            }
            CheckReport::pass(CheckId::TriangleTypes, count)
        }
    }
}

/// In graphs of alpha index at most one, adjacent vertices of a common
/// slice `S_k(u, v)` have common neighbors in the previous and next
/// slices, whenever those exist.
pub fn check_c3(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::C3);
    }
    let n = g.n();
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for v in 0..n {
                if v == u {
                    continue;
                }
                let dv = d.row(v);
                let duv = du[v];
                let on_interval: Vec<usize> =
                    (0..n).filter(|&w| du[w] + dv[w] == duv).collect();
                for (idx, &x) in on_interval.iter().enumerate() {
                    for &y in &on_interval[idx + 1..] {
                        if du[x] != du[y] || !g.has_edge(x, y) {
                            continue;
                        }
                        let k = du[x];
                        count += 1;
                        let common_in = |kk: u32| {
                            g.neighbors(x).iter().any(|&c| {
                                du[c] == kk
                                    && du[c] + dv[c] == duv
                                    && g.has_edge(c, y)
                            })
                        };
                        let below_ok = k == 0 || common_in(k - 1);
                        let above_ok = k == duv || common_in(k + 1);
                        if !below_ok || !above_ok {
                            fail = merge_fail(
                                fail,
                                Some(Fail {
                                    key: vec![u, v, x, y],
                                    witness: json!({
                                        "u": u, "v": v, "k": k,
                                        "pair": [x, y],
                                        "missing_side": if below_ok { "above" } else { "below" },
                                    }),
                                }),
                            );
                        }
                    }
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::C3, count, fail)
}

/// In graphs of alpha index at most one, an edge `xy` equidistant from `u`
/// either has a common neighbor one step closer to `u`, or there is a
/// vertex `u2` at distance two from both `x` and `y` and `k - 2` from `u`
/// such that every bridge through it closes an induced 5-cycle.
pub fn check_c3_or_c5(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::C3OrC5);
    }
    let n = g.n();
    let mut count = 0u64;
    for x in 0..n {
        let dx = d.row(x);
        for &y in g.neighbors(x) {
            if y < x {
                continue;
            }
            let dy = d.row(y);
            for u in 0..n {
                let k = dx[u];
                if dy[u] != k || k == 0 {
                    continue;
                }
                count += 1;
                let du = d.row(u);
                let common_closer = g
                    .neighbors(x)
                    .iter()
                    .any(|&c| g.has_edge(c, y) && du[c] + 1 == k);
                if common_closer {
                    continue;
                }
                let candidate = (0..n).find(|&u2| {
                    dx[u2] == 2
                        && dy[u2] == 2
                        && k >= 2
                        && du[u2] == k - 2
                        && g.neighbors(x)
                            .iter()
                            .filter(|&&z| g.has_edge(z, u2))
                            .all(|&z| {
                                g.neighbors(y)
                                    .iter()
                                    .filter(|&&w| g.has_edge(w, u2))
                                    .all(|&w| induced_c5(g, [x, z, u2, w, y]))
                            })
                });
                if candidate.is_none() {
                    return CheckReport::fail(
                        CheckId::C3OrC5,
                        count,
                        json!({
                            "edge": [x, y],
                            "u": u,
                            "k": k,
                        }),
                    );
                }
            }
        }
    }
    CheckReport::pass(CheckId::C3OrC5, count)
}

fn induced_c5(g: &Graph, c: [usize; 5]) -> bool {
    for a in 0..5 {
        for b in a + 1..5 {
            if c[a] == c[b] {
                return false;
            }
            let adjacent = g.has_edge(c[a], c[b]);
            let consecutive = b == a + 1 || (a == 0 && b == 4);
            if adjacent != consecutive {
                return false;
            }
        }
    }
    true
}

/// In graphs of alpha index at most one, when `d(u, v) = r_u + r_v` and a
/// third disk around `w` meets both, every vertex of the slice
/// `S_{r_u}(u, v)` is within `r_w + 2` of `w` (with `r_w` minimal).
pub fn check_alpha1_thinness(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::Alpha1Thinness);
    }
    let n = g.n();
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for v in 0..n {
                let dv = d.row(v);
                let duv = du[v];
                for ru in 0..=duv {
                    let rv = duv - ru;
                    let members: Vec<usize> = (0..n)
                        .filter(|&x| du[x] == ru && du[x] + dv[x] == duv)
                        .collect();
                    for w in 0..n {
                        let dw = d.row(w);
                        let rw = dw[u].saturating_sub(ru).max(dw[v].saturating_sub(rv));
                        count += 1;
                        for &x in &members {
                            if dw[x] > rw + 2 {
                                fail = merge_fail(
                                    fail,
                                    Some(Fail {
                                        key: vec![u, v, ru as usize, w, x],
                                        witness: json!({
                                            "u": u, "v": v, "w": w,
                                            "radii": [ru, rv, rw],
                                            "x": x,
                                            "d_w_x": dw[x],
                                            "bound": rw + 2,
                                        }),
                                    }),
                                );
                            }
                        }
                    }
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::Alpha1Thinness, count, fail)
}

/// In graphs of alpha index at most one, two vertices whose disks both
/// meet the two ends of a tight pair (`d(u, v) = r_u + r_v`) are within
/// `r_a + r_b + 2` of each other (with `r_a, r_b` minimal).
pub fn check_close_balls(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::CloseBalls);
    }
    let n = g.n();
    let (count, fail) = (0..n)
        .into_par_iter()
        .map(|u| {
            let du = d.row(u);
            let mut count = 0u64;
            let mut fail: Option<Fail> = None;
            for v in 0..n {
                let dv = d.row(v);
                let duv = du[v];
                for ru in 0..=duv {
                    let rv = duv - ru;
                    for a in 0..n {
                        let ra = du[a].saturating_sub(ru).max(dv[a].saturating_sub(rv));
                        let da = d.row(a);
                        for b in 0..n {
                            let rb = du[b].saturating_sub(ru).max(dv[b].saturating_sub(rv));
                            count += 1;
                            if da[b] > ra + rb + 2 {
                                fail = merge_fail(
                                    fail,
                                    Some(Fail {
                                        key: vec![u, v, ru as usize, a, b],
                                        witness: json!({
                                            "u": u, "v": v, "a": a, "b": b,
                                            "radii": [ru, rv, ra, rb],
                                            "d_a_b": da[b],
                                            "bound": ra + rb + 2,
                                        }),
                                    }),
                                );
                            }
                        }
                    }
                }
            }
            (count, fail)
        })
        .reduce(|| (0, None), merge_part);
    finish(CheckId::CloseBalls, count, fail)
}

/// The equality characterization of shortest-path concatenations; asserted
/// on graphs of alpha index at most one, reported only elsewhere.
pub fn check_equality_case_report(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::EqualityCase);
    }
    let (ok, wit, count) = check_equality_case(g, d);
    if ok {
        CheckReport::pass(CheckId::EqualityCase, count)
    } else {
        let w = wit.unwrap();
        CheckReport::fail(
            CheckId::EqualityCase,
            count,
            json!({
                "x": w.x, "y": w.y, "v": w.v, "u": w.u,
                "equality_holds": w.equality_holds,
                "pair_exists": w.pair_exists,
            }),
        )
    }
}

/// Alpha index at most one holds exactly when all disks are convex and the
/// 9-vertex wheel obstruction does not embed isometrically.
pub fn check_charact(ctx: &GraphCtx) -> CheckReport {
    let alpha1 = ctx.alpha <= 1;
    let (characterized, reason) = alpha1_characterization(&ctx.graph, &ctx.dist);
    if alpha1 == characterized {
        CheckReport::pass(CheckId::Charact, 1)
    } else {
        let reason_json = match reason {
            Alpha1Reason::Satisfied => json!("characterization holds"),
            Alpha1Reason::NonConvexDisk(w) => json!({
                "non_convex_disk": {"center": w.center, "radius": w.radius, "triple": [w.a, w.b, w.c]}
            }),
            Alpha1Reason::ContainsW6pp(e) => json!({"w6pp_embedding": e.mapping}),
        };
        CheckReport::fail(
            CheckId::Charact,
            1,
            json!({
                "alpha_index": ctx.alpha,
                "characterization": characterized,
                "reason": reason_json,
                "alpha_witness": ctx.alpha_witness.map(|w| [w.u, w.v, w.w, w.x]),
            }),
        )
    }
}

/// All disks are convex exactly when no isometric cycle is longer than
/// five and every first slice is a clique.
pub fn check_convex_criterion(g: &Graph, d: &DistanceMatrix) -> CheckReport {
    let (convex, convex_wit) = all_disks_convex(g, d);
    let longest = max_isometric_cycle(g, d);
    let (cliques, clique_wit) = s1_slices_clique(g, d);
    let rhs = longest <= 5 && cliques;
    if convex == rhs {
        CheckReport::pass(CheckId::ConvexCriterion, 1)
    } else {
        CheckReport::fail(
            CheckId::ConvexCriterion,
            1,
            json!({
                "all_disks_convex": convex,
                "max_isometric_cycle": longest,
                "s1_slices_clique": cliques,
                "convexity_witness": convex_wit.map(|w| json!({
                    "center": w.center, "radius": w.radius, "triple": [w.a, w.b, w.c]
                })),
                "clique_witness": clique_wit.map(|w| json!([w.x, w.y, w.a, w.b])),
            }),
        )
    }
}

/// On graphs of alpha index at most one, a double BFS approximates the
/// diameter within two: from every start, the eccentricity of the
/// furthest vertex (smallest id on ties) is at least `diam - 2`.
pub fn check_diam_approx(g: &Graph, d: &DistanceMatrix, ecc: &Eccentricities, i: u32) -> CheckReport {
    if i > 1 {
        return CheckReport::skipped(CheckId::DiamApprox);
    }
    let n = g.n();
    let mut count = 0u64;
    for start in 0..n {
        count += 1;
        let ds = d.row(start);
        let far = (0..n).max_by_key(|&v| (ds[v], std::cmp::Reverse(v))).unwrap();
        if ecc.ecc[far] + 2 < ecc.diameter {
            return CheckReport::fail(
                CheckId::DiamApprox,
                count,
                json!({
                    "start": start,
                    "furthest": far,
                    "eccentricity": ecc.ecc[far],
                    "diameter": ecc.diameter,
                }),
            );
        }
    }
    CheckReport::pass(CheckId::DiamApprox, count)
}

/// The bow defect at the graph's own hyperbolicity is at most twice it.
pub fn check_bow(g: &Graph, d: &DistanceMatrix, delta: HalfInteger) -> CheckReport {
    let (mu, wit) = bow_defect(g, d, delta);
    if (mu as i64) <= delta.doubled() {
        CheckReport::pass(CheckId::Bow, 1)
    } else {
        let w = wit.unwrap();
        CheckReport::fail(
            CheckId::Bow,
            1,
            json!({
                "lambda_x2": delta.doubled(),
                "mu": mu,
                "bound": delta.doubled(),
                "chain": [w.u, w.v, w.w, w.x],
                "overlap": w.overlap,
            }),
        )
    }
}

/// The bow defect at threshold zero equals the alpha index.
pub fn check_bow_alpha(g: &Graph, d: &DistanceMatrix, i: u32) -> CheckReport {
    let (mu, wit) = bow_defect(g, d, HalfInteger::ZERO);
    if mu == i {
        CheckReport::pass(CheckId::BowAlpha, 1)
    } else {
        CheckReport::fail(
            CheckId::BowAlpha,
            1,
            json!({
                "bow_defect_at_zero": mu,
                "alpha_index": i,
                "chain": wit.map(|w| [w.u, w.v, w.w, w.x]),
            }),
        )
    }
}

fn hull_for_checks(ctx: &GraphCtx) -> Option<HullGraph> {
    if ctx.graph.n() > HULL_CHECK_MAX_N {
        return None;
    }
    injective_hull(&ctx.graph, &ctx.dist, DEFAULT_HULL_CAP).ok()
}

/// The injective hull has the same hyperbolicity as the graph. Runs on
/// small inputs whose hull fits the cap; skipped otherwise.
pub fn check_hull_hyp(ctx: &GraphCtx) -> CheckReport {
    let Some(h) = hull_for_checks(ctx) else {
        return CheckReport::skipped(CheckId::HullHyp);
    };
    let dh = DistanceMatrix::compute(&h.graph);
    let (delta_h, wit) = hyperbolicity(&h.graph, &dh);
    if delta_h == ctx.delta {
        CheckReport::pass(CheckId::HullHyp, 1)
    } else {
        CheckReport::fail(
            CheckId::HullHyp,
            1,
            json!({
                "hyperbolicity_x2": ctx.delta.doubled(),
                "hull_hyperbolicity_x2": delta_h.doubled(),
                "hull_size": h.graph.n(),
                "hull_quadruple": [wit.u, wit.v, wit.w, wit.x],
            }),
        )
    }
}

/// The injective hull is a Helly graph. Same gating as `hull-hyp`.
pub fn check_hull_helly(ctx: &GraphCtx) -> CheckReport {
    let Some(h) = hull_for_checks(ctx) else {
        return CheckReport::skipped(CheckId::HullHelly);
    };
    let dh = DistanceMatrix::compute(&h.graph);
    match is_helly(&h.graph, &dh) {
        Ok(true) => CheckReport::pass(CheckId::HullHelly, 1),
        Ok(false) => CheckReport::fail(
            CheckId::HullHelly,
            1,
            json!({"hull_size": h.graph.n(), "helly": false}),
        ),
        Err(_) => CheckReport::skipped(CheckId::HullHelly),
    }
}

/// Distances in the hull are controlled by distances to the original
/// vertices: for hull vertices `x, y`, `d(x, y)` is at most the largest
/// shortfall `max_v (d(x, v) - d(y, v))` over original `v` (floored at
/// zero). Same gating as `hull-hyp`.
pub fn check_hull_dist(ctx: &GraphCtx) -> CheckReport {
    let Some(h) = hull_for_checks(ctx) else {
        return CheckReport::skipped(CheckId::HullDist);
    };
    let dh = DistanceMatrix::compute(&h.graph);
    let hn = h.graph.n();
    let mut count = 0u64;
    for x in 0..hn {
        for y in 0..hn {
            count += 1;
            let lambda = h
                .original_to_hull
                .iter()
                .map(|&hv| dh.get(x, hv) as i64 - dh.get(y, hv) as i64)
                .max()
                .unwrap()
                .max(0) as u32;
            if dh.get(x, y) > lambda {
                return CheckReport::fail(
                    CheckId::HullDist,
                    count,
                    json!({
                        "x": x, "y": y,
                        "lambda": lambda,
                        "d_x_y": dh.get(x, y),
                        "hull_size": hn,
                    }),
                );
            }
        }
    }
    CheckReport::pass(CheckId::HullDist, count)
}

/// The graph is some `g_p(p)` under the canonical labeling and its whole
/// distance matrix matches the closed-form rules.
pub fn check_gp_distances(g: &Graph, d: &DistanceMatrix) -> CheckReport {
    let n = g.n();
    if n % 4 != 0 || n == 0 {
        return CheckReport::fail(
            CheckId::GpDistances,
            0,
            json!({"n": n, "reason": "vertex count is not 4p"}),
        );
    }
    let p = n / 4;
    let mut count = 0u64;
    for a in 0..n {
        for b in 0..n {
            count += 1;
            let expected = gp_expected_distance(p, a, b);
            if d.get(a, b) != expected {
                return CheckReport::fail(
                    CheckId::GpDistances,
                    count,
                    json!({
                        "p": p,
                        "pair": [a, b],
                        "distance": d.get(a, b),
                        "expected": expected,
                    }),
                );
            }
        }
    }
    CheckReport::pass(CheckId::GpDistances, count)
}

fn finish(id: CheckId, count: u64, fail: Option<Fail>) -> CheckReport {
    match fail {
        None => CheckReport::pass(id, count),
        Some(f) => CheckReport::fail(id, count, f.witness),
    }
}
