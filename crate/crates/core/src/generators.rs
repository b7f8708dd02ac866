//! Deterministic constructors for every graph family the corpus uses, plus
//! seeded random families.
//!
//! All generators are pure functions of their parameters. Random families
//! use ChaCha8 seeded through `SeedableRng::seed_from_u64`, so a `(family,
//! params, seed)` triple always reproduces the same graph; the construction
//! procedures are spelled out in each function's documentation to keep the
//! corpora replayable.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family}: invalid parameter {param}={value}: {reason}")]
    InvalidParameter {
        family: &'static str,
        param: &'static str,
        value: i64,
        reason: &'static str,
    },
    #[error("family {family}: missing parameter {param}")]
    MissingParameter {
        family: &'static str,
        param: &'static str,
    },
}

fn invalid(
    family: &'static str,
    param: &'static str,
    value: usize,
    reason: &'static str,
) -> GenError {
    GenError::InvalidParameter {
        family,
        param,
        value: value as i64,
        reason,
    }
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, &edges).expect("generator must produce a valid connected graph")
}

/// Path on `n >= 1` vertices `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("path", "n", n, "need n >= 1"));
    }
    Ok(build(n, (1..n).map(|v| (v - 1, v)).collect()))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(invalid("cycle", "n", n, "need n >= 3"));
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((n - 1, 0));
    Ok(build(n, edges))
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("complete", "n", n, "need n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(build(n, edges))
}

/// Star on `n >= 1` vertices: center 0 adjacent to `1..n`.
pub fn star(n: usize) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("star", "n", n, "need n >= 1"));
    }
    Ok(build(n, (1..n).map(|v| (0, v)).collect()))
}

/// Hypercube of dimension `dim >= 0`; vertex ids are the bitmasks.
pub fn hypercube(dim: usize) -> Result<Graph, GenError> {
    if dim > 16 {
        return Err(invalid("hypercube", "dim", dim, "need dim <= 16"));
    }
    let n = 1usize << dim;
    let mut edges = Vec::new();
    for u in 0..n {
        for b in 0..dim {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

/// The `G_p` family (`p >= 1`): four groups of `p` vertices with ids
/// `w_i = i`, `x_i = p + i`, `y_i = 2p + i`, `z_i = 3p + i` and edges
///
/// * chains `y_i ~ y_{i+1}`, `z_i ~ z_{i+1}`;
/// * quadrilaterals `x_i ~ y_i`, `y_i ~ w_i`, `w_i ~ z_i`, `z_i ~ x_i`;
/// * forward links `w_i ~ y_{i+1}`, `w_i ~ z_{i+1}`;
/// * backward links `x_i ~ y_{i-1}`, `x_i ~ z_{i-1}`.
///
/// `g_p(1)` is a 4-cycle. These graphs have alpha index 2 yet contain
/// metric triangles with maximum side `p`.
pub fn g_p(p: usize) -> Result<Graph, GenError> {
    if p < 1 {
        return Err(invalid("g_p", "p", p, "need p >= 1"));
    }
    let w = |i: usize| i;
    let x = |i: usize| p + i;
    let y = |i: usize| 2 * p + i;
    let z = |i: usize| 3 * p + i;
    let mut edges = Vec::new();
    for i in 0..p - 1 {
        edges.push((y(i), y(i + 1)));
        edges.push((z(i), z(i + 1)));
    }
    for i in 0..p {
        edges.push((x(i), y(i)));
        edges.push((y(i), w(i)));
        edges.push((w(i), z(i)));
        edges.push((z(i), x(i)));
    }
    for i in 0..p - 1 {
        edges.push((w(i), y(i + 1)));
        edges.push((w(i), z(i + 1)));
    }
    for i in 1..p {
        edges.push((x(i), y(i - 1)));
        edges.push((x(i), z(i - 1)));
    }
    Ok(build(4 * p, edges))
}

/// Distinguished corner vertices `(u, x, v, w)` of [`triangular_grid`] and
/// [`ladder`]: `u = a_0`, `x = b_0`, `v = a_{last}`, `w = b_{last}`.
pub fn grid_corners(n_cols: usize) -> (usize, usize, usize, usize) {
    (0, n_cols, n_cols - 1, 2 * n_cols - 1)
}

/// Triangular 2-row grid with `n >= 2` columns: rows `a_0..a_{n-1}` (ids
/// `0..n`) and `b_0..b_{n-1}` (ids `n..2n`), rungs `a_j ~ b_j`, rails along
/// both rows, and diagonals `b_j ~ a_{j+1}`.
pub fn triangular_grid(n: usize) -> Result<Graph, GenError> {
    if n < 2 {
        return Err(invalid("triangular_grid", "n", n, "need n >= 2"));
    }
    let a = |j: usize| j;
    let b = |j: usize| n + j;
    let mut edges = Vec::new();
    for j in 0..n {
        edges.push((a(j), b(j)));
    }
    for j in 0..n - 1 {
        edges.push((a(j), a(j + 1)));
        edges.push((b(j), b(j + 1)));
        edges.push((b(j), a(j + 1)));
    }
    Ok(build(2 * n, edges))
}

/// Ladder of height `ell >= 1`: the plain 2 x (ell + 1) grid, rows
/// `a_0..a_ell` (ids `0..=ell`) and `b_0..b_ell` (ids `ell+1..=2ell+1`),
/// rungs and rails only.
pub fn ladder(ell: usize) -> Result<Graph, GenError> {
    if ell < 1 {
        return Err(invalid("ladder", "l", ell, "need l >= 1"));
    }
    let cols = ell + 1;
    let a = |j: usize| j;
    let b = |j: usize| cols + j;
    let mut edges = Vec::new();
    for j in 0..cols {
        edges.push((a(j), b(j)));
    }
    for j in 0..cols - 1 {
        edges.push((a(j), a(j + 1)));
        edges.push((b(j), b(j + 1)));
    }
    Ok(build(2 * cols, edges))
}

/// The 9-vertex obstruction `W_6^{++}`: a 6-wheel (rim `r_0..r_5` = ids
/// `0..6`, hub = id 6) plus a vertex `p` (id 7) adjacent to `r_1, r_2` and a
/// vertex `q` (id 8) adjacent to `r_3, r_4`.
pub fn w6pp() -> Graph {
    let mut edges = Vec::new();
    for j in 0..6 {
        edges.push((j, (j + 1) % 6));
        edges.push((j, 6));
    }
    edges.push((7, 1));
    edges.push((7, 2));
    edges.push((8, 3));
    edges.push((8, 4));
    build(9, edges)
}

/// Seeded random connected graph with exactly `m` edges.
///
/// Procedure: attach each vertex `v >= 1` to a uniform parent below it
/// (random recursive tree), then Fisher-Yates-shuffle the lexicographic
/// list of remaining non-edges and keep the first `m - (n - 1)`.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("random_connected", "n", n, "need n >= 1"));
    }
    let max_m = n * (n - 1) / 2;
    if m + 1 < n || m > max_m {
        return Err(invalid(
            "random_connected",
            "m",
            m,
            "need n - 1 <= m <= n (n - 1) / 2",
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut have = vec![false; n * n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
        have[u * n + v] = true;
    }
    let mut rest: Vec<(usize, usize)> = Vec::with_capacity(max_m - (n.saturating_sub(1)));
    for u in 0..n {
        for v in u + 1..n {
            if !have[u * n + v] {
                rest.push((u, v));
            }
        }
    }
    shuffle(&mut rest, &mut rng);
    edges.extend(rest.into_iter().take(m - (n - 1)));
    Ok(build(n, edges))
}

/// Seeded random tree on `n` vertices (random recursive tree: each vertex
/// `v >= 1` attaches to a uniform parent below it).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("random_tree", "n", n, "need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Ok(build(n, edges))
}

/// Seeded random chordal graph via reverse perfect elimination.
///
/// Each new vertex `v >= 1` picks a uniform anchor `u < v` and becomes
/// adjacent to a clique grown greedily from `u`: the anchor's existing
/// neighbors are scanned in ascending id order and each one that is
/// adjacent to everything picked so far joins with probability 1/2. The
/// reverse insertion order is a perfect elimination ordering.
pub fn random_chordal(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("random_chordal", "n", n, "need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        for &c in adj[u].clone().iter() {
            if c < v && clique.iter().all(|&q| q == c || adj[q].contains(&c)) && rng.gen_bool(0.5)
            {
                clique.push(c);
            }
        }
        for &c in &clique {
            edges.push((c, v));
            adj[c].push(v);
            adj[v].push(c);
        }
    }
    Ok(build(n, edges))
}

/// Seeded random block graph: cliques of 2 to 4 vertices repeatedly glued
/// onto a uniform existing cut vertex until `n` vertices exist (the last
/// clique is truncated to fit).
pub fn random_block(n: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 1 {
        return Err(invalid("random_block", "n", n, "need n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut count = 1usize;
    let mut edges = Vec::new();
    while count < n {
        let anchor = rng.gen_range(0..count);
        let size = (rng.gen_range(2..=4usize)).min(n - count + 1);
        let mut members = vec![anchor];
        for _ in 0..size - 1 {
            members.push(count);
            count += 1;
        }
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.push((members[i], members[j]));
            }
        }
    }
    Ok(build(n, edges))
}

fn shuffle<T>(items: &mut [T], rng: &mut ChaCha8Rng) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i);
        items.swap(i, j);
    }
}

/// Closed-form distance between vertices `a` and `b` of [`g_p`]`(p)`,
/// derived from the construction by induction on the column index:
///
/// 1. `d(y_i, y_j) = d(z_i, z_j) = |j - i|`;
/// 2. `d(y_i, z_i) = 2` and `d(y_i, z_j) = |j - i| + 1` for `i != j`;
/// 3. `d(x_i, y_j) = d(x_i, z_j) = 1 + j - i` if `j >= i`, else `i - j`;
/// 4. `d(w_i, y_j) = d(w_i, z_j) = 1 + i - j` if `j <= i`, else `j - i`;
/// 5. `d(x_i, x_j) = d(w_i, w_j) = |j - i| + 1` for `i != j`;
/// 6. `d(x_i, w_j) = j - i + 2` if `i <= j`, `d(x_i, w_{i-1}) = 2`, and
///    `d(x_i, w_j) = i - j` if `i > j + 1`.
pub fn gp_expected_distance(p: usize, a: usize, b: usize) -> u32 {
    // class 0 = W, 1 = X, 2 = Y, 3 = Z
    let (ca, ia) = (a / p, a % p);
    let (cb, ib) = (b / p, b % p);
    let (ca, ia, cb, ib) = if ca <= cb {
        (ca, ia, cb, ib)
    } else {
        (cb, ib, ca, ia)
    };
    let gap = ia.abs_diff(ib) as u32;
    let dist = match (ca, cb) {
        _ if a == b => 0,
        (0, 0) | (1, 1) => gap + 1,           // rule 5
        (2, 2) | (3, 3) => gap,               // rule 1
        (2, 3) => {
            if ia == ib {
                2
            } else {
                gap + 1                       // rule 2
            }
        }
        (1, 2) | (1, 3) => {
            // rule 3, x_{ia} against y/z_{ib}
            if ib >= ia {
                1 + gap
            } else {
                gap
            }
        }
        (0, 2) | (0, 3) => {
            // rule 4, w_{ia} against y/z_{ib}
            if ib <= ia {
                1 + gap
            } else {
                gap
            }
        }
        (0, 1) => {
            // rule 6, x_{ib} against w_{ia}
            let (xi, wj) = (ib, ia);
            if xi <= wj {
                (wj - xi) as u32 + 2
            } else if xi == wj + 1 {
                2
            } else {
                (xi - wj) as u32
            }
        }
        _ => unreachable!("class pairs are canonically ordered"),
    };
    dist
}

/// Dispatches a family by its CLI name with `k=v` parameters.
///
/// Family names and parameters: `path(n)`, `cycle(n)`, `complete(n)`,
/// `star(n)`, `hypercube(dim)`, `g_p(p)`, `triangular_grid(n)`,
/// `ladder(l)`, `w6pp()`, `random_connected(n, m)`, `random_chordal(n)`,
/// `random_tree(n)`, `random_block(n)`. Random families also consume the
/// seed.
pub fn generate(
    family: &str,
    params: &BTreeMap<String, usize>,
    seed: u64,
) -> Result<Graph, GenError> {
    let get = |family: &'static str, key: &'static str| -> Result<usize, GenError> {
        params
            .get(key)
            .copied()
            .ok_or(GenError::MissingParameter { family, param: key })
    };
    match family {
        "path" => path(get("path", "n")?),
        "cycle" => cycle(get("cycle", "n")?),
        "complete" => complete(get("complete", "n")?),
        "star" => star(get("star", "n")?),
        "hypercube" => hypercube(get("hypercube", "dim")?),
        "g_p" => g_p(get("g_p", "p")?),
        "triangular_grid" => triangular_grid(get("triangular_grid", "n")?),
        "ladder" => ladder(get("ladder", "l")?),
        "w6pp" => Ok(w6pp()),
        "random_connected" => random_connected(
            get("random_connected", "n")?,
            get("random_connected", "m")?,
            seed,
        ),
        "random_chordal" => random_chordal(get("random_chordal", "n")?, seed),
        "random_tree" => random_tree(get("random_tree", "n")?, seed),
        "random_block" => random_block(get("random_block", "n")?, seed),
        other => Err(GenError::UnknownFamily(other.to_string())),
    }
}
