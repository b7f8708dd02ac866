//! Simple undirected connected graphs with dense vertex ids, plus the
//! canonical edge-list text format.
//!
//! A [`Graph`] is immutable after construction and safe to share across
//! threads. Construction rejects self-loops, duplicate edges, out-of-range
//! ids, and disconnected inputs, so every downstream algorithm can assume a
//! valid metric space.

use std::collections::VecDeque;

use thiserror::Error;

/// Construction errors for programmatically built graphs.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("self-loop at vertex {u}")]
    SelfLoop { u: usize },
    #[error("duplicate edge {u} {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph is disconnected (vertex {unreachable} unreachable from 0)")]
    Disconnected { unreachable: usize },
}

/// Parse errors for the edge-list text format; every variant names the
/// input line it was detected on (1-based, counting comment lines).
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed header, expected \"n m\"")]
    MalformedHeader { line: usize },
    #[error("line {line}: header declares an empty graph")]
    EmptyGraph { line: usize },
    #[error("line {line}: malformed edge, expected \"u v\"")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex id {id} out of range (n = {n})")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {u}")]
    SelfLoop { line: usize, u: usize },
    #[error("line {line}: expected {expected} edges, found only {found}")]
    MissingEdges { line: usize, expected: usize, found: usize },
    #[error("line {line}: unexpected data after {expected} edges")]
    ExtraData { line: usize, expected: usize },
    #[error("line {line}: graph is disconnected (vertex {unreachable} unreachable from 0)")]
    Disconnected { line: usize, unreachable: usize },
}

/// An immutable simple undirected connected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order is deterministic and
/// adjacency tests are a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Validates and builds a graph from an edge list.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::VertexOutOfRange { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge {
                    u: u.min(v),
                    v: u.max(v),
                });
            }
        }
        let g = Graph {
            adj,
            m: edges.len(),
        };
        match g.first_unreachable() {
            None => Ok(g),
            Some(unreachable) => Err(GraphError::Disconnected { unreachable }),
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `u`.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    /// Edges in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Smallest vertex unreachable from 0, if any.
    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }
}

/// Parses the edge-list text format.
///
/// The format is UTF-8 with LF newlines: any number of comment lines
/// starting with `#`, a header line `n m`, then exactly `m` lines `u v`
/// with `0 <= u, v < n` and `u != v`. A trailing `\r` per line is
/// tolerated.
pub fn parse_graph(input: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None; // (n, m, header line)
    let mut adj: Vec<Vec<usize>> = Vec::new();
    let mut found = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let text = raw.strip_suffix('\r').unwrap_or(raw);
        if text.starts_with('#') {
            continue;
        }
        let mut it = text.split_ascii_whitespace();
        match header {
            None => {
                let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                    return Err(ParseError::MalformedHeader { line });
                };
                let n: usize = a
                    .parse()
                    .map_err(|_| ParseError::MalformedHeader { line })?;
                let m: usize = b
                    .parse()
                    .map_err(|_| ParseError::MalformedHeader { line })?;
                if n == 0 {
                    return Err(ParseError::EmptyGraph { line });
                }
                header = Some((n, m, line));
                adj = vec![Vec::new(); n];
            }
            Some((n, m, _)) => {
                if found == m {
                    return Err(ParseError::ExtraData { line, expected: m });
                }
                let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                    return Err(ParseError::MalformedEdge { line });
                };
                let u: usize = a.parse().map_err(|_| ParseError::MalformedEdge { line })?;
                let v: usize = b.parse().map_err(|_| ParseError::MalformedEdge { line })?;
                for id in [u, v] {
                    if id >= n {
                        return Err(ParseError::VertexOutOfRange { line, id, n });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, u });
                }
                if adj[u].contains(&v) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                adj[u].push(v);
                adj[v].push(u);
                found += 1;
            }
        }
    }

    let Some((_, m, header_line)) = header else {
        return Err(ParseError::MalformedHeader { line: last_line + 1 });
    };
    if found < m {
        return Err(ParseError::MissingEdges {
            line: last_line,
            expected: m,
            found,
        });
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let g = Graph { adj, m };
    match g.first_unreachable() {
        None => Ok(g),
        Some(unreachable) => Err(ParseError::Disconnected {
            line: header_line,
            unreachable,
        }),
    }
}

/// Writes the canonical edge-list form: header, then edges with `u < v` in
/// lexicographic order. `parse_graph(&write_graph(g))` reproduces `g`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_path() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parse_c4() {
        let g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_errors_name_lines() {
        assert_eq!(
            parse_graph("3 2\n0 1\n0 1\n"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(
            parse_graph("2 1\n0 0\n"),
            Err(ParseError::SelfLoop { line: 2, u: 0 })
        );
        assert_eq!(
            parse_graph("2 1\n0 5\n"),
            Err(ParseError::VertexOutOfRange { line: 2, id: 5, n: 2 })
        );
        assert_eq!(
            parse_graph("oops\n"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_graph("4 2\n0 1\n2 3\n"),
            Err(ParseError::Disconnected { line: 1, unreachable: 2 })
        );
        assert_eq!(
            parse_graph("3 2\n0 1\n"),
            Err(ParseError::MissingEdges { line: 2, expected: 2, found: 1 })
        );
    }

    #[test]
    fn comments_are_skipped_and_counted() {
        let g = parse_graph("# a comment\n3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(
            parse_graph("# c\n3 2\n0 1\n0 1\n"),
            Err(ParseError::DuplicateEdge { line: 4, u: 0, v: 1 })
        );
    }

    #[test]
    fn write_canonical() {
        let g = parse_graph("4 4\n3 0\n2 3\n1 0\n2 1\n").unwrap();
        assert_eq!(write_graph(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(write_graph(&single), "1 0\n");
    }

    #[test]
    fn roundtrip_identity() {
        let g = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        let again = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(g, again);
        assert_eq!(write_graph(&g), write_graph(&again));
    }

    #[test]
    fn new_rejects_invalid() {
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
        assert_eq!(
            Graph::new(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { u: 0 })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1)]),
            Err(GraphError::Disconnected { unreachable: 2 })
        );
        assert_eq!(
            Graph::new(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
    }
}
