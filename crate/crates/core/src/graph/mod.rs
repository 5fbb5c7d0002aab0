//! Simple undirected graphs: construction, Cartesian products, distance
//! analysis, and distance-regularity detection.

mod distance;
mod named;
mod regular;

pub use distance::{DistanceProfile, LcReport, PowerScanRow};
pub use named::NamedFamily;
pub use regular::{
    srg_bounds, srg_bounds_check, ArrayError, IntersectionArray, LcCertificate, SrgBounds,
    SrgParameters,
};

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid edge ({u},{v}): vertex ids must be < {n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0} not allowed")]
    Loop(usize),
    #[error("graph is disconnected: vertex {unreachable} unreachable from {from}")]
    Disconnected { from: usize, unreachable: usize },
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("invalid parameters for {family}: {message}")]
    BadParameters { family: String, message: String },
    #[error("graph parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple undirected graph on vertices 0..n. No loops, no multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

/// Serialization form: {"n": int, "edges": [[u,v],...]}.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges.iter().copied().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::new(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if u >= n || v >= n {
                return Err(GraphError::EdgeOutOfRange { u, v, n });
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &set {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn is_regular(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// All edges flipped; loops excluded.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).unwrap()
    }

    /// Cartesian product; vertex (u,v) of G x H maps to u*|H| + v.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let nh = other.n;
        let mut edges = Vec::with_capacity(self.edge_count() * nh + other.edge_count() * self.n);
        for (u, up) in self.edges() {
            for v in 0..nh {
                edges.push((u * nh + v, up * nh + v));
            }
        }
        for u in 0..self.n {
            for (v, vp) in other.edges() {
                edges.push((u * nh + v, u * nh + vp));
            }
        }
        Graph::new(self.n * nh, edges).unwrap()
    }

    /// Iterated Cartesian product, n >= 1.
    pub fn cartesian_power(&self, n: u32) -> Graph {
        assert!(n >= 1, "cartesian_power requires n >= 1");
        let mut g = self.clone();
        for _ in 1..n {
            g = g.cartesian_product(self);
        }
        g
    }

    /// The image of vertex x under the diagonal embedding into the n-th power
    /// built by `cartesian_power` (G^(n-1) x G at each step).
    pub fn diagonal_vertex(&self, x: usize, n: u32) -> usize {
        let mut id = x;
        for _ in 1..n {
            id = id * self.n + x;
        }
        id
    }

    /// Girth (length of shortest cycle), or None for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            // BFS from s tracking parents; a non-tree edge closes a cycle.
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cycle = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    /// Parse either JSON {"n":..,"edges":[[u,v],..]} or whitespace edge-list
    /// text whose first line is "n m".
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return serde_json::from_str(text).map_err(|e| GraphError::Parse {
                line: e.line(),
                message: e.to_string(),
            });
        }
        let mut lines = text.lines().enumerate().filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        });
        let (lineno, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let mut parts = header.split_whitespace();
        let n: usize = parse_field(&mut parts, lineno + 1, "vertex count n")?;
        let m: usize = parse_field(&mut parts, lineno + 1, "edge count m")?;
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let mut parts = line.split_whitespace();
            let u: usize = parse_field(&mut parts, lineno + 1, "endpoint u")?;
            let v: usize = parse_field(&mut parts, lineno + 1, "endpoint v")?;
            if u == v {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    message: format!("loop at vertex {u}"),
                });
            }
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line: lineno + 1,
                    message: format!("edge ({u},{v}) out of range for n = {n}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

fn parse_field<'a>(
    parts: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize, GraphError> {
    let tok = parts.next().ok_or_else(|| GraphError::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse().map_err(|e| GraphError::Parse {
        line,
        message: format!("bad {what} {tok:?}: {e}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::NamedFamily;

    #[test]
    fn basic_construction() {
        let g = Graph::new(3, [(0, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert!(matches!(
            Graph::new(2, [(0, 5)]),
            Err(GraphError::EdgeOutOfRange { .. })
        ));
    }

    #[test]
    fn product_k2_k2_is_c4() {
        let k2 = NamedFamily::Complete { n: 2 }.build().unwrap();
        let p = k2.cartesian_product(&k2);
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.is_regular(), Some(2));
        assert_eq!(p.girth(), Some(4));
    }

    #[test]
    fn product_degrees_add() {
        let g = NamedFamily::Cycle { q: 5 }.build().unwrap();
        let h = NamedFamily::Complete { n: 4 }.build().unwrap();
        let p = g.cartesian_product(&h);
        for u in 0..g.vertex_count() {
            for v in 0..h.vertex_count() {
                assert_eq!(p.degree(u * 4 + v), g.degree(u) + h.degree(v));
            }
        }
        // C5 x C5: 25 vertices, 50 edges
        let c55 = g.cartesian_product(&g);
        assert_eq!(c55.vertex_count(), 25);
        assert_eq!(c55.edge_count(), 50);
    }

    #[test]
    fn power_basics() {
        let k2 = NamedFamily::Complete { n: 2 }.build().unwrap();
        let q3 = k2.cartesian_power(3);
        assert_eq!(q3.vertex_count(), 8);
        assert_eq!(q3.is_regular(), Some(3));
        assert_eq!(k2.cartesian_power(1), k2);
        let k3 = NamedFamily::Complete { n: 3 }.build().unwrap();
        let h23 = k3.cartesian_power(2);
        assert_eq!(h23.vertex_count(), 9);
        assert_eq!(h23.is_regular(), Some(4));
    }

    #[test]
    fn complement_involution() {
        let g = NamedFamily::Petersen.build().unwrap();
        assert_eq!(g.complement().complement(), g);
        let k4 = NamedFamily::Complete { n: 4 }.build().unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        // complement of C5 is again a 5-cycle
        let c5 = NamedFamily::Cycle { q: 5 }.build().unwrap();
        let cc = c5.complement();
        assert_eq!(cc.vertex_count(), 5);
        assert_eq!(cc.is_regular(), Some(2));
        assert_eq!(cc.girth(), Some(5));
    }

    #[test]
    fn parse_edge_list_and_json() {
        let g = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
        let j = serde_json::to_string(&g).unwrap();
        let g2 = Graph::parse(&j).unwrap();
        assert_eq!(g, g2);

        let err = Graph::parse("3 2\n0 1\n1 9\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }), "{err}");
    }
}
