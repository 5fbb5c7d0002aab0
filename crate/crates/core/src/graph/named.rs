//! Named graph families.

use super::{Graph, GraphError};
use serde::{Deserialize, Serialize};

/// The graph families the library knows how to build directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum NamedFamily {
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Cycle { q: usize },
    Petersen,
    TriangleReplacedPetersen,
    Hypercube { n: usize },
    Hamming { n: usize, q: usize },
    Johnson { n: usize, d: usize },
    /// K_{2,n} plus an extra vertex joined to the two vertices of the size-2
    /// part; at that vertex the distance profile is (1, 2, n).
    Theorem1Family { n: usize },
}

fn bad(family: &str, message: impl Into<String>) -> GraphError {
    GraphError::BadParameters {
        family: family.into(),
        message: message.into(),
    }
}

impl NamedFamily {
    pub fn build(self) -> Result<Graph, GraphError> {
        match self {
            NamedFamily::Complete { n } => {
                if n < 1 {
                    return Err(bad("complete", "need n >= 1"));
                }
                let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
                Graph::new(n, edges)
            }
            NamedFamily::CompleteBipartite { m, n } => {
                if m < 1 || n < 1 {
                    return Err(bad("complete_bipartite", "need m, n >= 1"));
                }
                let edges = (0..m).flat_map(|u| (0..n).map(move |v| (u, m + v)));
                Graph::new(m + n, edges)
            }
            NamedFamily::Cycle { q } => {
                if q < 3 {
                    return Err(bad("cycle", "need q >= 3"));
                }
                Graph::new(q, (0..q).map(|u| (u, (u + 1) % q)))
            }
            NamedFamily::Petersen => petersen(),
            NamedFamily::TriangleReplacedPetersen => {
                // Truncation: each vertex becomes a triangle with one port per
                // incident edge; original edges join the matching ports.
                let p = petersen()?;
                let mut edges = Vec::new();
                // port (v, j) -> 3v + j, j indexing v's sorted neighbor list
                let port = |g: &Graph, v: usize, w: usize| {
                    3 * v + g.neighbors(v).iter().position(|&x| x == w).unwrap()
                };
                for v in 0..p.vertex_count() {
                    edges.push((3 * v, 3 * v + 1));
                    edges.push((3 * v, 3 * v + 2));
                    edges.push((3 * v + 1, 3 * v + 2));
                }
                for (u, v) in p.edges() {
                    edges.push((port(&p, u, v), port(&p, v, u)));
                }
                Graph::new(30, edges)
            }
            NamedFamily::Hypercube { n } => {
                if n < 1 {
                    return Err(bad("hypercube", "need n >= 1"));
                }
                if n > 20 {
                    return Err(bad("hypercube", "n > 20 too large to build explicitly"));
                }
                let size = 1usize << n;
                let edges = (0..size)
                    .flat_map(|u| (0..n).map(move |b| (u, u ^ (1 << b))))
                    .filter(|&(u, v)| u < v);
                Graph::new(size, edges)
            }
            NamedFamily::Hamming { n, q } => {
                if n < 1 || q < 2 {
                    return Err(bad("hamming", "need n >= 1 and q >= 2"));
                }
                let size = q.checked_pow(n as u32).filter(|&s| s <= 1 << 22);
                let size = size.ok_or_else(|| bad("hamming", "q^n too large"))?;
                // vertices are base-q strings; adjacent iff Hamming distance 1
                let mut edges = Vec::new();
                for u in 0..size {
                    let mut place = 1;
                    for _ in 0..n {
                        let digit = (u / place) % q;
                        for other in 0..q {
                            if other != digit {
                                let v =
                                    (u as i64 + (other as i64 - digit as i64) * place as i64)
                                        as usize;
                                if u < v {
                                    edges.push((u, v));
                                }
                            }
                        }
                        place *= q;
                    }
                }
                Graph::new(size, edges)
            }
            NamedFamily::Johnson { n, d } => {
                if d < 1 || d > n.saturating_sub(1) {
                    return Err(bad("johnson", "need 1 <= d <= n-1"));
                }
                let subsets: Vec<u64> = k_subsets(n, d);
                if subsets.len() > 1 << 16 {
                    return Err(bad("johnson", "C(n,d) too large"));
                }
                let mut edges = Vec::new();
                for i in 0..subsets.len() {
                    for j in (i + 1)..subsets.len() {
                        if (subsets[i] & subsets[j]).count_ones() as usize == d - 1 {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(subsets.len(), edges)
            }
            NamedFamily::Theorem1Family { n } => {
                if n < 1 {
                    return Err(bad("theorem1_family", "need n >= 1"));
                }
                // vertices: 0 = x; 1,2 = size-2 part; 3..3+n = size-n part
                let mut edges = vec![(0, 1), (0, 2)];
                for v in 0..n {
                    edges.push((1, 3 + v));
                    edges.push((2, 3 + v));
                }
                Graph::new(n + 3, edges)
            }
        }
    }

    /// The distinguished base vertex of the family, where one exists.
    /// For theorem1_family this is the added vertex x.
    pub fn base_vertex(self) -> usize {
        0
    }

    /// Parse "name" or "name:p1,p2" specs, e.g. "petersen", "cycle:5",
    /// "hamming:3,2", "theorem1:5".
    pub fn parse(spec: &str) -> Result<NamedFamily, GraphError> {
        let (name, args) = match spec.split_once(':') {
            Some((name, rest)) => {
                let args: Result<Vec<usize>, _> =
                    rest.split(',').map(|p| p.trim().parse()).collect();
                let args = args.map_err(|_| bad(name, format!("bad parameters {rest:?}")))?;
                (name.trim(), args)
            }
            None => (spec.trim(), Vec::new()),
        };
        let want = |k: usize| {
            if args.len() == k {
                Ok(())
            } else {
                Err(bad(name, format!("takes {k} parameters, got {}", args.len())))
            }
        };
        Ok(match name {
            "petersen" => {
                want(0)?;
                NamedFamily::Petersen
            }
            "triangle-replaced-petersen" => {
                want(0)?;
                NamedFamily::TriangleReplacedPetersen
            }
            "complete" => {
                want(1)?;
                NamedFamily::Complete { n: args[0] }
            }
            "complete-bipartite" => {
                want(2)?;
                NamedFamily::CompleteBipartite {
                    m: args[0],
                    n: args[1],
                }
            }
            "cycle" => {
                want(1)?;
                NamedFamily::Cycle { q: args[0] }
            }
            "hypercube" => {
                want(1)?;
                NamedFamily::Hypercube { n: args[0] }
            }
            "hamming" => {
                want(2)?;
                NamedFamily::Hamming {
                    n: args[0],
                    q: args[1],
                }
            }
            "johnson" => {
                want(2)?;
                NamedFamily::Johnson {
                    n: args[0],
                    d: args[1],
                }
            }
            "theorem1" => {
                want(1)?;
                NamedFamily::Theorem1Family { n: args[0] }
            }
            other => return Err(bad(other, "unknown family name")),
        })
    }
}

fn petersen() -> Result<Graph, GraphError> {
    // outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, edges)
}

/// All d-subsets of {0..n} as bitmasks, in increasing numeric order.
fn k_subsets(n: usize, d: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur: u64 = (1 << d) - 1;
    let top: u64 = 1 << n;
    while cur < top {
        out.push(cur);
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        if r >= top || c == 0 {
            break;
        }
        cur = (((r ^ cur) >> 2) / c) | r;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!(NamedFamily::parse("petersen").unwrap(), NamedFamily::Petersen);
        assert_eq!(
            NamedFamily::parse("hamming:3,2").unwrap(),
            NamedFamily::Hamming { n: 3, q: 2 }
        );
        assert_eq!(
            NamedFamily::parse("theorem1:5").unwrap(),
            NamedFamily::Theorem1Family { n: 5 }
        );
        assert!(NamedFamily::parse("frucht").is_err());
        assert!(NamedFamily::parse("cycle:a").is_err());
        assert!(NamedFamily::parse("cycle:1,2").is_err());
    }

    #[test]
    fn cycle_and_complete() {
        let c5 = NamedFamily::Cycle { q: 5 }.build().unwrap();
        assert_eq!(c5.vertex_count(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.is_regular(), Some(2));
        assert!(NamedFamily::Cycle { q: 2 }.build().is_err());

        let k4 = NamedFamily::Complete { n: 4 }.build().unwrap();
        assert_eq!(k4.edge_count(), 6);
    }

    #[test]
    fn petersen_counts() {
        let p = NamedFamily::Petersen.build().unwrap();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(p.is_regular(), Some(3));
        assert_eq!(p.girth(), Some(5));
    }

    #[test]
    fn truncated_petersen_counts() {
        let g = NamedFamily::TriangleReplacedPetersen.build().unwrap();
        assert_eq!(g.vertex_count(), 30);
        assert_eq!(g.edge_count(), 45);
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.girth(), Some(3));
    }

    #[test]
    fn theorem1_family() {
        let g = NamedFamily::Theorem1Family { n: 5 }.build().unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.degree(0), 2);
    }

    #[test]
    fn hamming_matches_hypercube() {
        let h = NamedFamily::Hamming { n: 4, q: 2 }.build().unwrap();
        let q = NamedFamily::Hypercube { n: 4 }.build().unwrap();
        assert_eq!(h, q);
        let h23 = NamedFamily::Hamming { n: 2, q: 3 }.build().unwrap();
        assert_eq!(h23.vertex_count(), 9);
        assert_eq!(h23.is_regular(), Some(4));
    }

    #[test]
    fn johnson_counts() {
        let j = NamedFamily::Johnson { n: 5, d: 2 }.build().unwrap();
        assert_eq!(j.vertex_count(), 10);
        assert_eq!(j.is_regular(), Some(6));
        // J(21,3): 1330 vertices, degree 54
        let j213 = NamedFamily::Johnson { n: 21, d: 3 }.build().unwrap();
        assert_eq!(j213.vertex_count(), 1330);
        assert_eq!(j213.is_regular(), Some(54));
    }
}
