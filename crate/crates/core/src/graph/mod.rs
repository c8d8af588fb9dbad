//! Finite simple graphs, their exact spectra, and three-eigenvalue certificates.

mod certify;
mod spectrum;

pub use certify::{certify_three_ev, closed_walk3_check, GraphCertificate};
pub use spectrum::{distinct_spectrum, SpectrumError, SpectrumOutcome};

use std::collections::BTreeSet;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::refinement::QuotientMatrix;
use crate::Int;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    Duplicate(usize, usize),
    #[error("vertex {v} out of range for {n} vertices")]
    Range { v: usize, n: usize },
    #[error("invalid size: {0}")]
    Size(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<bool>>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            adj: vec![vec![false; n]; n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::Range { v: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::Duplicate(key.0, key.1));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
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

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v][u])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|x| **x).count()
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        (0..self.n).filter(|&w| self.adj[u][w] && self.adj[v][w]).count()
    }

    /// Twice the number of triangles through `v`, i.e. closed 3-walks at `v`.
    pub fn closed_walks3(&self, v: usize) -> usize {
        let nb: Vec<usize> = self.neighbours(v).collect();
        let mut tri = 0;
        for (a, &x) in nb.iter().enumerate() {
            tri += nb[a + 1..].iter().filter(|&&y| self.adj[x][y]).count();
        }
        2 * tri
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Text form: `n e` on the first line, then one `u v` per edge.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let nums = |line: usize, l: &str| -> Result<(usize, usize), GraphError> {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let bad = || GraphError::Parse {
                line,
                msg: format!("expected two non-negative integers, got {l:?}"),
            };
            if parts.len() != 2 {
                return Err(bad());
            }
            Ok((
                parts[0].parse().map_err(|_| bad())?,
                parts[1].parse().map_err(|_| bad())?,
            ))
        };
        let (line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing header".into(),
        })?;
        let (n, e) = nums(line, header)?;
        let mut g = Self::empty(n);
        let mut seen = 0;
        for (line, l) in lines {
            let (u, v) = nums(line, l)?;
            g.add_edge(u, v).map_err(|err| GraphError::Parse {
                line,
                msg: err.to_string(),
            })?;
            seen += 1;
        }
        if seen != e {
            return Err(GraphError::Parse {
                line,
                msg: format!("header announces {e} edges, found {seen}"),
            });
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// SHA-256 of the canonical text form.
    pub fn edges_hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_text().as_bytes()))
    }

    /// Vertex classes by increasing degree.
    pub fn valency_partition(&self) -> Vec<Vec<usize>> {
        let degrees: BTreeSet<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees
            .into_iter()
            .map(|d| (0..self.n).filter(|&v| self.degree(v) == d).collect())
            .collect()
    }

    /// Whether each vertex's neighbour count in every class depends only on
    /// its own class; the quotient matrix is returned when it does.
    pub fn is_equitable(&self, partition: &[Vec<usize>]) -> (bool, Option<QuotientMatrix>) {
        let mut entries = Vec::with_capacity(partition.len());
        for cell in partition {
            let counts = |v: usize| -> Vec<Int> {
                partition
                    .iter()
                    .map(|other| other.iter().filter(|&&u| self.adj[v][u]).count() as Int)
                    .collect()
            };
            let Some(&first) = cell.first() else {
                return (false, None);
            };
            let row = counts(first);
            if cell.iter().any(|&v| counts(v) != row) {
                return (false, None);
            }
            entries.push(row);
        }
        (true, Some(QuotientMatrix { entries }))
    }

    /// Greedy independent set, smallest remaining degree first.
    pub fn greedy_independent_set(&self) -> Vec<usize> {
        let mut alive = vec![true; self.n];
        let mut chosen = Vec::new();
        loop {
            let pick = (0..self.n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| (self.neighbours(v).filter(|&u| alive[u]).count(), v));
            let Some(v) = pick else { break };
            chosen.push(v);
            alive[v] = false;
            for u in self.neighbours(v) {
                alive[u] = false;
            }
        }
        chosen
    }
}

pub fn build_complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a < 1 || b < 1 {
        return Err(GraphError::Size(format!(
            "both sides must be non-empty, got a = {a}, b = {b}"
        )));
    }
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

pub fn build_complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("simple by construction")
}

pub fn build_path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("simple by construction")
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i ~ i + 5`.
pub fn build_petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("simple by construction")
}

/// Folded 5-cube: 4-bit words adjacent when they differ in one bit or in all four.
pub fn build_clebsch() -> Graph {
    let edges = (0..16usize).flat_map(|u| {
        (u + 1..16)
            .filter(move |v| matches!((u ^ v).count_ones(), 1 | 4))
            .map(move |v| (u, v))
    });
    Graph::from_edges(16, edges).expect("simple by construction")
}

/// `g` plus an apex adjacent to every vertex; the apex is the last vertex.
pub fn build_cone(g: &Graph) -> Graph {
    let n = g.vertex_count();
    Graph::from_edges(n + 1, g.edges().chain((0..n).map(|v| (v, n)))).expect("simple by construction")
}

/// Outer vertices `O_i = i`, inner `I_i = 7 + i`; the inner vertices form a
/// clique and `O_i ~ I_i, I_{i±1}, I_{i+3}`.
pub fn build_fano() -> Graph {
    let clique = (0..7).flat_map(|i| (i + 1..7).map(move |j| (7 + i, 7 + j)));
    let spokes = (0..7).flat_map(|i| [0, 1, 6, 3].map(|d| (i, 7 + (i + d) % 7)));
    Graph::from_edges(14, clique.chain(spokes)).expect("simple by construction")
}
