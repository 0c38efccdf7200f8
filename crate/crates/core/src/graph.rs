//! Simple undirected graphs on dense vertex indices `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closed_forms::PartiteSpec;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("a path needs at least 1 vertex")]
    EmptyPath,
}

/// An unordered vertex pair stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(GraphError::Loop(a)),
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    /// The endpoint that is not `w`, if `w` is an endpoint.
    pub fn other(&self, w: usize) -> Option<usize> {
        if w == self.u {
            Some(self.v)
        } else if w == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;
    fn try_from([a, b]: [usize; 2]) -> Result<Self, Self::Error> {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Loop-free, multi-edge-free undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            rows: (0..n).map(|_| VertexSet::new(n)).collect(),
            edge_count: 0,
        }
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyPath);
        }
        let mut g = Graph::new(n);
        for i in 0..n - 1 {
            g.insert_unchecked(i, i + 1);
        }
        Ok(g)
    }

    /// The path on `0..n` closed by the edge `{n-1, 0}`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let mut g = Graph::path(n)?;
        g.insert_unchecked(0, n - 1);
        Ok(g)
    }

    /// `K_{n_1,..,n_t}` with the vertices of each part numbered consecutively,
    /// parts in the order given by `spec`.
    pub fn complete_multipartite(spec: &PartiteSpec) -> Self {
        let n: usize = spec.parts().iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &size) in spec.parts().iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.insert_unchecked(u, v);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange { vertex: v, n: self.n() })
        }
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        let fresh = self.rows[u].insert(v);
        self.rows[v].insert(u);
        if fresh {
            self.edge_count += 1;
        }
        fresh
    }

    /// Inserts `{u, v}`. Idempotent: re-adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    /// `G + B`. Every edge of `B` must be a non-edge of `self`.
    pub fn with_added_edges(&self, extra: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for e in extra {
            g.check_vertex(e.v)?;
            if !g.insert_unchecked(e.u, e.v) {
                return Err(GraphError::EdgePresent(*e));
            }
        }
        Ok(g)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.rows[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    pub fn neighborhood(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `|N(v) ∩ set|`
    #[inline]
    pub fn neighbors_in(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_count(set)
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| Edge { u, v })
        })
    }

    /// `E(G^c)` in canonical order.
    pub fn complement_nonedges(&self) -> Vec<Edge> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2 - self.edge_count);
        for u in 0..n {
            for v in u + 1..n {
                if !self.rows[u].contains(v) {
                    out.push(Edge { u, v });
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n());
        for e in self.complement_nonedges() {
            g.insert_unchecked(e.u, e.v);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = VertexSet::new(n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}
