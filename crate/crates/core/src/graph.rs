//! Immutable simple undirected graphs with bitset adjacency rows.

use crate::bits::VertexSet;
use crate::error::{Error, Result};

/// Hard ceiling on the number of vertices accepted at build time.
pub const MAX_VERTICES: usize = 4096;

/// A finite simple undirected graph on dense indices `0..n`.
///
/// Adjacency is stored as one `VertexSet` row per vertex; the builder
/// guarantees symmetry and irreflexivity, and all operations treat the
/// graph as immutable afterwards, so it can be shared freely across
/// threads.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected with the offending pair.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Label used in reports: the assigned name or a `g{n}` placeholder.
    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| format!("g{}", self.n))
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// Vertices reachable from `start` by BFS.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        let mut visited = VertexSet::empty(self.n);
        visited.insert(start);
        let mut frontier = visited.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in frontier.iter() {
                next.union_with(&self.adj[v]);
            }
            next.subtract(&visited);
            visited.union_with(&next);
            frontier = next;
        }
        visited
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0).len() == self.n
    }

    /// Two unreachable vertices, if the graph is disconnected.
    pub fn connectivity_witness(&self) -> Option<(usize, usize)> {
        let seen = self.reachable_from(0);
        let missing = seen.complement().first()?;
        Some((0, missing))
    }

    /// BFS two-coloring over every component; true iff no odd cycle exists.
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for start in 0..self.n {
            if color[start] >= 0 {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if color[v] < 0 {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True twins: N[u] = N[v]. Equal closed neighborhoods force adjacency.
    pub fn true_twins(&self, u: usize, v: usize) -> bool {
        debug_assert_ne!(u, v);
        self.closed_neighborhood(u) == self.closed_neighborhood(v)
    }

    pub fn has_true_twin(&self, u: usize) -> bool {
        // A true twin of u must be one of its neighbors.
        self.adj[u].iter().any(|v| self.true_twins(u, v))
    }

    pub fn every_vertex_has_true_twin(&self) -> bool {
        (0..self.n).all(|u| self.has_true_twin(u))
    }

    /// Vertex deletion subgraph G - v with indices compacted.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::BadDeletion {
                v,
                reason: format!("index out of range for n = {}", self.n),
            });
        }
        if self.n == 1 {
            return Err(Error::BadDeletion {
                v,
                reason: "graph has a single vertex".into(),
            });
        }
        let remap = |w: usize| if w < v { w } else { w - 1 };
        let mut edges = Vec::new();
        for (u, w) in self.edges() {
            if u != v && w != v {
                edges.push((remap(u), remap(w)));
            }
        }
        Graph::build(self.n - 1, &edges)
    }

    /// Whether deleting `v` disconnects the graph (assumes `self` connected).
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        match self.delete_vertex(v) {
            Ok(g) => !g.is_connected(),
            Err(_) => true,
        }
    }

    /// Debug-time validation of the builder invariants.
    pub fn check_invariants(&self) {
        for u in 0..self.n {
            assert!(!self.adj[u].contains(u), "self-loop at {u}");
            for v in self.adj[u].iter() {
                assert!(self.adj[v].contains(u), "asymmetric edge ({u}, {v})");
            }
        }
    }
}
