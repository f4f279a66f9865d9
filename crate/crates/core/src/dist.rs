//! All-pairs shortest-path hop distances via per-source BFS.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Dense n x n matrix of exact hop counts, computed once per graph.
#[derive(Clone, Debug)]
pub struct DistMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistMatrix {
    /// BFS from every vertex, sources fanned out in parallel.
    /// Fails on disconnected input, naming two unreachable vertices.
    pub fn compute(g: &Graph) -> Result<DistMatrix> {
        Self::compute_impl(g, true)
    }

    /// Sequential reference path; same contract as [`DistMatrix::compute`].
    pub fn compute_seq(g: &Graph) -> Result<DistMatrix> {
        Self::compute_impl(g, false)
    }

    fn compute_impl(g: &Graph, parallel: bool) -> Result<DistMatrix> {
        if let Some((u, v)) = g.connectivity_witness() {
            return Err(Error::Disconnected { u, v });
        }
        let n = g.num_vertices();
        let rows = if parallel {
            exec::map_indices(n, |s| bfs_row(g, s))
        } else {
            exec::map_indices_seq(n, |s| bfs_row(g, s))
        };
        let mut d = Vec::with_capacity(n * n);
        for row in rows {
            d.extend_from_slice(&row);
        }
        Ok(DistMatrix { n, d })
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Sorted copy of a distance row; equal rows are necessary for two
    /// vertices to lie in a common automorphism orbit.
    pub fn sorted_row(&self, u: usize) -> Vec<u32> {
        let mut r = self.row(u).to_vec();
        r.sort_unstable();
        r
    }
}

fn bfs_row(g: &Graph, source: usize) -> Vec<u32> {
    let n = g.num_vertices();
    let mut dist = vec![u32::MAX; n];
    dist[source] = 0;
    let mut visited = VertexSet::empty(n);
    visited.insert(source);
    let mut frontier = visited.clone();
    let mut level = 0u32;
    while !frontier.is_empty() {
        level += 1;
        let mut next = VertexSet::empty(n);
        for v in frontier.iter() {
            next.union_with(g.neighbors(v));
        }
        next.subtract(&visited);
        for v in next.iter() {
            dist[v] = level;
        }
        visited.union_with(&next);
        frontier = next;
    }
    dist
}
