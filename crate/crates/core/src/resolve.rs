//! Resolving neighborhoods and exact integer (local) metric dimension.
//!
//! `R(u, v)` is the set of vertices whose distances to `u` and `v` differ;
//! for an edge `uv` the same set is the local resolving neighborhood
//! `L(uv)`. The parameters `l(G)` and `r(G)` are the minimum sizes of
//! those sets over edges and over all vertex pairs respectively.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::dist::DistMatrix;
use crate::error::{Error, Result};
use crate::exec;
use crate::graph::Graph;

/// Search ceiling for the exhaustive integer dimension computations.
pub const MAX_SEARCH_VERTICES: usize = 24;

/// Vertices distinguishing u from v: {x : d(x,u) != d(x,v)}.
pub fn resolving_pair_set(d: &DistMatrix, u: usize, v: usize) -> VertexSet {
    debug_assert_ne!(u, v);
    let n = d.n();
    let mut set = VertexSet::empty(n);
    let (ru, rv) = (d.row(u), d.row(v));
    for x in 0..n {
        if ru[x] != rv[x] {
            set.insert(x);
        }
    }
    set
}

/// L(uv) for an edge; rejects non-edges.
pub fn local_resolving_neighborhood(
    g: &Graph,
    d: &DistMatrix,
    u: usize,
    v: usize,
) -> Result<VertexSet> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    Ok(resolving_pair_set(d, u, v))
}

/// The full edge -> L(uv) table, keyed by canonical `(min, max)` edges.
/// Per-edge computations fan out in parallel.
pub fn local_table(g: &Graph, d: &DistMatrix) -> BTreeMap<(usize, usize), VertexSet> {
    local_table_impl(g, d, true)
}

/// Sequential twin of [`local_table`].
pub fn local_table_seq(g: &Graph, d: &DistMatrix) -> BTreeMap<(usize, usize), VertexSet> {
    local_table_impl(g, d, false)
}

fn local_table_impl(
    g: &Graph,
    d: &DistMatrix,
    parallel: bool,
) -> BTreeMap<(usize, usize), VertexSet> {
    let edges = g.edges();
    let rows = if parallel {
        exec::map_slice(&edges, |&(u, v)| resolving_pair_set(d, u, v))
    } else {
        exec::map_slice_seq(&edges, |&(u, v)| resolving_pair_set(d, u, v))
    };
    edges.into_iter().zip(rows).collect()
}

/// All R(u, v) rows over unordered distinct pairs, canonical order.
pub fn pair_table(d: &DistMatrix) -> Vec<((usize, usize), VertexSet)> {
    let n = d.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let rows = exec::map_slice(&pairs, |&(u, v)| resolving_pair_set(d, u, v));
    pairs.into_iter().zip(rows).collect()
}

/// l(G) = min |L(uv)| over edges.
pub fn l_parameter(g: &Graph, d: &DistMatrix) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| resolving_pair_set(d, u, v).len())
        .min()
        .expect("graph with at least one edge")
}

/// r(G) = min |R(u, v)| over all distinct pairs (no sampling).
pub fn r_parameter(d: &DistMatrix) -> usize {
    let n = d.n();
    let mins = exec::map_indices(n, |u| {
        ((u + 1)..n)
            .map(|v| resolving_pair_set(d, u, v).len())
            .min()
            .unwrap_or(usize::MAX)
    });
    mins.into_iter().min().expect("at least two vertices")
}

/// True iff `w` meets L(e) for every edge e.
pub fn is_local_resolving_set(g: &Graph, d: &DistMatrix, w: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| resolving_pair_set(d, u, v).intersects(w))
}

/// Exact local metric dimension: minimum hitting set over {L(e)}.
pub fn integer_ldim(g: &Graph, d: &DistMatrix) -> Result<usize> {
    let n = g.num_vertices();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::ceiling("integer_ldim", n, MAX_SEARCH_VERTICES));
    }
    let rows: Vec<VertexSet> = local_table(g, d).into_values().collect();
    Ok(min_hitting_set(&rows, n))
}

/// Exact metric dimension: minimum hitting set over {R(u,v)}.
pub fn integer_dim(g: &Graph, d: &DistMatrix) -> Result<usize> {
    let n = g.num_vertices();
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::ceiling("integer_dim", n, MAX_SEARCH_VERTICES));
    }
    let rows: Vec<VertexSet> = pair_table(d).into_iter().map(|(_, s)| s).collect();
    Ok(min_hitting_set(&rows, n))
}

/// Iterative deepening over the target cardinality with dominance pruning.
/// Exact, not heuristic.
fn min_hitting_set(rows: &[VertexSet], n: usize) -> usize {
    let rows = reduce_rows(rows, n);
    if rows.is_empty() {
        return 0;
    }
    for k in 1..=n {
        if hits_within(&rows, k, &VertexSet::empty(n)) {
            return k;
        }
    }
    unreachable!("the full vertex set hits every nonempty row");
}

fn reduce_rows(rows: &[VertexSet], n: usize) -> Vec<VertexSet> {
    let mut sorted: Vec<VertexSet> = rows.to_vec();
    sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.words().cmp(b.words())));
    sorted.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sorted.len());
    for row in sorted {
        debug_assert!(!row.is_empty() || n == 0);
        if !kept.iter().any(|small| small.is_subset_of(&row)) {
            kept.push(row);
        }
    }
    kept
}

fn hits_within(rows: &[VertexSet], budget: usize, chosen: &VertexSet) -> bool {
    // Smallest still-uncovered row; every hitting set must meet it.
    let target = rows
        .iter()
        .filter(|r| !r.intersects(chosen))
        .min_by_key(|r| r.len());
    let Some(target) = target else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // Lower bound: pairwise-disjoint uncovered rows each cost one vertex.
    if disjoint_packing_bound(rows, chosen) > budget {
        return false;
    }
    let candidates: Vec<usize> = target.iter().collect();
    let coverage: Vec<VertexSet> = candidates
        .iter()
        .map(|&v| {
            let mut cov = VertexSet::empty(rows.len());
            for (i, r) in rows.iter().enumerate() {
                if !r.intersects(chosen) && r.contains(v) {
                    cov.insert(i);
                }
            }
            cov
        })
        .collect();
    for (i, &v) in candidates.iter().enumerate() {
        // Skip v when a sibling candidate strictly dominates its coverage
        // (first-index wins on ties).
        let dominated = coverage.iter().enumerate().any(|(j, cj)| {
            j != i && coverage[i].is_subset_of(cj) && (coverage[i] != *cj || j < i)
        });
        if dominated {
            continue;
        }
        let mut next = chosen.clone();
        next.insert(v);
        if hits_within(rows, budget - 1, &next) {
            return true;
        }
    }
    false
}

fn disjoint_packing_bound(rows: &[VertexSet], chosen: &VertexSet) -> usize {
    let Some(universe) = rows.first().map(|r| r.universe()) else {
        return 0;
    };
    let mut used = VertexSet::empty(universe);
    let mut count = 0;
    for r in rows {
        if !r.intersects(chosen) && !r.intersects(&used) {
            used.union_with(r);
            count += 1;
        }
    }
    count
}

/// Per-graph summary of the resolving structure.
#[derive(Debug, Clone, Serialize)]
pub struct ResolveReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub l: usize,
    pub r: usize,
    /// Edge -> sorted L(uv) members.
    pub l_table: BTreeMap<String, Vec<usize>>,
    /// Pair -> sorted R(u,v) members; populated on request.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_table: Option<BTreeMap<String, Vec<usize>>>,
}

impl ResolveReport {
    pub fn new(g: &Graph, d: &DistMatrix) -> ResolveReport {
        let table = local_table(g, d);
        let l = table.values().map(|s| s.len()).min().unwrap_or(0);
        ResolveReport {
            graph: g.label(),
            n: g.num_vertices(),
            m: g.num_edges(),
            l,
            r: r_parameter(d),
            l_table: table
                .into_iter()
                .map(|((u, v), s)| (format!("{u}-{v}"), s.to_vec()))
                .collect(),
            r_table: None,
        }
    }

    /// Attaches the full pair table.
    pub fn with_pairs(mut self, d: &DistMatrix) -> ResolveReport {
        self.r_table = Some(
            pair_table(d)
                .into_iter()
                .map(|((u, v), s)| (format!("{u}-{v}"), s.to_vec()))
                .collect(),
        );
        self
    }
}
