//! Brute-force automorphism search and vertex orbits.
//!
//! Only the orbit partition is needed (to decide vertex-transitivity for
//! the `ldim_f = n / l` theorem), so instead of generating the group we
//! ask, pairwise against one representative per tentative class, whether
//! some adjacency-preserving bijection maps u to v.

use serde::Serialize;

use crate::dist::DistMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Search ceiling for the backtracking automorphism test.
pub const MAX_AUTOMORPHISM_VERTICES: usize = 64;

/// Orbit partition of the automorphism group action on vertices.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitPartition {
    /// Orbit id per vertex; ids are dense and ordered by first member.
    pub orbit_of: Vec<usize>,
    /// Members per orbit id.
    pub orbits: Vec<Vec<usize>>,
    pub transitive: bool,
}

/// True iff some automorphism maps u to v. Backtracking over vertices in
/// descending-degree order, pruned by degree and sorted distance-profile
/// compatibility.
pub fn exists_automorphism_mapping(
    g: &Graph,
    d: &DistMatrix,
    u: usize,
    v: usize,
) -> Result<bool> {
    let n = g.num_vertices();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::ceiling(
            "exists_automorphism_mapping",
            n,
            MAX_AUTOMORPHISM_VERTICES,
        ));
    }
    if u == v {
        return Ok(true);
    }
    Ok(Searcher::new(g, d).maps(u, v))
}

struct Searcher<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// profile_key[v] indexes into the deduplicated sorted-distance-row
    /// table; two vertices can correspond only if their keys match.
    profile_key: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph, d: &DistMatrix) -> Self {
        let n = g.num_vertices();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

        let mut profiles: Vec<Vec<u32>> = Vec::new();
        let mut profile_key = vec![0usize; n];
        for v in 0..n {
            let row = d.sorted_row(v);
            match profiles.iter().position(|p| *p == row) {
                Some(i) => profile_key[v] = i,
                None => {
                    profile_key[v] = profiles.len();
                    profiles.push(row);
                }
            }
        }
        Searcher {
            g,
            order,
            profile_key,
        }
    }

    fn maps(&self, u: usize, v: usize) -> bool {
        if self.profile_key[u] != self.profile_key[v] {
            return false;
        }
        let n = self.g.num_vertices();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        image[u] = v;
        used[v] = true;
        self.extend(0, &mut image, &mut used)
    }

    fn extend(&self, depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let w = self.order[depth];
        if image[w] != usize::MAX {
            return self.extend(depth + 1, image, used);
        }
        for x in 0..self.g.num_vertices() {
            if used[x] || !self.compatible(w, x, image) {
                continue;
            }
            image[w] = x;
            used[x] = true;
            if self.extend(depth + 1, image, used) {
                return true;
            }
            image[w] = usize::MAX;
            used[x] = false;
        }
        false
    }

    #[inline]
    fn compatible(&self, w: usize, x: usize, image: &[usize]) -> bool {
        if self.g.degree(w) != self.g.degree(x) || self.profile_key[w] != self.profile_key[x] {
            return false;
        }
        for (a, &fa) in image.iter().enumerate() {
            if fa != usize::MAX && self.g.has_edge(w, a) != self.g.has_edge(x, fa) {
                return false;
            }
        }
        true
    }
}

/// Groups vertices by automorphism reachability, testing each vertex
/// against one representative per tentative class.
pub fn orbits(g: &Graph, d: &DistMatrix) -> Result<OrbitPartition> {
    let n = g.num_vertices();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(Error::ceiling("orbits", n, MAX_AUTOMORPHISM_VERTICES));
    }
    let searcher = Searcher::new(g, d);
    let mut orbit_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let class = reps.iter().position(|&rep| searcher.maps(rep, v));
        match class {
            Some(i) => orbit_of[v] = i,
            None => {
                orbit_of[v] = reps.len();
                reps.push(v);
            }
        }
    }
    let mut members = vec![Vec::new(); reps.len()];
    for (v, &o) in orbit_of.iter().enumerate() {
        members[o].push(v);
    }
    Ok(OrbitPartition {
        transitive: members.len() == 1,
        orbit_of,
        orbits: members,
    })
}

pub fn is_vertex_transitive(g: &Graph, d: &DistMatrix) -> Result<bool> {
    Ok(orbits(g, d)?.transitive)
}
