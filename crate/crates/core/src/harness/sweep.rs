//! Exhaustive check of "l(G) = n - 1 iff G is an odd cycle" over every
//! connected graph on up to 8 labeled vertices.
//!
//! Graphs are enumerated as edge bitmasks over the C(n,2) vertex pairs
//! (isomorphism-blind); disconnected masks are discarded by the first
//! BFS. The n = 8 level visits 2^28 masks, so the kernel runs on stack
//! arrays of u8 adjacency masks and the mask space is chunked across
//! threads.

use crate::error::{Error, Result};
use crate::exec;

pub const MAX_SWEEP_VERTICES: usize = 8;

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub n: usize,
    pub masks: u64,
    pub connected: u64,
    /// Edge masks violating the equivalence (capped at 8 entries).
    pub violations: Vec<u64>,
}

pub fn odd_cycle_l_sweep(n: usize) -> Result<SweepOutcome> {
    sweep_impl(n, true)
}

pub fn odd_cycle_l_sweep_seq(n: usize) -> Result<SweepOutcome> {
    sweep_impl(n, false)
}

fn sweep_impl(n: usize, parallel: bool) -> Result<SweepOutcome> {
    if !(2..=MAX_SWEEP_VERTICES).contains(&n) {
        return Err(Error::ceiling("odd_cycle_l_sweep", n, MAX_SWEEP_VERTICES));
    }
    let pairs: Vec<(u8, u8)> = (0..n as u8)
        .flat_map(|u| ((u + 1)..n as u8).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();

    let chunks: u64 = if parallel { 1024.min(total) } else { 1 };
    let per_chunk = total / chunks;
    let scan = |c: usize| -> (u64, Vec<u64>) {
        let lo = c as u64 * per_chunk;
        let hi = if c as u64 == chunks - 1 {
            total
        } else {
            lo + per_chunk
        };
        scan_range(n, &pairs, lo, hi)
    };
    let results = if parallel {
        exec::map_indices(chunks as usize, scan)
    } else {
        exec::map_indices_seq(chunks as usize, scan)
    };

    let mut connected = 0;
    let mut violations = Vec::new();
    for (conn, viol) in results {
        connected += conn;
        for mask in viol {
            if violations.len() < 8 {
                violations.push(mask);
            }
        }
    }
    Ok(SweepOutcome {
        n,
        masks: total,
        connected,
        violations,
    })
}

fn scan_range(n: usize, pairs: &[(u8, u8)], lo: u64, hi: u64) -> (u64, Vec<u64>) {
    let mut connected = 0u64;
    let mut violations = Vec::new();
    for mask in lo..hi {
        match check_mask(n, pairs, mask) {
            MaskResult::Disconnected => {}
            MaskResult::Holds => connected += 1,
            MaskResult::Violated => {
                connected += 1;
                if violations.len() < 8 {
                    violations.push(mask);
                }
            }
        }
    }
    (connected, violations)
}

enum MaskResult {
    Disconnected,
    Holds,
    Violated,
}

fn check_mask(n: usize, pairs: &[(u8, u8)], mask: u64) -> MaskResult {
    let mut adj = [0u8; MAX_SWEEP_VERTICES];
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (u, v) = pairs[i];
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let full: u8 = if n == 8 { 0xff } else { (1u8 << n) - 1 };

    let mut dist = [[0u8; MAX_SWEEP_VERTICES]; MAX_SWEEP_VERTICES];
    if bfs_all(n, &adj, full, &mut dist).is_none() {
        return MaskResult::Disconnected;
    }

    let odd_cycle = n % 2 == 1 && (0..n).all(|v| adj[v].count_ones() == 2);

    // l(G) = n - 1 iff odd cycle. For non-cycles an edge with at most
    // n - 2 resolving vertices settles it early.
    let mut l_min = usize::MAX;
    for u in 0..n {
        // only edges with v > u
        let mut row = adj[u] & !(((1u16 << (u + 1)) - 1) as u8);
        while row != 0 {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            let mut size = 0usize;
            for x in 0..n {
                if dist[x][u] != dist[x][v] {
                    size += 1;
                }
            }
            l_min = l_min.min(size);
            if !odd_cycle && l_min <= n - 2 {
                return MaskResult::Holds;
            }
        }
    }
    let lhs = l_min == n - 1;
    if lhs == odd_cycle {
        MaskResult::Holds
    } else {
        MaskResult::Violated
    }
}

fn bfs_all(
    n: usize,
    adj: &[u8; MAX_SWEEP_VERTICES],
    full: u8,
    dist: &mut [[u8; MAX_SWEEP_VERTICES]; MAX_SWEEP_VERTICES],
) -> Option<()> {
    for s in 0..n {
        let mut visited: u8 = 1 << s;
        let mut frontier = visited;
        let mut level = 0u8;
        while frontier != 0 {
            level += 1;
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            next &= !visited;
            let mut nf = next;
            while nf != 0 {
                let v = nf.trailing_zeros() as usize;
                nf &= nf - 1;
                dist[v][s] = level;
            }
            visited |= next;
            frontier = next;
        }
        if visited != full {
            return None;
        }
        dist[s][s] = 0;
    }
    Some(())
}
