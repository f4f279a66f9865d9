//! Shared test utilities: a deterministic RNG, random connected graphs,
//! and a brute-force LP oracle that is independent of the simplex path.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use fraclocdim::{Graph, VertexSet};

/// SplitMix64; fixed seeds keep every "random" test reproducible.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

/// Random connected graph: a random attachment tree plus extra edges.
pub fn random_connected_graph(rng: &mut Rng, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.below(v), v));
    }
    let percent = 15 + rng.below(55) as u64; // edge density varies per graph
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_u64() % 100 < percent {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges).expect("valid random graph")
}

// ---------------------------------------------------------------------------
// Brute-force covering-LP oracle
// ---------------------------------------------------------------------------
//
// min 1'x  s.t.  sum_{v in row} x_v >= 1,  x >= 0.
//
// The optimum sits at a vertex of the feasible polyhedron. Every vertex is
// determined by a support S (the zero constraints fix the rest) together
// with |S| tight rows whose square subsystem is nonsingular, so we
// enumerate the <= 2^n support patterns, and for each the row subsets of
// matching size, solving the small linear system by exact Gaussian
// elimination over i128 fractions. Completely independent of the simplex
// implementation.

pub type Frac = (i128, i128);

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn frac(num: i128, den: i128) -> Frac {
    assert!(den != 0);
    let sign = if den < 0 { -1 } else { 1 };
    let g = gcd(num, den).max(1);
    (sign * num / g, sign * den / g)
}

fn add(a: Frac, b: Frac) -> Frac {
    frac(a.0 * b.1 + b.0 * a.1, a.1 * b.1)
}

fn sub(a: Frac, b: Frac) -> Frac {
    add(a, (-b.0, b.1))
}

fn mul(a: Frac, b: Frac) -> Frac {
    frac(a.0 * b.0, a.1 * b.1)
}

fn div(a: Frac, b: Frac) -> Frac {
    assert!(b.0 != 0);
    frac(a.0 * b.1, a.1 * b.0)
}

fn cmp(a: Frac, b: Frac) -> std::cmp::Ordering {
    (a.0 * b.1).cmp(&(b.0 * a.1))
}

/// Solves the square system M x = 1 by Gaussian elimination.
/// Returns None when singular.
fn solve_square(m: &[Vec<u8>]) -> Option<Vec<Frac>> {
    let k = m.len();
    let mut a: Vec<Vec<Frac>> = m
        .iter()
        .map(|row| {
            let mut r: Vec<Frac> = row.iter().map(|&c| (c as i128, 1)).collect();
            r.push((1, 1));
            r
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r][col].0 != 0)?;
        a.swap(col, pivot);
        let p = a[col][col];
        for j in col..=k {
            a[col][j] = div(a[col][j], p);
        }
        for r in 0..k {
            if r != col && a[r][col].0 != 0 {
                let f = a[r][col];
                for j in col..=k {
                    a[r][j] = sub(a[r][j], mul(f, a[col][j]));
                }
            }
        }
    }
    Some((0..k).map(|r| a[r][k]).collect())
}

/// Exact optimum of the covering LP by vertex enumeration.
pub fn lp_oracle_min_cover(rows: &[VertexSet], n: usize) -> Frac {
    assert!(n <= 16, "oracle is meant for tiny instances");
    // A light deduplication pass of its own (plain subset logic).
    let mut reduced: Vec<Vec<usize>> = Vec::new();
    let mut sorted: Vec<&VertexSet> = rows.iter().collect();
    sorted.sort_by_key(|r| r.len());
    for row in sorted {
        let rv = row.to_vec();
        let dominated = reduced
            .iter()
            .any(|small| small.iter().all(|v| rv.contains(v)));
        if !dominated {
            reduced.push(rv);
        }
    }
    let m = reduced.len();
    let row_masks: Vec<u32> = reduced
        .iter()
        .map(|r| r.iter().fold(0u32, |acc, &v| acc | 1 << v))
        .collect();

    let mut best: Option<Frac> = None;
    for support in 0u32..(1 << n) {
        // Every row must touch the support, else no feasible point on it.
        if row_masks.iter().any(|&rm| rm & support == 0) {
            continue;
        }
        let vars: Vec<usize> = (0..n).filter(|&v| support >> v & 1 == 1).collect();
        let k = vars.len();
        if k == 0 || k > m {
            continue;
        }
        for_each_combination(m, k, &mut |tight: &[usize]| {
            let sys: Vec<Vec<u8>> = tight
                .iter()
                .map(|&r| {
                    vars.iter()
                        .map(|&v| (row_masks[r] >> v & 1) as u8)
                        .collect()
                })
                .collect();
            let Some(sol) = solve_square(&sys) else {
                return;
            };
            if sol.iter().any(|&x| x.0 < 0) {
                return;
            }
            // Check feasibility of the full point (zeros elsewhere).
            for &rm in &row_masks {
                let mut total = (0i128, 1i128);
                for (i, &v) in vars.iter().enumerate() {
                    if rm >> v & 1 == 1 {
                        total = add(total, sol[i]);
                    }
                }
                if cmp(total, (1, 1)) == std::cmp::Ordering::Less {
                    return;
                }
            }
            let value = sol.iter().fold((0, 1), |acc, &x| add(acc, x));
            best = Some(match best {
                Some(b) if cmp(b, value) != std::cmp::Ordering::Greater => b,
                _ => value,
            });
        });
    }
    best.expect("covering LP with nonempty rows is feasible")
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        if n - start < k - cur.len() {
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, f);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut Vec::new(), f);
}
