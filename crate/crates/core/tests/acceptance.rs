//! Acceptance suite. One test per criterion; each prints a `ACCEPTANCE`
//! line per sub-check (visible with `-- --nocapture`, or on failure).
//!
//! Criterion 1 pins every closed-form value exactly as published. Six of
//! those pins are not attainable: the published complete-multipartite
//! value (k - 1) and the fan values for n in {3, 4, 7} are contradicted
//! by the LP optimum, the independent brute-force oracle, and hand-built
//! dual certificates, all of which agree with each other. Those
//! sub-checks fail honestly and are inventoried in the README; the
//! remaining criteria pass.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use fraclocdim::dist::DistMatrix;
use fraclocdim::families::FamilySpec;
use fraclocdim::harness::{corpus::builtin_corpus, run_suite_on, sweep, Status, SuiteCache};
use fraclocdim::lp::{self, ratio, Rational};
use fraclocdim::resolve;

static CACHE: OnceLock<(Vec<FamilySpec>, SuiteCache)> = OnceLock::new();

fn cache() -> &'static (Vec<FamilySpec>, SuiteCache) {
    CACHE.get_or_init(|| {
        let corpus = builtin_corpus();
        let cache = SuiteCache::build(&corpus).expect("builtin corpus builds");
        (corpus, cache)
    })
}

fn claim_strings(ids: &[&str]) -> Vec<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

enum Quantity {
    LdimF,
    DimF,
}

fn solved(spec: &str, quantity: &Quantity) -> Rational {
    let (_, cache) = cache();
    let parsed = FamilySpec::parse(spec).expect("valid family string");
    match quantity {
        Quantity::LdimF => cache.get(&parsed).ldim_f.value.clone(),
        Quantity::DimF => cache.get(&parsed).dim_f.value.clone(),
    }
}

#[test]
fn criterion_1_closed_form_values() {
    use Quantity::*;
    let mut pins: Vec<(Quantity, String, Rational)> = vec![
        (LdimF, "petersen()".into(), ratio(5, 3)),
        (DimF, "petersen()".into(), ratio(5, 3)),
    ];
    for n in 3..=8i64 {
        pins.push((LdimF, format!("complete({n})"), ratio(n, 2)));
    }
    for n in [3i64, 5, 7, 9] {
        pins.push((LdimF, format!("cycle({n})"), ratio(n, n - 1)));
    }
    for n in [4i64, 6, 8] {
        pins.push((LdimF, format!("cycle({n})"), ratio(1, 1)));
    }
    pins.push((LdimF, "multipartite(2,3)".into(), ratio(1, 1)));
    pins.push((LdimF, "multipartite(2,2,2)".into(), ratio(2, 1)));
    pins.push((LdimF, "multipartite(2,3,4)".into(), ratio(2, 1)));
    pins.push((LdimF, "multipartite(2,2,3,3)".into(), ratio(3, 1)));
    pins.push((LdimF, "fan(3)".into(), ratio(2, 1)));
    for n in 4..=7i64 {
        pins.push((LdimF, format!("fan({n})"), ratio(n, 3)));
    }
    for (m, n) in [(3i64, 2), (4, 3), (5, 2)] {
        pins.push((LdimF, format!("lollipop({m},{n})"), ratio(m, 2)));
    }
    for n in 2..=4i64 {
        pins.push((DimF, format!("multipartite({n},{n})"), ratio(n, 1)));
    }
    for n in [4i64, 6, 8] {
        pins.push((DimF, format!("cycle({n})"), ratio(n, n - 2)));
    }
    pins.push((DimF, "hypercube(3)".into(), ratio(2, 1)));
    pins.push((LdimF, "hypercube(3)".into(), ratio(1, 1)));
    for (n, m) in [(2i64, 2i64), (2, 3), (3, 4)] {
        pins.push((
            LdimF,
            format!("strong(complete({n}),complete({m}))"),
            ratio(n * m, 2),
        ));
    }
    pins.push((LdimF, "cartesian(path(4),path(5))".into(), ratio(1, 1)));
    for n in [3i64, 5, 7] {
        pins.push((
            LdimF,
            format!("cartesian(complete(2),cycle({n}))"),
            ratio(n, n - 1),
        ));
    }
    for (g, n) in [("path(3)", 4i64), ("complete(3)", 5), ("cycle(4)", 5)] {
        pins.push((
            LdimF,
            format!("cartesian({g},complete({n}))"),
            ratio(n, 2),
        ));
    }
    for (k, n) in [(2i64, 3i64), (3, 3), (3, 5), (4, 4)] {
        pins.push((
            LdimF,
            format!("cartesian(complete({k}),complete({n}))"),
            ratio(n, 2),
        ));
    }

    let mut failures = Vec::new();
    for (quantity, spec, expect) in &pins {
        // K_{2,2} is not a corpus entry; solve it directly.
        let got = if spec == "multipartite(2,2)" {
            let g = FamilySpec::parse(spec).unwrap().build().unwrap();
            lp::dim_f(&g).unwrap().value
        } else {
            solved(spec, quantity)
        };
        let what = match quantity {
            Quantity::LdimF => "ldim_f",
            Quantity::DimF => "dim_f",
        };
        let ok = got == *expect;
        println!(
            "ACCEPTANCE C1 {what}({spec}) = {expect}: {}",
            if ok {
                "PASS".to_string()
            } else {
                format!("FAIL (exact optimum is {got})")
            }
        );
        if !ok {
            failures.push(format!("{what}({spec}): pinned {expect}, optimum {got}"));
        }
    }
    assert!(
        failures.is_empty(),
        "{} of {} closed-form pins are unattainable (published values \
         contradicted by the exact optimum; see README):\n  {}",
        failures.len(),
        pins.len(),
        failures.join("\n  ")
    );
}

#[test]
fn criterion_2_inequality_suite() {
    let (corpus, cache) = cache();
    let ids = claim_strings(&[
        "sec-2-bounds-chain",
        "sec-2-ldimf-le-dimf",
        "prop-2.9-upper-n-over-l",
        "cor-2.11-upper-half-n",
        "thm-2.14-lower-bound",
        "rem-2.8-r-le-l",
        "lem-2.2-twin-neighborhoods",
        "sec-1-bipartite-rows",
        "lem-2.12-cover-contains-row",
        "thm-2.13-odd-cycle-l",
    ]);
    let reports = run_suite_on(cache, corpus, &ids).unwrap();
    summarize("C2", &reports);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    assert!(failed.is_empty(), "inequality failures: {failed:?}");

    // Integer-dimension chain on every graph under the search ceiling.
    let mut checked = 0;
    for ctx in cache.iter() {
        let Some(ldim) = ctx.ldim else { continue };
        let dim = resolve::integer_dim(&ctx.graph, &ctx.dist).unwrap();
        assert!(
            (1..=dim).contains(&ldim),
            "{}: ldim {} vs dim {}",
            ctx.name(),
            ldim,
            dim
        );
        assert!(ctx.ldim_f.value <= ratio(ldim as i64, 1), "{}", ctx.name());
        checked += 1;
    }
    println!("ACCEPTANCE C2 integer chain 1 <= ldim <= dim on {checked} graphs: PASS");

    // Distance-matrix axioms, exhaustively over every corpus graph.
    for ctx in cache.iter() {
        let (g, d, n) = (&ctx.graph, &ctx.dist, ctx.n());
        for u in 0..n {
            assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                assert_eq!(d.get(u, v), d.get(v, u));
                assert_eq!(d.get(u, v) == 1, g.has_edge(u, v) && u != v);
                for w in 0..n {
                    assert!(
                        d.get(u, w) <= d.get(u, v) + d.get(v, w),
                        "triangle inequality fails on {}",
                        ctx.name()
                    );
                }
            }
        }
    }
    println!("ACCEPTANCE C2 distance axioms on every corpus graph: PASS");

    // Bipartiteness against an independent odd-closed-walk oracle for
    // n <= 12 (boolean adjacency powers).
    let mut walked = 0;
    for ctx in cache.iter() {
        let n = ctx.n();
        if n > 12 {
            continue;
        }
        let adj: Vec<Vec<bool>> = (0..n)
            .map(|u| (0..n).map(|v| ctx.graph.has_edge(u, v)).collect())
            .collect();
        let mut power = adj.clone();
        let mut odd_walk = false;
        for step in 1..=n {
            if step % 2 == 1 && (0..n).any(|v| power[v][v]) {
                odd_walk = true;
                break;
            }
            let mut next = vec![vec![false; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if power[i][k] {
                        for j in 0..n {
                            next[i][j] |= adj[k][j];
                        }
                    }
                }
            }
            power = next;
        }
        assert_eq!(ctx.graph.is_bipartite(), !odd_walk, "{}", ctx.name());
        walked += 1;
    }
    println!("ACCEPTANCE C2 bipartite vs odd-walk oracle on {walked} graphs: PASS");
}

#[test]
fn criterion_3_characterization_suite() {
    let (corpus, cache) = cache();
    let ids = claim_strings(&[
        "lem-2.1-bipartite-iff-one",
        "thm-2.3-half-n-characterization",
    ]);
    let reports = run_suite_on(cache, corpus, &ids).unwrap();
    summarize("C3", &reports);
    for r in &reports {
        assert_eq!(
            r.status,
            Status::Pass,
            "characterization must pass everywhere: {r:?}"
        );
    }

    for n in 3..=8 {
        let out = sweep::odd_cycle_l_sweep(n).unwrap();
        println!(
            "ACCEPTANCE C3 l = n-1 iff odd cycle, n = {n}: {} connected graphs, {} violations",
            out.connected,
            out.violations.len()
        );
        assert!(out.violations.is_empty(), "violations at n = {n}");
    }
}

// Criterion 4 (oracle equivalence and strong duality on every solve)
// lives in tests/lp_oracle.rs; the solver additionally asserts strong
// duality internally on every solve in this whole suite.

#[test]
fn criterion_5_product_lemma_suite() {
    let (corpus, cache) = cache();
    let ids = claim_strings(&[
        "rem-3.1-strong-distance",
        "rem-3.7-cartesian-distance",
        "lem-3.2-strong-layers",
        "lem-3.8-cartesian-exact",
    ]);
    let reports = run_suite_on(cache, corpus, &ids).unwrap();
    summarize("C5", &reports);
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "product lemma failed: {r:?}");
    }
    // Every strong and cartesian corpus pair must actually be covered.
    let subjects: BTreeSet<&str> = reports.iter().map(|r| r.subject.as_str()).collect();
    let product_count = corpus
        .iter()
        .filter(|s| matches!(s, FamilySpec::Strong(..) | FamilySpec::Cartesian(..)))
        .count();
    assert_eq!(subjects.len(), product_count);
}

#[test]
fn criterion_1_spot_check_against_fresh_solves() {
    // The cached values used by criterion 1 must match fresh end-to-end
    // solves (guards the cache itself).
    for spec in ["petersen()", "lollipop(4,3)", "cycle(9)"] {
        let g = FamilySpec::parse(spec).unwrap().build().unwrap();
        let d = DistMatrix::compute(&g).unwrap();
        let fresh = lp::ldim_f_with(&g, &d).unwrap().value;
        assert_eq!(fresh, solved(spec, &Quantity::LdimF), "{spec}");
    }
}

fn summarize(tag: &str, reports: &[fraclocdim::TheoremReport]) {
    let mut by_claim: std::collections::BTreeMap<&str, (usize, usize, usize)> =
        std::collections::BTreeMap::new();
    for r in reports {
        let e = by_claim.entry(r.claim.as_str()).or_default();
        match r.status {
            Status::Pass => e.0 += 1,
            Status::Fail => e.1 += 1,
            _ => e.2 += 1,
        }
    }
    for (claim, (pass, fail, skip)) in by_claim {
        let mut line = format!("ACCEPTANCE {tag} {claim}: {pass} pass");
        if fail > 0 {
            let _ = write!(line, ", {fail} FAIL");
        }
        if skip > 0 {
            let _ = write!(line, ", {skip} skipped");
        }
        println!("{line}");
    }
}
