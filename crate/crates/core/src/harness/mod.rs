//! Machine-checkable claims over graphs, run as suites over corpora.
//!
//! Every claim id maps to exactly one statement of the underlying theory;
//! the full id -> statement table is in the README. A claim whose
//! hypothesis does not apply to a subject reports `skipped-hypothesis`
//! (never a vacuous pass), and a claim cut off by a search ceiling
//! reports `skipped-ceiling`. Failures carry a witness.

pub mod claims;
pub mod corpus;
pub mod sweep;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bits::VertexSet;
use crate::dist::DistMatrix;
use crate::error::{Error, Result};
use crate::exec;
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::lp::{self, LpSolution};
use crate::resolve;
use crate::symmetry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedHypothesis,
    SkippedCeiling,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::SkippedHypothesis => "skipped-hypothesis",
            Status::SkippedCeiling => "skipped-ceiling",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Edge { u: usize, v: usize },
    Vertex { v: usize },
    VertexSet { vertices: Vec<usize> },
    ValuePair { left: String, right: String },
    Note { text: String },
}

/// Pass/fail record for one claim on one subject.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub claim: String,
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Named exact values used by the check, rendered as `p/q`.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
}

impl TheoremReport {
    pub fn new(claim: &str, subject: impl Into<String>) -> Self {
        TheoremReport {
            claim: claim.to_string(),
            subject: subject.into(),
            status: Status::Pass,
            witness: None,
            values: BTreeMap::new(),
        }
    }

    pub fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    pub fn fail(mut self, witness: Witness) -> Self {
        self.status = Status::Fail;
        self.witness = Some(witness);
        self
    }

    pub fn skip_hypothesis(mut self, reason: &str) -> Self {
        self.status = Status::SkippedHypothesis;
        self.witness = Some(Witness::Note {
            text: reason.to_string(),
        });
        self
    }

    pub fn skip_ceiling(mut self, reason: &str) -> Self {
        self.status = Status::SkippedCeiling;
        self.witness = Some(Witness::Note {
            text: reason.to_string(),
        });
        self
    }

    /// Marks the report failed unless `ok`, attaching the witness lazily.
    pub fn check(self, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok || self.status == Status::Fail {
            self
        } else {
            self.fail(witness())
        }
    }
}

/// Everything the claims need about one graph, computed once.
pub struct GraphCtx {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub dist: DistMatrix,
    pub l_rows: BTreeMap<(usize, usize), VertexSet>,
    pub l_min: usize,
    pub r_min: usize,
    pub ldim_f: LpSolution,
    pub dim_f: LpSolution,
    /// Exact local metric dimension; `None` above the search ceiling.
    pub ldim: Option<usize>,
    /// Vertex transitivity; `None` above the automorphism ceiling.
    pub transitive: Option<bool>,
}

impl GraphCtx {
    pub fn build(spec: &FamilySpec) -> Result<GraphCtx> {
        let graph = spec.build()?;
        let n = graph.num_vertices();
        if n < 2 {
            return Err(Error::BadFamily {
                family: spec.to_string(),
                reason: "corpus graphs need at least 2 vertices".into(),
            });
        }
        let dist = DistMatrix::compute(&graph)?;
        let l_rows = resolve::local_table(&graph, &dist);
        let l_min = l_rows.values().map(|s| s.len()).min().unwrap_or(0);
        let r_min = resolve::r_parameter(&dist);
        let ldim_f = lp::solve_cover(l_rows.values().cloned(), n)?;
        let dim_f = lp::dim_f_with(&graph, &dist)?;
        let ldim = resolve::integer_ldim(&graph, &dist).ok();
        let transitive = symmetry::is_vertex_transitive(&graph, &dist).ok();
        Ok(GraphCtx {
            spec: spec.clone(),
            graph,
            dist,
            l_rows,
            l_min,
            r_min,
            ldim_f,
            dim_f,
            ldim,
            transitive,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.num_vertices()
    }

    pub fn name(&self) -> String {
        self.spec.to_string()
    }
}

/// Per-corpus cache of graph contexts, keyed by canonical spec string.
pub struct SuiteCache {
    ctxs: BTreeMap<String, GraphCtx>,
}

impl SuiteCache {
    /// Builds contexts for every corpus entry plus all product operands.
    pub fn build(corpus: &[FamilySpec]) -> Result<SuiteCache> {
        let mut wanted: Vec<FamilySpec> = Vec::new();
        for spec in corpus {
            collect_specs(spec, &mut wanted);
        }
        wanted.sort_by_key(|s| s.to_string());
        wanted.dedup();
        let built = exec::map_slice(&wanted, GraphCtx::build);
        let mut ctxs = BTreeMap::new();
        for ctx in built {
            let ctx = ctx?;
            ctxs.insert(ctx.name(), ctx);
        }
        Ok(SuiteCache { ctxs })
    }

    pub fn get(&self, spec: &FamilySpec) -> &GraphCtx {
        &self.ctxs[&spec.to_string()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &GraphCtx> {
        self.ctxs.values()
    }
}

fn collect_specs(spec: &FamilySpec, out: &mut Vec<FamilySpec>) {
    out.push(spec.clone());
    match spec {
        FamilySpec::Join(a, b) | FamilySpec::Strong(a, b) | FamilySpec::Cartesian(a, b) => {
            collect_specs(a, out);
            collect_specs(b, out);
        }
        _ => {}
    }
}

/// What kind of subject a claim consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimScope {
    /// Every corpus graph.
    Graph,
    /// Corpus entries of the form strong(a, b).
    StrongPair,
    /// Corpus entries of the form cartesian(a, b).
    CartesianPair,
    /// Corpus entries of the form join(a, b).
    JoinPair,
    /// Runs once, on its own parameter set.
    Global,
}

pub struct ClaimInfo {
    pub id: &'static str,
    pub scope: ClaimScope,
    pub statement: &'static str,
}

/// Runs the cross product of claims and corpus subjects within ceilings.
/// Reports come back sorted by (claim, subject); rerunning a suite on the
/// same inputs yields identical reports.
pub fn run_suite(corpus: &[FamilySpec], claim_ids: &[String]) -> Result<Vec<TheoremReport>> {
    let cache = SuiteCache::build(corpus)?;
    run_suite_on(&cache, corpus, claim_ids)
}

/// Same as [`run_suite`] but reusing an already-built context cache.
pub fn run_suite_on(
    cache: &SuiteCache,
    corpus: &[FamilySpec],
    claim_ids: &[String],
) -> Result<Vec<TheoremReport>> {
    for id in claim_ids {
        if !claims::REGISTRY.iter().any(|c| c.id == id) {
            return Err(Error::parse(
                "claim list",
                format!("unknown claim id '{id}'"),
            ));
        }
    }

    enum Cell<'a> {
        Graph(&'a str, &'a GraphCtx),
        Pair(&'a str, &'a GraphCtx, &'a GraphCtx, &'a GraphCtx),
        Global(&'a str),
    }

    let mut cells: Vec<Cell> = Vec::new();
    for info in claims::REGISTRY.iter() {
        if !claim_ids.iter().any(|id| id == info.id) {
            continue;
        }
        match info.scope {
            ClaimScope::Graph => {
                for spec in corpus {
                    cells.push(Cell::Graph(info.id, cache.get(spec)));
                }
            }
            ClaimScope::StrongPair => {
                for spec in corpus {
                    if let FamilySpec::Strong(a, b) = spec {
                        cells.push(Cell::Pair(
                            info.id,
                            cache.get(a),
                            cache.get(b),
                            cache.get(spec),
                        ));
                    }
                }
            }
            ClaimScope::CartesianPair => {
                for spec in corpus {
                    if let FamilySpec::Cartesian(a, b) = spec {
                        cells.push(Cell::Pair(
                            info.id,
                            cache.get(a),
                            cache.get(b),
                            cache.get(spec),
                        ));
                    }
                }
            }
            ClaimScope::JoinPair => {
                for spec in corpus {
                    if let FamilySpec::Join(a, b) = spec {
                        cells.push(Cell::Pair(
                            info.id,
                            cache.get(a),
                            cache.get(b),
                            cache.get(spec),
                        ));
                    }
                }
            }
            ClaimScope::Global => cells.push(Cell::Global(info.id)),
        }
    }

    let mut reports = exec::map_slice(&cells, |cell| match cell {
        Cell::Graph(id, ctx) => claims::eval_graph_claim(id, ctx),
        Cell::Pair(id, a, b, prod) => claims::eval_pair_claim(id, a, b, prod),
        Cell::Global(id) => claims::eval_global_claim(id),
    });
    reports.sort_by(|a, b| (&a.claim, &a.subject).cmp(&(&b.claim, &b.subject)));
    Ok(reports)
}

pub fn all_claim_ids() -> Vec<String> {
    claims::REGISTRY.iter().map(|c| c.id.to_string()).collect()
}
