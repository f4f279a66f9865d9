//! Report and table rendering. Output is byte-identical across runs for
//! the same inputs: corpus order is fixed, all maps are ordered, and no
//! timestamps appear in data rows.

use fraclocdim::harness::{SuiteCache, TheoremReport, Witness};
use fraclocdim::{FamilySpec, Result};

use crate::ReportFormat;

pub fn print_reports(reports: &[TheoremReport], format: ReportFormat) {
    match format {
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(reports).expect("reports serialize")
            );
        }
        ReportFormat::Csv => {
            println!("claim,subject,status,detail");
            for r in reports {
                println!(
                    "{},{},{},{}",
                    csv_field(&r.claim),
                    csv_field(&r.subject),
                    r.status,
                    csv_field(&detail(r)),
                );
            }
        }
        ReportFormat::Table => {
            let wc = reports.iter().map(|r| r.claim.len()).max().unwrap_or(5);
            let ws = reports.iter().map(|r| r.subject.len()).max().unwrap_or(7);
            for r in reports {
                println!(
                    "{:wc$}  {:ws$}  {:18}  {}",
                    r.claim,
                    r.subject,
                    r.status.to_string(),
                    detail(r),
                );
            }
        }
    }
}

fn detail(r: &TheoremReport) -> String {
    let mut parts = Vec::new();
    if let Some(witness) = &r.witness {
        parts.push(match witness {
            Witness::Edge { u, v } => format!("edge ({u}, {v})"),
            Witness::Vertex { v } => format!("vertex {v}"),
            Witness::VertexSet { vertices } => format!("set {vertices:?}"),
            Witness::ValuePair { left, right } => format!("{left} vs {right}"),
            Witness::Note { text } => text.clone(),
        });
    }
    for (k, v) in &r.values {
        parts.push(format!("{k}={v}"));
    }
    parts.join("; ")
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The corpus summary table:
/// graph,n,m,l,r,ldim,ldim_f,dim_f with exact fractions; `-` marks values
/// above their search ceiling. `--decimal` appends advisory float columns.
pub fn corpus_table(specs: &[FamilySpec], decimal: bool) -> Result<String> {
    let cache = SuiteCache::build(specs)?;
    let mut out = String::new();
    out.push_str("graph,n,m,l,r,ldim,ldim_f,dim_f");
    if decimal {
        out.push_str(",ldim_f_dec,dim_f_dec");
    }
    out.push('\n');
    for spec in specs {
        let ctx = cache.get(spec);
        let ldim = ctx
            .ldim
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}",
            csv_field(&ctx.name()),
            ctx.n(),
            ctx.graph.num_edges(),
            ctx.l_min,
            ctx.r_min,
            ldim,
            ctx.ldim_f.value,
            ctx.dim_f.value,
        ));
        if decimal {
            out.push_str(&format!(
                ",{:.6},{:.6}",
                fraclocdim::lp::rational_to_f64(&ctx.ldim_f.value),
                fraclocdim::lp::rational_to_f64(&ctx.dim_f.value)
            ));
        }
        out.push('\n');
    }
    Ok(out)
}
