//! The builtin verification corpus: 42 base graphs plus 31 products and
//! joins, every one small enough for exact LP solves of both dimensions.
//! The list is ordered and fixed; suites and tables iterate it as-is.

use crate::families::FamilySpec;

pub fn builtin_corpus() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend((2..=8).map(FamilySpec::Path));
    out.extend((3..=9).map(FamilySpec::Cycle));
    out.extend((2..=8).map(FamilySpec::Complete));
    out.extend((3..=5).map(FamilySpec::Star));
    for parts in [
        vec![2, 3],
        vec![3, 3],
        vec![4, 4],
        vec![2, 2, 2],
        vec![2, 3, 4],
        vec![2, 2, 3, 3],
    ] {
        out.push(FamilySpec::CompleteMultipartite(parts));
    }
    out.extend((3..=7).map(FamilySpec::Fan));
    for (m, n) in [(3, 2), (4, 3), (5, 2)] {
        out.push(FamilySpec::Lollipop(m, n));
    }
    out.extend((2..=4).map(FamilySpec::Hypercube));
    out.push(FamilySpec::Petersen);

    for (a, b) in [
        (FamilySpec::Complete(2), FamilySpec::Complete(2)),
        (FamilySpec::Complete(2), FamilySpec::Complete(3)),
        (FamilySpec::Complete(3), FamilySpec::Complete(4)),
        (FamilySpec::Path(2), FamilySpec::Path(3)),
        (FamilySpec::Cycle(5), FamilySpec::Complete(2)),
        (FamilySpec::Cycle(4), FamilySpec::Complete(2)),
        (FamilySpec::Path(3), FamilySpec::Path(3)),
        (FamilySpec::Path(4), FamilySpec::Cycle(5)),
        (FamilySpec::Complete(3), FamilySpec::Path(6)),
        (FamilySpec::Petersen, FamilySpec::Complete(2)),
    ] {
        out.push(FamilySpec::Strong(Box::new(a), Box::new(b)));
    }

    for (a, b) in [
        (FamilySpec::Complete(2), FamilySpec::Complete(2)),
        (FamilySpec::Path(4), FamilySpec::Path(5)),
        (FamilySpec::Complete(2), FamilySpec::Cycle(3)),
        (FamilySpec::Complete(2), FamilySpec::Cycle(5)),
        (FamilySpec::Complete(2), FamilySpec::Cycle(7)),
        (FamilySpec::Path(3), FamilySpec::Complete(4)),
        (FamilySpec::Complete(3), FamilySpec::Complete(5)),
        (FamilySpec::Cycle(4), FamilySpec::Complete(5)),
        (FamilySpec::Complete(2), FamilySpec::Complete(3)),
        (FamilySpec::Complete(3), FamilySpec::Complete(3)),
        (FamilySpec::Complete(4), FamilySpec::Complete(4)),
        (FamilySpec::Cycle(6), FamilySpec::Complete(2)),
        (FamilySpec::Path(5), FamilySpec::Path(6)),
        (FamilySpec::Petersen, FamilySpec::Complete(2)),
        (FamilySpec::Cycle(5), FamilySpec::Cycle(5)),
    ] {
        out.push(FamilySpec::Cartesian(Box::new(a), Box::new(b)));
    }

    for (a, b) in [
        (FamilySpec::Complete(2), FamilySpec::Complete(2)),
        (FamilySpec::Complete(3), FamilySpec::Complete(4)),
        (FamilySpec::Cycle(4), FamilySpec::Cycle(4)),
        (
            FamilySpec::Strong(
                Box::new(FamilySpec::Complete(2)),
                Box::new(FamilySpec::Complete(2)),
            ),
            FamilySpec::Complete(2),
        ),
    ] {
        out.push(FamilySpec::Join(Box::new(a), Box::new(b)));
    }

    out.push(FamilySpec::GeneralizedLex(
        Box::new(FamilySpec::Path(3)),
        vec![
            FamilySpec::Complete(2),
            FamilySpec::Complete(2),
            FamilySpec::Complete(2),
        ],
    ));
    out.push(FamilySpec::GeneralizedLex(
        Box::new(FamilySpec::Cycle(4)),
        vec![
            FamilySpec::Complete(2),
            FamilySpec::Complete(3),
            FamilySpec::Complete(2),
            FamilySpec::Complete(3),
        ],
    ));

    out
}

/// Corpus entries from a text file: one family string per line,
/// `#` comments and blank lines ignored.
pub fn parse_corpus(text: &str) -> crate::error::Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(FamilySpec::parse(line)?);
    }
    Ok(out)
}
