//! Exact rational covering LPs and their optima.
//!
//! The fractional (local) metric dimension of a graph is the optimum of
//!
//! ```text
//!     minimize   sum_v x_v
//!     subject to sum_{v in row} x_v >= 1   for every resolving row
//!                0 <= x_v <= 1
//! ```
//!
//! with one 0/1 row per local resolving neighborhood L(uv) (or per pair
//! set R(u,v) for the non-local variant). The solver works on the dual
//! packing program
//!
//! ```text
//!     maximize   sum_r y_r
//!     subject to sum_{rows r containing v} y_r <= 1   for every vertex v
//!                y >= 0
//! ```
//!
//! by primal simplex from the all-zero basis with Bland's anti-cycling
//! pivot rule over exact rationals. The primal assignment is read off the
//! optimal tableau's slack reduced costs, and both primal feasibility and
//! strong duality are re-verified before anything is returned. The
//! explicit `x_v <= 1` bounds are dropped from the solved system: for a
//! 0/1 covering matrix any optimum can be clamped into the unit box
//! without losing feasibility, and the clamp is re-verified on return.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::bits::VertexSet;
use crate::dist::DistMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolve;

/// Exact arbitrary-precision fraction; always stored reduced with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Advisory float rendering of an exact value.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// A covering LP: unit costs, unit right-hand sides, 0/1 rows.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    rows: Vec<VertexSet>,
}

impl LinearProgram {
    /// Deduplicates the rows and drops dominated constraints (any row that
    /// contains another row is implied by it). Rows are kept in a canonical
    /// order: by cardinality, then by bit pattern.
    pub fn covering(rows: impl IntoIterator<Item = VertexSet>, num_vars: usize) -> Result<Self> {
        let mut rows: Vec<VertexSet> = rows.into_iter().collect();
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::EmptyRow { row: i });
            }
            debug_assert_eq!(row.universe(), num_vars);
        }
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.words().cmp(b.words())));
        rows.dedup();
        let mut kept: Vec<VertexSet> = Vec::with_capacity(rows.len());
        for row in rows {
            if !kept.iter().any(|small| small.is_subset_of(&row)) {
                kept.push(row);
            }
        }
        Ok(LinearProgram {
            num_vars,
            rows: kept,
        })
    }

    /// Keeps the rows exactly as given (deduplicated only). Used to check
    /// that dominance reduction never changes the optimum.
    pub fn covering_unreduced(
        rows: impl IntoIterator<Item = VertexSet>,
        num_vars: usize,
    ) -> Result<Self> {
        let mut rows: Vec<VertexSet> = rows.into_iter().collect();
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::EmptyRow { row: i });
            }
        }
        rows.sort_by(|a, b| a.words().cmp(b.words()));
        rows.dedup();
        Ok(LinearProgram { num_vars, rows })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// Plain-text export: one line per row listing vertex indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let items: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&items.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Exact optimum of a covering LP plus its certificate.
#[derive(Clone, Debug, Serialize)]
pub struct LpSolution {
    #[serde(serialize_with = "serialize_rational")]
    pub value: Rational,
    #[serde(serialize_with = "serialize_rationals")]
    pub assignment: Vec<Rational>,
    /// Indices of rows met with equality by the assignment.
    pub tight_rows: Vec<usize>,
}

fn serialize_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn serialize_rationals<S: serde::Serializer>(
    rs: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(rs.len()))?;
    for r in rs {
        seq.serialize_element(&r.to_string())?;
    }
    seq.end()
}

/// Solves the covering LP exactly. Panics if any internal self-check
/// (primal feasibility, bounds, strong duality) fails: that would be a
/// solver bug and must never be returned as a value.
pub fn solve_lp(lp: &LinearProgram) -> LpSolution {
    assert!(!lp.rows.is_empty(), "covering LP needs at least one row");
    let n = lp.num_vars;
    let m = lp.rows.len();

    // Dual tableau: one row per vertex constraint, columns are the m
    // structural packing variables followed by n slacks.
    let cols = m + n;
    let mut tableau: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            let mut row = vec![Rational::zero(); cols];
            for (j, lp_row) in lp.rows.iter().enumerate() {
                if lp_row.contains(v) {
                    row[j] = Rational::one();
                }
            }
            row[m + v] = Rational::one();
            row
        })
        .collect();
    let mut rhs = vec![Rational::one(); n];
    // zrow[j] = z_j - c_j; optimal when all entries are nonnegative.
    let mut zrow = vec![Rational::zero(); cols];
    for cell in zrow.iter_mut().take(m) {
        *cell = -Rational::one();
    }
    let mut objective = Rational::zero();
    let mut basis: Vec<usize> = (m..m + n).collect();

    // Bland: the entering variable is the lowest-index negative reduced
    // cost; optimal once none is left.
    while let Some(entering) = zrow.iter().position(|z| z.is_negative()) {
        // Ratio test; ties broken by the smallest basic variable index.
        let mut leaving: Option<(usize, Rational)> = None;
        for i in 0..n {
            if tableau[i][entering].is_positive() {
                let theta = &rhs[i] / &tableau[i][entering];
                match &leaving {
                    Some((best, best_theta)) => {
                        if theta < *best_theta
                            || (theta == *best_theta && basis[i] < basis[*best])
                        {
                            leaving = Some((i, theta));
                        }
                    }
                    None => leaving = Some((i, theta)),
                }
            }
        }
        let (pivot_row, _) = leaving.expect(
            "packing dual of a feasible covering LP is bounded; unbounded ray found",
        );

        // Normalize the pivot row, then eliminate the entering column.
        let pivot = tableau[pivot_row][entering].clone();
        for cell in tableau[pivot_row].iter_mut() {
            *cell /= &pivot;
        }
        rhs[pivot_row] /= &pivot;
        for i in 0..n {
            if i != pivot_row && !tableau[i][entering].is_zero() {
                let factor = tableau[i][entering].clone();
                for j in 0..cols {
                    let delta = &factor * &tableau[pivot_row][j];
                    tableau[i][j] -= delta;
                }
                let delta = &factor * &rhs[pivot_row];
                rhs[i] -= delta;
            }
        }
        let factor = zrow[entering].clone();
        for j in 0..cols {
            let delta = &factor * &tableau[pivot_row][j];
            zrow[j] -= delta;
        }
        objective -= &factor * &rhs[pivot_row];
        basis[pivot_row] = entering;
    }

    // The primal optimum is the vector of slack reduced costs.
    let assignment: Vec<Rational> = (0..n).map(|v| zrow[m + v].clone()).collect();
    finish_solution(lp, objective, assignment)
}

fn finish_solution(
    lp: &LinearProgram,
    dual_value: Rational,
    assignment: Vec<Rational>,
) -> LpSolution {
    let one = Rational::one();
    let clamped: Vec<Rational> = assignment
        .into_iter()
        .map(|x| if x > one { one.clone() } else { x })
        .collect();
    for (v, x) in clamped.iter().enumerate() {
        assert!(
            !x.is_negative() && *x <= one,
            "assignment out of [0, 1] at vertex {v}: {x}"
        );
    }
    let mut tight_rows = Vec::new();
    for (r, row) in lp.rows.iter().enumerate() {
        let sum: Rational = row.iter().map(|v| clamped[v].clone()).sum();
        assert!(
            sum >= one,
            "primal infeasible after solve: row {r} sums to {sum}"
        );
        if sum == one {
            tight_rows.push(r);
        }
    }
    let primal_value: Rational = clamped.iter().cloned().sum();
    assert_eq!(
        primal_value, dual_value,
        "strong duality violated: primal {primal_value} vs dual {dual_value}"
    );
    LpSolution {
        value: dual_value,
        assignment: clamped,
        tight_rows,
    }
}

/// Covering optimum over an arbitrary row family.
pub fn solve_cover(rows: impl IntoIterator<Item = VertexSet>, num_vars: usize) -> Result<LpSolution> {
    Ok(solve_lp(&LinearProgram::covering(rows, num_vars)?))
}

/// Fractional local metric dimension: the covering optimum over
/// {L(uv) : uv an edge}.
pub fn ldim_f(g: &Graph) -> Result<LpSolution> {
    let d = DistMatrix::compute(g)?;
    ldim_f_with(g, &d)
}

pub fn ldim_f_with(g: &Graph, d: &DistMatrix) -> Result<LpSolution> {
    solve_cover(resolve::local_table(g, d).into_values(), g.num_vertices())
}

/// Fractional metric dimension: the covering optimum over
/// {R(u,v) : u != v}.
pub fn dim_f(g: &Graph) -> Result<LpSolution> {
    let d = DistMatrix::compute(g)?;
    dim_f_with(g, &d)
}

pub fn dim_f_with(g: &Graph, d: &DistMatrix) -> Result<LpSolution> {
    solve_cover(
        resolve::pair_table(d).into_iter().map(|(_, s)| s),
        g.num_vertices(),
    )
}
