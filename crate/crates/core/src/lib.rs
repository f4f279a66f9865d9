//! Exact computation of the fractional local metric dimension `ldim_f(G)`
//! and the fractional metric dimension `dim_f(G)` of finite connected
//! graphs, plus a harness that mechanically checks the theory's claims
//! over constructed families and products.
//!
//! Both dimensions are optima of covering LPs whose 0/1 rows are resolving
//! neighborhoods; everything is solved in exact rational arithmetic, so
//! closed forms like 5/3 or n/(n-1) are compared with zero tolerance.

#![allow(clippy::needless_range_loop)]

pub mod bits;
pub mod dist;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod harness;
pub mod io;
pub mod lp;
pub mod resolve;
pub mod symmetry;

pub use bits::VertexSet;
pub use dist::DistMatrix;
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::Graph;
pub use harness::{run_suite, Status, TheoremReport};
pub use lp::{dim_f, ldim_f, solve_lp, LinearProgram, LpSolution, Rational};
