//! Exact closures and minima of semi-algebraic subsets of the real line.
//!
//! Given a union of elementary sets `{p_1 > 0, ..., p_m > 0, q_1 = ... =
//! q_l = 0}` over `Q[t]`, this crate normalizes the description (square-free
//! pairwise-coprime inequalities with no root on the equality variety),
//! computes a symbolic description of the topological closure by relaxing
//! the strict inequalities of the normalized pieces, and extracts the exact
//! minimum of the closed set as an algebraic number.
//!
//! All arithmetic is exact: big-rational polynomial operations, Sturm-based
//! root isolation, and algebraic-number comparison. The `sem` module is an
//! independent interval-decomposition oracle used to referee the symbolic
//! pipeline, and `testkit` provides seeded generators and a numeric sampler
//! for multivariate image fixtures.

pub mod cli;
pub mod io;
pub mod opt;
pub mod poly;
pub mod roots;
pub mod sem;
pub mod semialg;
pub mod testkit;
