//! Exact computation of p-Bernoulli numbers and machine checks of the
//! identities they satisfy.
//!
//! Everything is exact rational arithmetic: [`Rational`] scalars,
//! [`Polynomial`]s in `x`, and truncated [`LaurentSeries`] in `t`. The
//! [`harness`] module turns each identity into a [`Report`] of per-cell
//! comparisons.

pub mod error;
pub mod harness;
pub mod numerics;
pub mod pbernoulli;
pub mod poly;
pub mod series;
pub mod triangles;

pub use error::Error;
pub use harness::{Cell, Harness, Identity, Param, Report};
pub use numerics::{binomial, factorial, harmonic, ratio, Integer, Rational};
pub use pbernoulli::{
    bernoulli, egf_closed_form, iterated_integral, iterated_integral_unchecked,
    pbernoulli_explicit, pbernoulli_table, pbernoulli_via_stirling1, PBTable, Route,
};
pub use poly::Polynomial;
pub use series::{LaurentSeries, DEFAULT_ORDER};
pub use triangles::{geometric_poly, stirling1_unsigned, stirling2, Triangle, TriangleKind};
