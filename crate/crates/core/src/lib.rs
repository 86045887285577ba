//! Exact `q`-series toolkit for extremal `c = 24k` partition functions.
//!
//! * [`series`]: truncated Laurent series over ℤ and ℤ[x].
//! * [`forms`]: Δ, E₄, j and Niemeier theta series.
//! * [`extremal`]: the one-parameter families `G_k(x)`.
//! * [`moonshine`]: decompositions into Monster irreducible dimensions.
//! * [`identity`]: parser and evaluator for coefficient identities.
//! * [`cli`]: the `xmoon` command line.

pub mod cli;
pub mod extremal;
pub mod forms;
pub mod identity;
pub mod moonshine;
pub mod series;

pub use extremal::{build_family, ExtremalError, ExtremalFamily};
pub use series::{IntPoly, IntSeries, LaurentSeries, PolySeries, QInt, SeriesError};
