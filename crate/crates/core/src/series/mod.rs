//! Exact truncated Laurent series in one formal variable.
//!
//! The stored variable is `q̄ = q²`: an internal exponent `n` stands for
//! `q^{2n}`. Conversion to even q exponents happens only at the
//! serialization boundary (see [`json`]).

mod coeff;
pub mod json;
mod laurent;
mod poly;

pub use coeff::Coefficient;
pub use laurent::LaurentSeries;
pub use poly::IntPoly;

/// Arbitrary-precision integer coefficient.
pub type QInt = num_bigint::BigInt;

/// Series with integer coefficients.
pub type IntSeries = LaurentSeries<QInt>;

/// Series whose coefficients are polynomials in a free parameter.
pub type PolySeries = LaurentSeries<IntPoly>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("lowest coefficient is not a unit (±1); the inverse is not integral")]
    NonUnitLeadingCoefficient,
    #[error("cannot invert the zero series")]
    ZeroSeries,
    #[error("coefficient of q̄^{requested} requested but the series is only known up to q̄^{order}")]
    BeyondTruncation { requested: i64, order: i64 },
}
