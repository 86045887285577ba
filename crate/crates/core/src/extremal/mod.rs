//! Extremal partition functions for `c = 24k`.
//!
//! The product `∏_{i=1}^{k} (J + y_i)` with `y_i = 24 + x_i` equals
//! `Σ_{m=0}^{k} e_m J^{k−m}`, where `e_m` are the elementary symmetric
//! functions of the `y_i`. Since `J^{k−m}` starts at `q̄^{−(k−m)}` with
//! coefficient 1, requiring the coefficients of `q̄^{−(k−1)}, …, q̄^{−1}` to
//! vanish fixes `e_1, …, e_{k−1}` one at a time. The last parameter
//! `y_k = x + 24` stays free and determines `e_k` because `y_k` is a root of
//! `∏ (t − y_i)`.

mod roots;

use num_traits::{One, Zero};

use crate::forms::FormCatalog;
use crate::series::{IntPoly, IntSeries, PolySeries, QInt, SeriesError};

pub use roots::integer_roots;

/// Largest `k` accepted by [`build_family`].
pub const MAX_K: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtremalError {
    #[error("k must be in 1..={MAX_K}, got {0}")]
    InvalidK(u32),
    #[error("order must be at least 1, got {0}")]
    InvalidOrder(i64),
    #[error("eliminating the q̄^-{exponent} coefficient requires a non-integral division (solving for e_{index})")]
    NonIntegralSolve { index: u32, exponent: i64 },
    #[error("coefficient of q̄^{exponent} depends on x: {poly}")]
    XDependentCoefficient { exponent: i64, poly: IntPoly },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The one-parameter family `G_k(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalFamily {
    k: u32,
    series: PolySeries,
    g0_poly: IntPoly,
    symfuncs: Vec<IntPoly>,
    last_symfunc: IntPoly,
}

impl ExtremalFamily {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> i64 {
        self.series.order()
    }

    /// `G_k` with coefficients in `ℤ[x]`.
    pub fn series(&self) -> &PolySeries {
        &self.series
    }

    /// Coefficient of `q̄⁰` as a polynomial in `x`.
    pub fn g0_poly(&self) -> &IntPoly {
        &self.g0_poly
    }

    /// Solved `e_1, …, e_{k−1}`.
    pub fn symfuncs(&self) -> &[IntPoly] {
        &self.symfuncs
    }

    /// `e_k` as a polynomial in `x`.
    pub fn last_symfunc(&self) -> &IntPoly {
        &self.last_symfunc
    }

    /// Exact coefficient of `q̄ⁿ`.
    pub fn coefficient_poly(&self, n: i64) -> Result<IntPoly, ExtremalError> {
        Ok(self.series.coefficient(n)?)
    }

    /// Coefficient of `q̄ⁿ`, which must not depend on `x`.
    pub fn constant_coefficient(&self, n: i64) -> Result<QInt, ExtremalError> {
        let p = self.coefficient_poly(n)?;
        p.as_constant().ok_or(ExtremalError::XDependentCoefficient { exponent: n, poly: p })
    }

    /// Substitute an integer for `x`.
    pub fn specialize(&self, x: &QInt) -> IntSeries {
        self.series.map(|p| p.eval(x))
    }

    /// Number of admissible values for the `q⁰` coefficient: the `q²`
    /// coefficient plus one (the range `0..=g_2`).
    pub fn allowed_count(&self) -> Result<QInt, ExtremalError> {
        Ok(self.constant_coefficient(1)? + 1)
    }

    /// All integer `x` with `g0(x) = target`, largest first.
    pub fn solve_g0(&self, target: &QInt) -> Vec<QInt> {
        let shifted = &self.g0_poly - &IntPoly::from(target.clone());
        integer_roots(&shifted)
    }
}

/// Build `G_k(x)` up to internal order `order`.
pub fn build_family(k: u32, order: i64) -> Result<ExtremalFamily, ExtremalError> {
    build_family_with(&FormCatalog::new(), k, order)
}

/// [`build_family`] drawing powers of `J` from a shared catalog.
pub fn build_family_with(catalog: &FormCatalog, k: u32, order: i64) -> Result<ExtremalFamily, ExtremalError> {
    if !(1..=MAX_K).contains(&k) {
        return Err(ExtremalError::InvalidK(k));
    }
    if order < 1 {
        return Err(ExtremalError::InvalidOrder(order));
    }
    // powers[p] = J^p with ℤ[x] coefficients
    let powers: Vec<PolySeries> =
        (0..=k).map(|p| catalog.j_power(p, order).map(|c| IntPoly::from(c.clone()))).collect();
    let power_coeff = |p: u32, n: i64| -> Result<IntPoly, ExtremalError> { Ok(powers[p as usize].coefficient(n)?) };

    let mut e: Vec<IntPoly> = vec![IntPoly::one()];
    for m in 1..k {
        let exponent = -i64::from(k - m);
        let mut residual = IntPoly::zero();
        for (l, el) in e.iter().enumerate() {
            residual += &(el * &power_coeff(k - l as u32, exponent)?);
        }
        let pivot = power_coeff(k - m, exponent)?;
        let em =
            (-residual).div_exact(&pivot).ok_or(ExtremalError::NonIntegralSolve { index: m, exponent: -exponent })?;
        e.push(em);
    }

    // 0 = Σ_{m=0}^{k} (−1)^m e_m y^{k−m} at y = y_k
    let y = IntPoly::x_plus(24);
    let mut alt = IntPoly::zero();
    for (m, em) in e.iter().enumerate() {
        let term = em * &y.pow(k - m as u32);
        if m % 2 == 0 {
            alt += &term;
        } else {
            alt -= &term;
        }
    }
    let last = if k % 2 == 1 { alt } else { -alt };
    e.push(last);

    let mut series = PolySeries::zero(order);
    for (m, em) in e.iter().enumerate() {
        if em.is_zero() {
            continue;
        }
        series = series.add(&powers[k as usize - m].scale(em));
    }
    let g0_poly = series.coefficient(0)?;
    let last_symfunc = e.pop().expect("e_k");
    e.remove(0);
    Ok(ExtremalFamily { k, series, g0_poly, symfuncs: e, last_symfunc })
}
