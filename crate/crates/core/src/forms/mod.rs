//! Level-one modular objects as exact `q̄`-expansions: Δ, E₄, j and the
//! theta series of the Niemeier lattices.
//!
//! All `order` arguments are internal exponents (powers of `q̄ = q²`).

mod niemeier;

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::series::{IntSeries, QInt};

pub use niemeier::{catalog, catalog_csv, lookup, niemeier_theta, NiemeierRecord};

/// Constant term of the classical j-function.
pub const J_CONSTANT: i64 = 744;

/// `σ_p(n)` for `n = 0..=n_max` (with `σ_p(0) = 0`).
pub fn divisor_sums(power: u32, n_max: usize) -> Vec<QInt> {
    let mut sums = vec![QInt::zero(); n_max + 1];
    for d in 1..=n_max {
        let dp = QInt::from(d).pow(power);
        for m in (d..=n_max).step_by(d) {
            sums[m] += &dp;
        }
    }
    sums
}

/// `∏_{m≥1} (1 − q̄^m)^24` up to `order`, via the logarithmic-derivative
/// recurrence `n·f_n = −24 Σ_{k=1}^{n} σ₁(k) f_{n−k}`.
fn euler_product_pow24(order: i64) -> IntSeries {
    if order < 0 {
        return IntSeries::zero(order);
    }
    let n_max = order as usize;
    let sigma = divisor_sums(1, n_max);
    let mut f: Vec<QInt> = Vec::with_capacity(n_max + 1);
    f.push(QInt::one());
    for n in 1..=n_max {
        let mut s = QInt::zero();
        for k in 1..=n {
            s += &sigma[k] * &f[n - k];
        }
        let scaled: QInt = s * 24u32;
        f.push(-scaled / QInt::from(n));
    }
    IntSeries::from_dense(0, f, order)
}

/// Δ = η²⁴ = q̄ ∏(1 − q̄^m)²⁴.
pub fn delta(order: i64) -> IntSeries {
    euler_product_pow24(order - 1).shift(1)
}

/// E₄ = 1 + 240 Σ σ₃(n) q̄ⁿ.
pub fn eisenstein4(order: i64) -> IntSeries {
    if order < 0 {
        return IntSeries::zero(order);
    }
    let sigma = divisor_sums(3, order as usize);
    let dense: Vec<QInt> =
        sigma.into_iter().enumerate().map(|(n, s)| if n == 0 { QInt::one() } else { s * 240 }).collect();
    IntSeries::from_dense(0, dense, order)
}

/// Classical `j = E₄³/Δ = q̄⁻¹ + 744 + 196884 q̄ + …`.
pub fn j_classical(order: i64) -> IntSeries {
    // E₄³·Δ⁻¹ loses two orders relative to its inputs.
    let work = order + 2;
    let e4 = eisenstein4(work);
    let e4_cubed = e4.pow(3);
    let inv_delta = delta(work).invert(work).expect("Δ has unit leading coefficient");
    e4_cubed.mul(&inv_delta).truncate(order)
}

/// `J = j − 744`, the zero-constant-term normalization.
pub fn j_paper(order: i64) -> IntSeries {
    let shift = IntSeries::monomial(0, QInt::from(J_CONSTANT), order);
    j_classical(order).sub(&shift)
}

/// `J^m` up to `order`, uncached.
pub fn j_power(m: u32, order: i64) -> IntSeries {
    if m == 0 {
        return IntSeries::one(order);
    }
    // pow(J, m) has order J.order − (m − 1).
    let j = j_paper(order + i64::from(m) - 1);
    j.pow(m).truncate(order)
}

/// Shared memo for powers of `J`.
///
/// Safe for concurrent use; two threads racing on the same power may both
/// compute it, and either result is kept.
#[derive(Debug, Default)]
pub struct FormCatalog {
    j_cache: RwLock<Option<Arc<IntSeries>>>,
    powers: RwLock<HashMap<u32, Arc<IntSeries>>>,
}

impl FormCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn delta(&self, order: i64) -> IntSeries {
        delta(order)
    }

    pub fn eisenstein4(&self, order: i64) -> IntSeries {
        eisenstein4(order)
    }

    pub fn j_classical(&self, order: i64) -> IntSeries {
        j_classical(order)
    }

    pub fn j_paper(&self, order: i64) -> IntSeries {
        if let Some(cached) = self.j_cache.read().unwrap().as_ref() {
            if cached.order() >= order {
                return cached.truncate(order);
            }
        }
        let fresh = Arc::new(j_paper(order));
        let mut slot = self.j_cache.write().unwrap();
        if slot.as_ref().is_none_or(|s| s.order() < order) {
            *slot = Some(fresh.clone());
        }
        fresh.truncate(order)
    }

    pub fn j_power(&self, m: u32, order: i64) -> IntSeries {
        if m == 0 {
            return IntSeries::one(order);
        }
        if let Some(cached) = self.powers.read().unwrap().get(&m) {
            if cached.order() >= order {
                return cached.truncate(order);
            }
        }
        let j = self.j_paper(order + i64::from(m) - 1);
        let fresh = Arc::new(j.pow(m).truncate(order));
        let mut map = self.powers.write().unwrap();
        let keep = map.get(&m).is_none_or(|s| s.order() < order);
        if keep {
            map.insert(m, fresh.clone());
        }
        fresh.truncate(order)
    }
}
