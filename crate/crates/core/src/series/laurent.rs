use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coefficient, SeriesError};

/// Truncated Laurent series `Σ c_n q̄^n`, exact for `n ≤ order`.
///
/// Only nonzero coefficients are stored. A zero series keeps its `order`
/// and has no minimum exponent; its valuation is treated as `order + 1`,
/// which keeps the truncation rule for products sound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries<C> {
    coeffs: BTreeMap<i64, C>,
    order: i64,
}

impl<C: Coefficient> LaurentSeries<C> {
    pub fn zero(order: i64) -> Self {
        LaurentSeries { coeffs: BTreeMap::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, C::one(), order)
    }

    /// `c·q̄^exp`, known up to `order`.
    pub fn monomial(exp: i64, c: C, order: i64) -> Self {
        Self::from_terms([(exp, c)], order)
    }

    /// Builds a series from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed; terms beyond `order` are dropped.
    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I, order: i64) -> Self {
        let mut coeffs: BTreeMap<i64, C> = BTreeMap::new();
        for (e, c) in terms {
            if e > order {
                continue;
            }
            match coeffs.entry(e) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs, order }
    }

    /// Coefficients `dense[i]` at exponent `min_exp + i`.
    pub fn from_dense(min_exp: i64, dense: Vec<C>, order: i64) -> Self {
        let coeffs = dense
            .into_iter()
            .enumerate()
            .map(|(i, c)| (min_exp + i as i64, c))
            .filter(|(e, c)| *e <= order && !c.is_zero())
            .collect();
        LaurentSeries { coeffs, order }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient; `None` for the zero series.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Lower bound on the true valuation: `min_exp`, or `order + 1` when
    /// every known coefficient vanishes.
    pub fn valuation(&self) -> i64 {
        self.min_exp().unwrap_or(self.order + 1)
    }

    pub fn leading(&self) -> Option<(i64, &C)> {
        self.coeffs.iter().next().map(|(&e, c)| (e, c))
    }

    /// Exact coefficient of `q̄^n`.
    pub fn coefficient(&self, n: i64) -> Result<C, SeriesError> {
        if n > self.order {
            return Err(SeriesError::BeyondTruncation { requested: n, order: self.order });
        }
        Ok(self.coeffs.get(&n).cloned().unwrap_or_else(C::zero))
    }

    /// Stored nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        LaurentSeries { coeffs: self.coeffs.range(..=order).map(|(&e, c)| (e, c.clone())).collect(), order }
    }

    /// Multiply by `q̄^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries { coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(), order: self.order + k }
    }

    /// Apply a ring map to every coefficient.
    pub fn map<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> LaurentSeries<D> {
        let coeffs = self.coeffs.iter().map(|(&e, c)| (e, f(c))).filter(|(_, c)| !c.is_zero()).collect();
        LaurentSeries { coeffs, order: self.order }
    }

    pub fn scale(&self, s: &C) -> Self {
        self.map(|c| c.mul_ref(s))
    }

    /// Coefficient-wise sum, known up to the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs: BTreeMap<i64, C> = self.coeffs.range(..=order).map(|(&e, c)| (e, c.clone())).collect();
        for (&e, c) in other.coeffs.range(..=order) {
            let slot = coeffs.entry(e).or_insert_with(C::zero);
            *slot += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries { coeffs, order }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentSeries { coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(), order: self.order }
    }

    /// Order of a product: `min(a.order + val(b), b.order + val(a))`.
    fn product_order(&self, other: &Self) -> i64 {
        (self.order + other.valuation()).min(other.order + self.valuation())
    }

    /// Truncated Cauchy product (schoolbook convolution).
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.product_order(other);
        let (Some(lo_a), Some(lo_b)) = (self.min_exp(), other.min_exp()) else {
            return Self::zero(order);
        };
        let lo = lo_a + lo_b;
        if order < lo {
            return Self::zero(order);
        }
        let mut acc = vec![C::zero(); (order - lo + 1) as usize];
        for (&ea, ca) in self.coeffs.range(..=order - lo_b) {
            for (&eb, cb) in other.coeffs.range(..=order - ea) {
                acc[(ea + eb - lo) as usize] += &ca.mul_ref(cb);
            }
        }
        Self::from_dense(lo, acc, order)
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        if n == 0 {
            let order = if self.is_zero() { self.order } else { self.order - self.valuation() };
            return Self::one(order);
        }
        let mut base = self.clone();
        let mut result: Option<Self> = None;
        loop {
            if n & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base),
                });
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result.expect("n >= 1")
    }

    /// Multiplicative inverse up to `order` (clipped to what the input
    /// determines, `self.order - 2·min_exp`).
    pub fn invert(&self, order: i64) -> Result<Self, SeriesError> {
        let (v, u) = self.leading().ok_or(SeriesError::ZeroSeries)?;
        if !u.is_unit() {
            return Err(SeriesError::NonUnitLeadingCoefficient);
        }
        let target = order.min(self.order - 2 * v);
        let len = target + v + 1;
        if len <= 0 {
            return Ok(Self::zero(target));
        }
        let len = len as usize;
        // Normalized A(t) = Σ alpha_i t^i with alpha_0 = u; B = 1/A.
        let tail: Vec<(usize, &C)> =
            self.coeffs.range(v + 1..v + len as i64).map(|(&e, c)| ((e - v) as usize, c)).collect();
        let mut beta: Vec<C> = Vec::with_capacity(len);
        beta.push(u.clone());
        for n in 1..len {
            let mut s = C::zero();
            for &(i, a) in &tail {
                if i > n {
                    break;
                }
                s += &a.mul_ref(&beta[n - i]);
            }
            // u^{-1} = u for units of ℤ and ℤ[x]
            beta.push(-(s.mul_ref(u)));
        }
        Ok(Self::from_dense(-v, beta, target))
    }
}

impl<C: Coefficient> Add for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn add(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn sub(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn mul(self, rhs: Self) -> LaurentSeries<C> {
        LaurentSeries::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &LaurentSeries<C> {
    type Output = LaurentSeries<C>;
    fn neg(self) -> LaurentSeries<C> {
        LaurentSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::series::IntSeries;

    fn s(terms: &[(i64, i64)], order: i64) -> IntSeries {
        LaurentSeries::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))), order)
    }

    #[test]
    fn add_examples() {
        let a = s(&[(-1, 1), (0, 2)], 5);
        let b = s(&[(1, 1), (0, 3)], 5);
        assert_eq!(&a + &b, s(&[(-1, 1), (0, 5), (1, 1)], 5));
        assert_eq!(&a + &IntSeries::zero(5), a);

        let q = s(&[(1, 1)], 4);
        let z = &q - &q;
        assert!(z.is_zero());
        assert_eq!(z.order(), 4);
        assert_eq!(z.min_exp(), None);
    }

    #[test]
    fn add_takes_min_order() {
        let a = s(&[(0, 1), (3, 1)], 3);
        let b = s(&[(0, 1), (2, 7)], 2);
        let c = &a + &b;
        assert_eq!(c.order(), 2);
        assert_eq!(c.num_terms(), 2);
    }

    #[test]
    fn mul_examples() {
        let a = s(&[(-1, 1), (0, 2)], 10);
        let b = s(&[(1, 1), (0, 3)], 10);
        let p = &a * &b;
        assert_eq!(p.truncate(1), s(&[(-1, 3), (0, 7), (1, 2)], 1));
        // order = min(10 + 0, 10 - 1)
        assert_eq!(p.order(), 9);
        assert_eq!(&a * &IntSeries::one(20), a);
    }

    #[test]
    fn mul_by_zero_series_keeps_bounded_order() {
        let a = s(&[(-2, 1)], 3);
        let z = IntSeries::zero(5);
        let p = &a * &z;
        assert!(p.is_zero());
        // min(3 + val(z), 5 + val(a)) with val(z) = 6
        assert_eq!(p.order(), 3);
        assert_eq!((&z * &a).order(), 3);
    }

    #[test]
    fn pow_examples() {
        let a = s(&[(0, 1), (1, 1)], 6);
        assert_eq!(a.pow(0), IntSeries::one(6));
        assert_eq!(a.pow(2), s(&[(0, 1), (1, 2), (2, 1)], 6));
        let lead = s(&[(-1, 1), (1, 3)], 4);
        assert_eq!(lead.pow(3).order(), 4 - 2);
    }

    #[test]
    fn invert_geometric() {
        let a = s(&[(0, 1), (1, -1)], 8);
        let inv = a.invert(8).unwrap();
        assert_eq!(inv, s(&(0..=8).map(|e| (e, 1)).collect::<Vec<_>>(), 8));
    }

    #[test]
    fn invert_monomial() {
        let q = s(&[(1, 1)], 10);
        let inv = q.invert(5).unwrap();
        assert_eq!(inv, s(&[(-1, 1)], 5));
        assert_eq!(q.invert(100).unwrap().order(), 8);
    }

    #[test]
    fn invert_negative_unit() {
        let a = s(&[(0, -1), (2, 3)], 10);
        let inv = a.invert(10).unwrap();
        assert_eq!((&a * &inv).truncate(10), IntSeries::one(10));
    }

    #[test]
    fn invert_errors() {
        assert_eq!(s(&[(0, 2), (1, 1)], 5).invert(5), Err(SeriesError::NonUnitLeadingCoefficient));
        assert_eq!(IntSeries::zero(5).invert(5), Err(SeriesError::ZeroSeries));
    }

    #[test]
    fn coefficient_bounds() {
        let a = s(&[(-1, 1), (2, 9)], 3);
        assert_eq!(a.coefficient(-1).unwrap(), BigInt::from(1));
        assert_eq!(a.coefficient(0).unwrap(), BigInt::from(0));
        assert_eq!(a.coefficient(-7).unwrap(), BigInt::from(0));
        assert_eq!(a.coefficient(4), Err(SeriesError::BeyondTruncation { requested: 4, order: 3 }));
    }

    #[test]
    fn from_terms_drops_beyond_order() {
        let a = s(&[(0, 1), (5, 1)], 3);
        assert_eq!(a.num_terms(), 1);
    }
}
