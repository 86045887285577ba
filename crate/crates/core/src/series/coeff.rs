use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg, SubAssign};

use num_traits::{One, Signed, Zero};

use super::{IntPoly, QInt};

/// A commutative coefficient ring for [`LaurentSeries`](super::LaurentSeries).
pub trait Coefficient:
    Clone
    + Eq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True for ±1. A unit `u` of these rings satisfies `u * u = 1`.
    fn is_unit(&self) -> bool;

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }
}

impl Coefficient for QInt {
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for IntPoly {
    fn is_unit(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_unit())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}
