use alloc::string::String;
use core::fmt::Debug;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exact coefficient field: the rationals or the Gaussian rationals.
///
/// Arithmetic goes through `&self` methods (`plus`, `times`, ...) so that
/// generic kernels do not have to spell out operator bounds on references.
pub trait Field: Clone + PartialEq + Eq + Debug + Zero + One + Send + Sync + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Panics on division by zero.
    fn over(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn conj(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// `Some(q)` when the value is real.
    fn as_rational(&self) -> Option<Rational>;
    /// Renders the coefficient as it appears in front of a monomial. The
    /// returned flag tells the renderer whether a leading minus was produced
    /// (so it can write ` - ` instead of ` + -`).
    fn render(&self) -> (bool, String);

    fn inv(&self) -> Self {
        Self::one().over(self)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }

    fn add_assign(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }
}

impl Field for Rational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero");
        self / rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn render(&self) -> (bool, String) {
        let neg = self.is_negative();
        (neg, alloc::format!("{}", self.abs()))
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
}
