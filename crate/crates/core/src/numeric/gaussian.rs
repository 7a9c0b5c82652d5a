use alloc::format;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::{Field, Rational};

/// `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.render();
        if neg {
            write!(f, "-")?;
        }
        write!(f, "{body}")
    }
}

impl core::ops::Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.plus(&rhs)
    }
}

impl core::ops::Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.times(&rhs)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl Field for GaussianRational {
    fn plus(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn times(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
    fn over(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero");
        let num = self.times(&rhs.conj());
        Self::new(num.re / &n, num.im / n)
    }
    fn negate(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
    fn from_rational(q: &Rational) -> Self {
        Self::new(q.clone(), Rational::zero())
    }
    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }
    fn render(&self) -> (bool, String) {
        if self.im.is_zero() {
            return self.re.render();
        }
        if self.re.is_zero() {
            let neg = self.im.is_negative();
            let a = self.im.abs();
            let body = if a.is_one() { String::from("I") } else { format!("{a}*I") };
            return (neg, body);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        let a = self.im.abs();
        let imag = if a.is_one() { String::from("I") } else { format!("{a}*I") };
        (false, format!("({}{sign}{imag})", self.re))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, rat};

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(int(a), int(b))
    }

    #[test]
    fn field_laws_on_samples() {
        let a = g(1, 2);
        let b = GaussianRational::new(rat(-3, 2), rat(1, 3));
        assert_eq!(a.times(&b).over(&b), a);
        assert_eq!(a.plus(&b).minus(&b), a);
        assert_eq!(a.times(&a.conj()).as_rational(), Some(a.norm()));
        assert_eq!(a.conj().conj(), a);
        assert_eq!(GaussianRational::i().times(&GaussianRational::i()), g(-1, 0));
    }

    #[test]
    fn rendering() {
        assert_eq!(g(0, 1).render(), (false, "I".into()));
        assert_eq!(g(0, -2).render(), (true, "2*I".into()));
        assert_eq!(g(1, -1).render(), (false, "(1-I)".into()));
        assert_eq!(g(-3, 0).render(), (true, "3".into()));
    }
}
