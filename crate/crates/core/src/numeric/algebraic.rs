use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::rational::{rat, to_f64};
use super::sturm::count_closed;
use super::{Rational, UniPoly};

/// A real algebraic number: a squarefree defining polynomial together with an
/// interval containing exactly one of its roots. Rational values carry
/// `lo == hi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraicNumber {
    poly: UniPoly<Rational>,
    lo: Rational,
    hi: Rational,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rational) -> Self {
        let poly = UniPoly::new(alloc::vec![-r.clone(), Rational::one()]).primitive();
        Self { poly, lo: r.clone(), hi: r }
    }

    /// `poly` must be squarefree with exactly one root in `[lo, hi]`, and
    /// nonzero at both endpoints when `lo < hi`.
    pub fn new(poly: UniPoly<Rational>, lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        if lo == hi {
            debug_assert!(poly.eval(&lo).is_zero());
            return Self::from_rational(lo);
        }
        debug_assert!(poly.sign_at(&lo) * poly.sign_at(&hi) < 0, "not an isolating interval");
        let poly = poly.primitive();
        Self { poly, lo, hi }
    }

    pub fn poly(&self) -> &UniPoly<Rational> {
        &self.poly
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.lo == self.hi).then_some(&self.lo)
    }

    pub fn is_rational(&self) -> bool {
        self.lo == self.hi
    }

    /// One bisection step. Returns a new value; the receiver is unchanged.
    pub fn refine(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let mid = (&self.lo + &self.hi) / rat(2, 1);
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            return Self::from_rational(mid);
        }
        let slo = self.poly.sign_at(&self.lo);
        if sm == slo {
            Self { poly: self.poly.clone(), lo: mid, hi: self.hi.clone() }
        } else {
            Self { poly: self.poly.clone(), lo: self.lo.clone(), hi: mid }
        }
    }

    pub fn refine_to(&self, width: &Rational) -> Self {
        let mut a = self.clone();
        while !a.is_rational() && &a.width() > width {
            a = a.refine();
        }
        a
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(r) = self.as_rational() {
            return to_f64(r);
        }
        let mag = to_f64(&self.hi.abs().max(self.lo.abs())).max(1.0);
        let tol = Rational::new(1.into(), num_bigint::BigInt::one() << 60usize) * rat((mag as i64).max(1), 1);
        let a = self.refine_to(&tol);
        to_f64(&((a.lo + a.hi) / rat(2, 1)))
    }

    /// Exact comparison.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if let (Some(x), Some(y)) = (a.as_rational(), b.as_rational()) {
                return x.cmp(y);
            }
            // Overlapping: equal iff the gcd of the defining polynomials has a
            // root in the intersection.
            let lo = (&a.lo).max(&b.lo).clone();
            let hi = (&a.hi).min(&b.hi).clone();
            let g = a.poly.gcd(&b.poly);
            if !g.is_constant() && count_closed(&g, &lo, &hi) > 0 {
                return Ordering::Equal;
            }
            if a.width() >= b.width() {
                a = a.refine();
            } else {
                b = b.refine();
            }
        }
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.cmp_exact(&Self::from_rational(r.clone()))
    }

    /// Sign of a univariate rational polynomial at this number.
    pub fn sign_of(&self, p: &UniPoly<Rational>) -> i32 {
        if let Some(r) = self.as_rational() {
            return p.sign_at(r);
        }
        if p.is_zero() {
            return 0;
        }
        let g = p.gcd(&self.poly);
        if !g.is_constant() && count_closed(&g, &self.lo, &self.hi) > 0 {
            return 0;
        }
        // This number is not a root of p, so bisection eventually leaves an
        // interval free of roots of p, where the sign is constant.
        let p_sf = p.squarefree_part();
        let mut a = self.clone();
        loop {
            if a.is_rational() {
                return p.sign_at(a.as_rational().unwrap());
            }
            if count_closed(&p_sf, &a.lo, &a.hi) == 0 {
                return p.sign_at(&a.lo);
            }
            a = a.refine();
        }
    }

    /// Decimal rendering with the given number of fractional digits.
    pub fn approx(&self, digits: usize) -> String {
        let v = self.to_f64();
        let v = if v == 0.0 { 0.0 } else { v };
        format!("{v:.digits$}")
    }

    /// Exact description: the rational value, or the defining polynomial with
    /// its isolating interval.
    pub fn describe(&self) -> String {
        match self.as_rational() {
            Some(r) => format!("{r}"),
            None => format!("root of {} in [{}, {}]", self.poly.render("t"), self.lo, self.hi),
        }
    }
}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}", self.approx(6)),
        }
    }
}

/// Sorts and removes duplicates using exact comparison.
pub fn sort_dedup(v: &mut Vec<AlgebraicNumber>) {
    v.sort_by(|a, b| a.cmp_exact(b));
    v.dedup_by(|a, b| a.cmp_exact(b) == Ordering::Equal);
}
