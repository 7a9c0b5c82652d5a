//! Exact sign of a multivariate polynomial at a point with real algebraic
//! coordinates.
//!
//! A short interval pass settles most nonzero signs. Otherwise the value
//! `p(α)` is pinned down as a root of the univariate norm
//! `N(t) = res(… res(t − p(x), m_1(x_1)) …, m_k(x_k))`, which decides zero
//! exactly and guarantees that further refinement terminates.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::algebraic::AlgebraicNumber;
use super::rational::rat;
use super::sturm::count_closed;
use super::{Rational, UniPoly};
use crate::error::{Error, Result};
use crate::mpoly::subres::resultant;
use crate::mpoly::{MPoly, QPoly};

/// Total bisection rounds before giving up.
pub const REFINEMENT_CAP: usize = 256;
const QUICK_ROUNDS: usize = 12;

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(r: Rational) -> Self {
        Self { lo: r.clone(), hi: r }
    }

    fn add(&self, o: &Self) -> Self {
        Self { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().expect("nonempty").clone();
        let hi = c.iter().max().expect("nonempty").clone();
        Self { lo, hi }
    }

    fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::point(Rational::one());
        }
        let a = num_traits::pow(self.lo.clone(), e as usize);
        let b = num_traits::pow(self.hi.clone(), e as usize);
        if e % 2 == 1 || !self.lo.is_negative() {
            Self { lo: a, hi: b }
        } else if !self.hi.is_positive() {
            Self { lo: b, hi: a }
        } else {
            Self { lo: Rational::zero(), hi: a.max(b) }
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
}

/// Interval enclosure of `p` over a box.
pub fn interval_eval(p: &QPoly, boxes: &[Interval]) -> Interval {
    let mut acc = Interval::point(Rational::zero());
    for (m, c) in p.terms() {
        let mut t = Interval::point(c.clone());
        for (v, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&boxes[v].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

fn boxes_of(point: &[AlgebraicNumber]) -> Vec<Interval> {
    point.iter().map(|a| Interval { lo: a.lo().clone(), hi: a.hi().clone() }).collect()
}

fn sign_of_interval(iv: &Interval) -> Option<i32> {
    if iv.lo.is_positive() {
        Some(1)
    } else if iv.hi.is_negative() {
        Some(-1)
    } else if iv.lo.is_zero() && iv.hi.is_zero() {
        Some(0)
    } else {
        None
    }
}

/// Exact sign of `p` at `point` (`-1`, `0` or `1`).
pub fn sign_at(p: &QPoly, point: &[AlgebraicNumber]) -> Result<i32> {
    if point.len() != p.nvars() {
        return Err(Error::VariableMismatch(format!(
            "point has {} coordinates, polynomial has {} variables",
            point.len(),
            p.nvars()
        )));
    }
    let mut q = p.clone();
    for (v, a) in point.iter().enumerate() {
        if let Some(r) = a.as_rational() {
            if q.involves(v) {
                q = q.substitute_value(v, r);
            }
        }
    }
    if let Some(c) = q.constant_value() {
        return Ok(sign_rational(&c));
    }
    let mut pt: Vec<AlgebraicNumber> = point.to_vec();
    let involved: Vec<usize> = q.vars_used();
    for _ in 0..QUICK_ROUNDS {
        if let Some(s) = sign_of_interval(&interval_eval(&q, &boxes_of(&pt))) {
            return Ok(s);
        }
        refine_all(&mut pt, &involved);
    }
    let norm = value_norm(&q, &pt, &involved);
    let nsf = norm.squarefree_part();
    let zero_is_root = nsf.eval(&Rational::zero()).is_zero();
    // radius around 0 free of other roots of the norm
    let eps = if zero_is_root {
        let rest = nsf.exact_div(&UniPoly::x()).expect("t divides");
        let mut e = Rational::one();
        while count_closed(&rest, &-e.clone(), &e) > 0 {
            e /= rat(2, 1);
        }
        Some(e)
    } else {
        None
    };
    for _ in QUICK_ROUNDS..REFINEMENT_CAP {
        let iv = interval_eval(&q, &boxes_of(&pt));
        if let Some(s) = sign_of_interval(&iv) {
            return Ok(s);
        }
        if let Some(e) = &eps {
            if &iv.hi < e && iv.lo > -e.clone() {
                return Ok(0);
            }
        }
        refine_all(&mut pt, &involved);
    }
    Err(Error::Undecidable(format!("sign of {p} not settled after {REFINEMENT_CAP} refinements")))
}

fn refine_all(pt: &mut [AlgebraicNumber], involved: &[usize]) {
    for &v in involved {
        pt[v] = pt[v].refine();
    }
}

fn sign_rational(c: &Rational) -> i32 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Univariate polynomial having `q(point)` among its roots.
fn value_norm(q: &QPoly, point: &[AlgebraicNumber], involved: &[usize]) -> UniPoly<Rational> {
    let n = q.nvars();
    let t = n;
    let map: Vec<usize> = (0..n).collect();
    let lifted = q.remap(n + 1, &map);
    let mut r = MPoly::var(n + 1, t).sub(&lifted);
    for &v in involved.iter().rev() {
        let m = &point[v];
        let mv = MPoly::from_univariate(n + 1, v, m.poly());
        r = resultant(&r, &mv, v).expect("minimal polynomial is nonconstant");
    }
    r.to_univariate(t).expect("only the value variable remains")
}

/// Sign of `p` at a point whose coordinates are all rational.
pub fn sign_at_rational(p: &QPoly, point: &[Rational]) -> i32 {
    sign_rational(&p.eval(point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::isolate_real_roots;
    use crate::numeric::rational::int;

    const V: [&str; 2] = ["x", "y"];

    fn root(c: &[i64], idx: usize) -> AlgebraicNumber {
        isolate_real_roots(&UniPoly::from_ints(c)).unwrap()[idx].clone()
    }

    #[test]
    fn rational_points() {
        let p = poly("x^2+y^2", &V).unwrap();
        let o = AlgebraicNumber::from_rational(int(0));
        assert_eq!(sign_at(&p, &[o.clone(), o]).unwrap(), 0);
    }

    #[test]
    fn sqrt_two_point() {
        let s2 = root(&[-2, 0, 1], 1);
        let zero = AlgebraicNumber::from_rational(int(0));
        assert_eq!(sign_at(&poly("x-1", &V).unwrap(), &[s2.clone(), zero.clone()]).unwrap(), 1);
        // exact zeros that intervals alone never certify
        assert_eq!(sign_at(&poly("x^2-2", &V).unwrap(), &[s2.clone(), zero.clone()]).unwrap(), 0);
        let c2 = root(&[-2, 0, 0, 1], 0);
        let p = poly("x^6 - 2*y^6", &V).unwrap();
        assert_eq!(sign_at(&p, &[s2.clone(), c2.clone()]).unwrap(), 0);
        let p = poly("x*y - 1", &V).unwrap();
        let h = root(&[-1, 0, 2], 1); // 1/sqrt(2)
        assert_eq!(sign_at(&p, &[s2.clone(), h.clone()]).unwrap(), 0);
        let p = poly("x*y - 1 + 1/1000000000000", &V).unwrap();
        assert_eq!(sign_at(&p, &[s2, h]).unwrap(), 1);
    }

    #[test]
    fn mismatch_is_rejected() {
        assert!(sign_at(&poly("x", &V).unwrap(), &[]).is_err());
    }
}
