//! Real roots over a sample point and the stack of cells they cut out.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::One;

use crate::error::{Error, Result};
use crate::mpoly::{resultant, MPoly, QPoly};
use crate::numeric::algebraic::sort_dedup;
use crate::numeric::rational::rat;
use crate::numeric::{isolate_real_roots, sign_at, AlgebraicNumber, Rational};

/// Drops variables `m..` (which `p` must not involve).
pub fn restrict(p: &QPoly, m: usize) -> QPoly {
    debug_assert!(p.vars_used().iter().all(|&v| v < m));
    let map: Vec<usize> = (0..p.nvars()).map(|i| if i < m { i } else { 0 }).collect();
    p.remap(m, &map)
}

/// Real roots in `x_k` of `p(sample, x_k)` where `k = sample.len()` is the
/// main variable of `p`. `allow_nullified` makes a polynomial that vanishes
/// identically on the fibre contribute no roots instead of an error.
pub fn fibre_roots(p: &QPoly, sample: &[AlgebraicNumber], allow_nullified: bool) -> Result<Vec<AlgebraicNumber>> {
    let k = sample.len();
    let full = restrict(p, k + 1);
    let mut q = full.clone();
    for (v, a) in sample.iter().enumerate() {
        if let Some(r) = a.as_rational() {
            if q.involves(v) {
                q = q.substitute_value(v, r);
            }
        }
    }
    if q.is_zero() || nullified(&q, sample, k)? {
        if allow_nullified {
            return Ok(Vec::new());
        }
        return Err(Error::NonDelineable(format!("{p}")));
    }
    if !q.involves(k) {
        return Ok(Vec::new());
    }
    let algebraic: Vec<usize> = q.vars_used().into_iter().filter(|&v| v != k).collect();
    if algebraic.is_empty() {
        return isolate_real_roots(&q.to_univariate(k).expect("univariate in the main variable"));
    }
    let mut norm = q.clone();
    for &v in algebraic.iter().rev() {
        let m = MPoly::from_univariate(k + 1, v, sample[v].poly());
        norm = resultant(&norm, &m, v)?;
    }
    if norm.is_zero() {
        return Err(Error::Undecidable(format!("norm of {p} over the sample vanishes")));
    }
    let Some(uni) = norm.to_univariate(k) else {
        return Err(Error::Internal("norm still involves sample variables".into()));
    };
    if uni.is_constant() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut point = sample.to_vec();
    point.push(AlgebraicNumber::from_rational(Rational::one()));
    for beta in isolate_real_roots(&uni)? {
        point[k] = beta.clone();
        if sign_at(&full, &point)? == 0 {
            out.push(beta);
        }
    }
    Ok(out)
}

/// All coefficients in `x_k` vanish at the sample.
fn nullified(q: &QPoly, sample: &[AlgebraicNumber], k: usize) -> Result<bool> {
    for c in q.coeffs_in(k).iter().rev() {
        if c.is_zero() {
            continue;
        }
        if sign_at(&restrict(c, k), sample)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Refines two distinct numbers until their isolating intervals are disjoint.
pub fn separate(a: &mut AlgebraicNumber, b: &mut AlgebraicNumber) {
    debug_assert_eq!(a.cmp_exact(b), Ordering::Less);
    while a.hi() >= b.lo() {
        if a.width() >= b.width() && !a.is_rational() {
            *a = a.refine();
        } else {
            *b = b.refine();
        }
    }
}

/// One sector or section of a stack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StackEntry {
    pub section: bool,
    pub value: AlgebraicNumber,
    pub lower: Option<AlgebraicNumber>,
    pub upper: Option<AlgebraicNumber>,
}

/// Sections at `roots` (sorted, distinct) alternating with sectors whose
/// samples are rational midpoints, one unit beyond the extreme roots.
pub fn stack(mut roots: Vec<AlgebraicNumber>) -> Vec<StackEntry> {
    sort_dedup(&mut roots);
    for i in 1..roots.len() {
        let (l, r) = roots.split_at_mut(i);
        separate(&mut l[i - 1], &mut r[0]);
    }
    let Some(first) = roots.first() else {
        let zero = AlgebraicNumber::from_rational(Rational::from_integer(0.into()));
        return vec![StackEntry { section: false, value: zero, lower: None, upper: None }];
    };
    let mut out = Vec::with_capacity(2 * roots.len() + 1);
    out.push(StackEntry {
        section: false,
        value: AlgebraicNumber::from_rational(first.lo() - Rational::one()),
        lower: None,
        upper: Some(first.clone()),
    });
    for (i, r) in roots.iter().enumerate() {
        out.push(StackEntry { section: true, value: r.clone(), lower: None, upper: None });
        let next = roots.get(i + 1);
        let value = match next {
            Some(n) => (r.hi() + n.lo()) / rat(2, 1),
            None => r.hi() + Rational::one(),
        };
        out.push(StackEntry {
            section: false,
            value: AlgebraicNumber::from_rational(value),
            lower: Some(r.clone()),
            upper: next.cloned(),
        });
    }
    out
}

/// Two rationals inside the open interval `(lower, upper)` around `sample`,
/// one on each side.
pub fn probes(sample: &Rational, lower: Option<&AlgebraicNumber>, upper: Option<&AlgebraicNumber>) -> [Rational; 2] {
    let two = rat(2, 1);
    let below = match lower {
        None => sample - Rational::one(),
        Some(l) => {
            let mut l = l.clone();
            while l.hi() >= sample {
                l = l.refine();
            }
            (l.hi() + sample) / &two
        }
    };
    let above = match upper {
        None => sample + Rational::one(),
        Some(u) => {
            let mut u = u.clone();
            while u.lo() <= sample {
                u = u.refine();
            }
            (u.lo() + sample) / &two
        }
    };
    [below, above]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::rational::int;
    use crate::numeric::UniPoly;

    fn q(s: &str, n: usize) -> QPoly {
        let names = ["x", "y", "z"];
        poly(s, &names[..n]).unwrap()
    }

    fn a(r: Rational) -> AlgebraicNumber {
        AlgebraicNumber::from_rational(r)
    }

    #[test]
    fn base_stack() {
        let roots = vec![a(int(1)), a(int(-1)), a(int(0))];
        let s = stack(roots);
        assert_eq!(s.len(), 7);
        let samples: Vec<_> = s.iter().map(|e| e.value.as_rational().unwrap().clone()).collect();
        assert_eq!(samples, vec![int(-2), int(-1), rat(-1, 2), int(0), rat(1, 2), int(1), int(2)]);
        assert_eq!(stack(Vec::new()).len(), 1);
    }

    #[test]
    fn cube_root_fibre() {
        let sample = [a(rat(5, 8))];
        let mut roots = fibre_roots(&q("x^4-y^3", 2), &sample, false).unwrap();
        roots.extend(fibre_roots(&q("y", 2), &sample, false).unwrap());
        sort_dedup(&mut roots);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].as_rational(), Some(&int(0)));
        // y^3 = (5/8)^4
        let cube = UniPoly::new(vec![-(rat(625, 4096)), int(0), int(0), int(1)]);
        assert_eq!(roots[1].sign_of(&cube), 0);
        assert!((roots[1].to_f64() - 0.625f64.powf(4.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn algebraic_fibre() {
        let sqrt2 = isolate_real_roots(&UniPoly::from_ints(&[-2, 0, 1])).unwrap()[1].clone();
        let roots = fibre_roots(&q("y^2-2*x^2", 2), std::slice::from_ref(&sqrt2), false).unwrap();
        let vals: Vec<f64> = roots.iter().map(|r| r.to_f64()).collect();
        assert_eq!(vals.len(), 2);
        assert!((vals[0] + 2.0).abs() < 1e-12 && (vals[1] - 2.0).abs() < 1e-12);
        let roots = fibre_roots(&q("y-x", 2), std::slice::from_ref(&sqrt2), false).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].cmp_exact(&sqrt2), Ordering::Equal);
    }

    #[test]
    fn nullification_is_reported() {
        let r = fibre_roots(&q("x*y", 2), &[a(int(0))], false);
        assert!(matches!(r, Err(Error::NonDelineable(_))));
        assert!(fibre_roots(&q("x*y", 2), &[a(int(0))], true).unwrap().is_empty());
    }

    #[test]
    fn probes_stay_inside() {
        let [l, u] = probes(&rat(1, 2), Some(&a(int(0))), Some(&a(int(1))));
        assert!(l > int(0) && l < rat(1, 2) && u > rat(1, 2) && u < int(1));
    }
}
