//! Real root isolation by Descartes' rule of signs with bisection
//! (Vincent–Collins–Akritas) on primitive integer polynomials.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebraic::{sort_dedup, AlgebraicNumber};
use super::factor::factor_univariate;
use super::{Integer, Rational, UniPoly};
use crate::error::{Error, Result};

/// Real roots of `p` in increasing order, each with an isolating interval
/// against its (irreducible, unless capped) defining factor. Rational roots
/// come back exact.
pub fn isolate_real_roots(p: &UniPoly<Rational>) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot isolate roots of the zero polynomial".into()));
    }
    let mut out = Vec::new();
    for f in factor_univariate(p)?.factors {
        out.extend(isolate_squarefree(&f.poly));
    }
    sort_dedup(&mut out);
    Ok(out)
}

/// Roots of a squarefree polynomial, unsorted across signs.
pub fn isolate_squarefree(p: &UniPoly<Rational>) -> Vec<AlgebraicNumber> {
    let (_, mut f) = p.primitive_integer();
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    if f.len() == 2 {
        let r = Rational::new(-f[0].clone(), f[1].clone());
        return vec![AlgebraicNumber::from_rational(r)];
    }
    if f[0].is_zero() {
        out.push(AlgebraicNumber::from_rational(Rational::zero()));
        f.remove(0);
    }
    let poly = UniPoly::from_integer_coeffs(&f);
    for iv in positive_roots(&f) {
        out.push(to_algebraic(&poly, iv));
    }
    let reflected: Vec<Integer> =
        f.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() }).collect();
    for iv in positive_roots(&reflected) {
        let iv = match iv {
            Root::Exact(r) => Root::Exact(-r),
            Root::Interval(lo, hi) => Root::Interval(-hi, -lo),
        };
        out.push(to_algebraic(&poly, iv));
    }
    out
}

enum Root {
    Exact(Rational),
    Interval(Rational, Rational),
}

fn to_algebraic(poly: &UniPoly<Rational>, r: Root) -> AlgebraicNumber {
    match r {
        Root::Exact(r) => AlgebraicNumber::from_rational(r),
        Root::Interval(lo, hi) => AlgebraicNumber::new(poly.clone(), lo, hi),
    }
}

fn variations(c: &[Integer]) -> usize {
    let mut last = 0;
    let mut n = 0;
    for x in c {
        let s = if x.is_positive() {
            1
        } else if x.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// `q(x + 1)`.
fn taylor_shift1(q: &[Integer]) -> Vec<Integer> {
    let mut a = q.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

/// Sign variations of `(x+1)^n q(1/(x+1))`, bounding the roots of `q` in (0,1).
fn descartes01(q: &[Integer]) -> usize {
    let mut r = q.to_vec();
    r.reverse();
    variations(&taylor_shift1(&r))
}

/// `2^n q(x/2)`.
fn halve(q: &[Integer]) -> Vec<Integer> {
    let n = q.len() - 1;
    q.iter().enumerate().map(|(i, c)| c << (n - i)).collect()
}

/// Exact division by `x - 1`.
fn div_x_minus_1(q: &[Integer]) -> Vec<Integer> {
    let n = q.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut acc = BigInt::zero();
    for i in (1..=n).rev() {
        acc += &q[i];
        out[i - 1] = acc.clone();
    }
    debug_assert!((acc + &q[0]).is_zero());
    out
}

fn positive_roots(f: &[Integer]) -> Vec<Root> {
    let n = f.len() - 1;
    let lc = f[n].abs();
    // Cauchy bound 1 + max |a_i / a_n| < 2^b.
    let mut bound = Rational::one();
    for c in &f[..n] {
        let v = Rational::new(c.abs(), lc.clone());
        if v > bound {
            bound = v;
        }
    }
    bound += Rational::one();
    let mut b = 0usize;
    while Rational::from_integer(BigInt::one() << b) <= bound {
        b += 1;
    }
    let scaled: Vec<Integer> = f.iter().enumerate().map(|(i, c)| c << (b * i)).collect();
    let scale = Rational::from_integer(BigInt::one() << b);
    let mut out = Vec::new();
    let mut stack = vec![(scaled, BigInt::zero(), 0usize)];
    while let Some((q, c, k)) = stack.pop() {
        if q.len() <= 1 {
            continue;
        }
        let v = descartes01(&q);
        let denom = BigInt::one() << k;
        if v == 0 {
            continue;
        }
        if v == 1 {
            let lo = Rational::new(c.clone(), denom.clone()) * &scale;
            let hi = Rational::new(&c + 1, denom) * &scale;
            out.push(Root::Interval(lo, hi));
            continue;
        }
        let mut left = halve(&q);
        let mut right = taylor_shift1(&left);
        if right[0].is_zero() {
            let mid = Rational::new(&c * 2 + 1, denom << 1usize) * &scale;
            out.push(Root::Exact(mid));
            right.remove(0);
            left = div_x_minus_1(&left);
        }
        stack.push((right, &c * 2 + 1, k + 1));
        stack.push((left, &c * 2, k + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, rat, to_f64};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn cubic_with_rational_roots() {
        let r = isolate_real_roots(&p(&[0, -1, 0, 1])).unwrap();
        let vals: Vec<_> = r.iter().map(|a| a.as_rational().cloned().unwrap()).collect();
        assert_eq!(vals, vec![int(-1), int(0), int(1)]);
    }

    #[test]
    fn sqrt_two_by_bisection_oracle() {
        let r = isolate_real_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        let w = Rational::new(1.into(), BigInt::one() << 20usize);
        for (a, expect) in r.iter().zip([-1.0f64, 1.0]) {
            let a = a.refine_to(&w);
            assert!(a.width() <= w);
            // independent oracle: float bisection on x^2 - 2
            let (mut lo, mut hi) = if expect < 0.0 { (-2.0f64, 0.0) } else { (0.0, 2.0) };
            for _ in 0..60 {
                let m = 0.5 * (lo + hi);
                if (lo * lo - 2.0) * (m * m - 2.0) <= 0.0 { hi = m } else { lo = m }
            }
            assert!(to_f64(a.lo()) <= lo + 1e-12 && hi <= to_f64(a.hi()) + 1e-12);
        }
    }

    #[test]
    fn midpoint_roots_of_reducible_input() {
        // squarefree but reducible and with a root at a bisection midpoint
        let f = p(&[-1, 2]).mul(&p(&[-3, 0, 1])).mul(&p(&[3, 4]));
        let r = isolate_squarefree(&f);
        assert_eq!(r.len(), 4);
        let mut r = r;
        sort_dedup(&mut r);
        assert_eq!(r.len(), 4);
        assert_eq!(r[1].cmp_rational(&rat(-3, 4)), core::cmp::Ordering::Equal);
        assert_eq!(r[2].cmp_rational(&rat(1, 2)), core::cmp::Ordering::Equal);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(isolate_real_roots(&UniPoly::zero()).is_err());
        assert!(isolate_real_roots(&p(&[3])).unwrap().is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn planted_rational_roots(roots in proptest::collection::vec((-20i64..20, 1i64..5), 1..8), extra in 0i64..3) {
            let mut f = p(&[1 + extra, 0, 1]); // no real roots
            let mut planted: Vec<Rational> = Vec::new();
            for (n, d) in &roots {
                let r = rat(*n, *d);
                f = f.mul(&UniPoly::new(vec![-r.clone(), Rational::one()]));
                planted.push(r);
            }
            planted.sort();
            planted.dedup();
            let got: Vec<Rational> = isolate_real_roots(&f).unwrap().iter().map(|a| a.as_rational().cloned().expect("rational")).collect();
            prop_assert_eq!(got, planted);
        }

        #[test]
        fn sturm_agrees_with_isolation(c in proptest::collection::vec(-6i64..6, 2..8), a in -8i64..0, b in 1i64..8) {
            let f = p(&c);
            prop_assume!(!f.is_constant());
            let (a, b) = (rat(2 * a + 1, 2), rat(2 * b + 1, 2));
            prop_assume!(!f.eval(&a).is_zero() && !f.eval(&b).is_zero());
            let n = super::super::sturm::sturm_count(&f, &a, &b).unwrap();
            let inside = isolate_real_roots(&f).unwrap().iter().filter(|r| r.cmp_rational(&a).is_gt() && r.cmp_rational(&b).is_lt()).count();
            prop_assert_eq!(n, inside);
        }
    }
}
