use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Integer, Rational};

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Very large numerator/denominator: scale both down first.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = (nb - 60).max(0);
    let dshift = (db - 60).max(0);
    let n = (q.numer() >> shift as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> dshift as usize).to_f64().unwrap_or(1.0);
    n / d * libm::pow(2.0, (shift - dshift) as f64)
}

/// Parses an unsigned integer or decimal literal (`12`, `0.6`, `.5`) exactly.
pub fn parse_decimal(s: &str) -> Option<Rational> {
    let (int_part, frac_part) = match s.find('.') {
        Some(p) => (&s[..p], &s[p + 1..]),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::from(int_part);
    digits.push_str(frac_part);
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let d = num_traits::pow(BigInt::from(10), frac_part.len());
    Some(Rational::new(n, d))
}

pub fn floor(q: &Rational) -> Integer {
    q.floor().to_integer()
}

pub fn ceil(q: &Rational) -> Integer {
    q.ceil().to_integer()
}

/// Rational of smallest denominator (then smallest magnitude) strictly inside
/// `(lo, hi)`; `hi = None` means +infinity.
pub fn simplest_between(lo: &Rational, hi: Option<&Rational>) -> Rational {
    if let Some(h) = hi {
        assert!(lo < h, "empty interval");
        if lo.is_negative() && h.is_positive() {
            return Rational::zero();
        }
        if !h.is_positive() {
            return -simplest_between(&-h, Some(&-lo));
        }
    }
    simplest_nonneg(lo, hi)
}

// Requires lo >= 0.
fn simplest_nonneg(lo: &Rational, hi: Option<&Rational>) -> Rational {
    let fl = Rational::from_integer(floor(lo));
    let next = &fl + Rational::one();
    match hi {
        None => next,
        Some(h) if &next < h => next,
        Some(h) => {
            // lo and hi share the integer part fl (hi <= fl + 1).
            let lo_frac = lo - &fl;
            let hi_frac = h - &fl;
            let inner_lo = hi_frac.recip();
            let inner = if lo_frac.is_zero() {
                simplest_nonneg(&inner_lo, None)
            } else {
                let inner_hi = lo_frac.recip();
                simplest_nonneg(&inner_lo, Some(&inner_hi))
            };
            fl + inner.recip()
        }
    }
}

pub fn integer_gcd(a: &Integer, b: &Integer) -> Integer {
    a.gcd(b)
}

pub fn integer_lcm(a: &Integer, b: &Integer) -> Integer {
    a.lcm(b)
}

/// Orders rationals by "simplicity": height max(|num|, den), then positive first.
pub fn simplicity_key(q: &Rational) -> (Integer, bool, Rational) {
    let h = q.numer().abs().max(q.denom().clone());
    (h, q.is_negative(), q.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("0.6"), Some(rat(3, 5)));
        assert_eq!(parse_decimal("12"), Some(int(12)));
        assert_eq!(parse_decimal(".25"), Some(rat(1, 4)));
        assert_eq!(parse_decimal("1.50"), Some(rat(3, 2)));
        assert_eq!(parse_decimal("1.2.3"), None);
        assert_eq!(parse_decimal("."), None);
    }

    #[test]
    fn simplest_rational_in_interval() {
        assert_eq!(simplest_between(&rat(-1, 2), Some(&rat(1, 3))), int(0));
        assert_eq!(simplest_between(&rat(1, 3), Some(&rat(1, 2))), rat(2, 5));
        assert_eq!(simplest_between(&rat(1, 2), Some(&int(1))), rat(2, 3));
        assert_eq!(simplest_between(&int(3), None), int(4));
        assert_eq!(simplest_between(&rat(-7, 3), Some(&rat(-2, 1))), rat(-9, 4));
        assert_eq!(simplest_between(&int(0), Some(&int(1))), rat(1, 2));
        let s = simplest_between(&rat(5226, 10000), Some(&rat(7146, 10000)));
        assert!(s > rat(5226, 10000) && s < rat(7146, 10000));
        assert_eq!(s, rat(2, 3));
    }

    #[test]
    fn float_conversion_of_huge_values() {
        let big = Rational::new(num_traits::pow(BigInt::from(10), 400), num_traits::pow(BigInt::from(10), 399));
        assert!((to_f64(&big) - 10.0).abs() < 1e-9);
    }
}
