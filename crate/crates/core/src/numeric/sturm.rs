use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Sturm sequence `p, p', -rem(p, p'), ...` with positive rescaling of each
/// member to primitive integer form (signs are preserved).
pub fn sturm_sequence(p: &UniPoly<Rational>) -> Vec<UniPoly<Rational>> {
    let mut seq = Vec::new();
    if p.is_zero() {
        return seq;
    }
    let normalize = |q: &UniPoly<Rational>| -> UniPoly<Rational> {
        let (c, _) = q.primitive_integer();
        q.scale(&c.abs().recip())
    };
    seq.push(normalize(p));
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(normalize(&d));
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(normalize(&r.neg()));
    }
    seq
}

fn variations_at(seq: &[UniPoly<Rational>], x: &Rational) -> usize {
    let mut last = 0;
    let mut count = 0;
    for q in seq {
        let s = q.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn sturm_count(p: &UniPoly<Rational>, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    if a >= b {
        return Err(Error::InvalidInput(alloc::format!("empty interval ({a}, {b})")));
    }
    for e in [a, b] {
        if p.eval(e).is_zero() {
            return Err(Error::EndpointRoot(alloc::format!("{e}")));
        }
    }
    let seq = sturm_sequence(p);
    Ok(variations_at(&seq, a) - variations_at(&seq, b))
}

/// Number of distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_closed(p: &UniPoly<Rational>, a: &Rational, b: &Rational) -> usize {
    if a == b {
        return usize::from(p.eval(a).is_zero());
    }
    let p = p.squarefree_part();
    let seq = sturm_sequence(&p);
    // For squarefree p, V(a) - V(b) counts the roots in (a, b];
    // add the left endpoint separately.
    let v = variations_at(&seq, a) - variations_at(&seq, b);
    v + usize::from(p.eval(a).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::int;

    fn p(c: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_ints(c)
    }

    #[test]
    fn counts() {
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), &int(0), &int(2)).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[1, 0, 1]), &int(-10), &int(10)).unwrap(), 0);
        assert_eq!(sturm_count(&p(&[0, -1, 0, 1]), &int(-2), &int(2)).unwrap(), 3);
        assert!(matches!(sturm_count(&p(&[0, -1, 0, 1]), &int(0), &int(2)), Err(Error::EndpointRoot(_))));
        assert!(sturm_count(&p(&[1, 1]), &int(2), &int(1)).is_err());
    }

    #[test]
    fn closed_counts_include_endpoints() {
        let f = p(&[0, -1, 0, 1]);
        assert_eq!(count_closed(&f, &int(0), &int(1)), 2);
        assert_eq!(count_closed(&f, &int(-1), &int(1)), 3);
        assert_eq!(count_closed(&f, &int(1), &int(1)), 1);
        // repeated roots are counted once
        let g = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(count_closed(&g, &int(-3), &int(3)), 2);
    }
}
