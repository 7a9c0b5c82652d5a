//! Resultants and principal subresultant coefficients with respect to one
//! variable, via the signed subresultant recurrence (exact divisions only).

use alloc::vec;
use alloc::vec::Vec;

use super::poly::MPoly;
use crate::error::{Error, Result};
use crate::numeric::Field;

/// Polynomial in one distinguished variable with polynomial coefficients,
/// low-to-high, trimmed.
pub(crate) type Up<F> = Vec<MPoly<F>>;

pub(crate) fn up_trim<F: Field>(mut a: Up<F>) -> Up<F> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn up_scale<F: Field>(a: &Up<F>, c: &MPoly<F>) -> Up<F> {
    up_trim(a.iter().map(|x| x.mul(c)).collect())
}

fn up_div<F: Field>(a: &Up<F>, d: &MPoly<F>) -> Up<F> {
    if d.is_one() {
        return a.clone();
    }
    a.iter().map(|x| x.exact_div(d).expect("subresultant division is exact")).collect()
}

/// `lc(b)^(deg a - deg b + 1) · a  mod  b`.
pub(crate) fn up_prem<F: Field>(a: &Up<F>, b: &Up<F>) -> Up<F> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let delta = r.len() - 1 - db;
    let mut steps = 0;
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        let mut next: Up<F> = r.iter().map(|c| c.mul(lb)).collect();
        for (j, bc) in b.iter().enumerate() {
            next[k + j] = next[k + j].sub(&bc.mul(&lr));
        }
        r = up_trim(next);
        steps += 1;
    }
    for _ in steps..=delta {
        r = up_scale(&r, lb);
    }
    r
}

fn to_up<F: Field>(p: &MPoly<F>, var: usize) -> Up<F> {
    up_trim(p.coeffs_in(var))
}

fn from_up<F: Field>(n: usize, var: usize, a: &Up<F>) -> MPoly<F> {
    if a.is_empty() {
        return MPoly::zero(n);
    }
    MPoly::from_coeffs_in(n, var, a)
}

/// Principal subresultant coefficients `psc_0 .. psc_min(p,q)` of `p`, `q`
/// in `var`, each equal to the determinant of the corresponding Sylvester
/// submatrix. Entry `min(p,q)` is the (possibly empty) top determinant.
pub fn subresultant_chain<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: usize) -> Vec<MPoly<F>> {
    let n = p.nvars();
    let a = to_up(p, var);
    let b = to_up(q, var);
    if a.is_empty() || b.is_empty() {
        let m = (a.len().max(1) - 1).min(b.len().max(1) - 1);
        return vec![MPoly::zero(n); m + 1];
    }
    let (dp, dq) = (a.len() - 1, b.len() - 1);
    if dp < dq {
        // psc_j(Q,P) = (-1)^{(p-j)(q-j)} psc_j(P,Q)
        let chain = subresultant_chain(q, p, var);
        return chain
            .into_iter()
            .enumerate()
            .map(|(j, c)| if ((dp - j) * (dq - j)) % 2 == 1 { c.neg() } else { c })
            .collect();
    }
    if dp == dq {
        return equal_degree_chain(n, &a, &b);
    }
    signed_chain(n, &a, &b)
}

/// Chain for `deg a = deg b = d`: reduce to `b' = lc(a)·b − lc(b)·a`.
fn equal_degree_chain<F: Field>(n: usize, a: &Up<F>, b: &Up<F>) -> Vec<MPoly<F>> {
    let d = a.len() - 1;
    let la = &a[d];
    let lb = &b[d];
    let b2 = up_trim(
        (0..=d).map(|i| b[i].mul(la).sub(&a[i].mul(lb))).collect(),
    );
    let mut out = vec![MPoly::zero(n); d + 1];
    out[d] = MPoly::one(n);
    if b2.is_empty() {
        return out;
    }
    let q2 = b2.len() - 1;
    let inner = if q2 == 0 {
        vec![b2[0].pow(d as u32)]
    } else {
        signed_chain(n, a, &b2)
    };
    for j in 0..=q2 {
        let mut v = inner[j].clone();
        for _ in j..q2 {
            v = v.exact_div(la).expect("equal-degree reduction is exact");
        }
        out[j] = v;
    }
    out
}

/// Signed subresultant recurrence for `deg a > deg b ≥ 0`; returns psc in the
/// Sylvester-determinant sign convention.
fn signed_chain<F: Field>(n: usize, a: &Up<F>, b: &Up<F>) -> Vec<MPoly<F>> {
    let p = a.len() - 1;
    let q = b.len() - 1;
    let zero = MPoly::zero(n);
    if q == 0 {
        let mut out = vec![zero; 1];
        out[0] = b[0].pow(p as u32);
        return out;
    }
    let mut sres: Vec<Up<F>> = vec![Vec::new(); p + 1];
    let mut s: Vec<MPoly<F>> = vec![zero.clone(); p + 1];
    let mut t: Vec<MPoly<F>> = vec![zero.clone(); p + 1];
    sres[p] = a.clone();
    s[p] = MPoly::one(n);
    t[p] = MPoly::one(n);
    sres[p - 1] = b.clone();
    t[p - 1] = b[q].clone();
    let (mut i, mut j) = (p + 1, p);
    while !sres[j - 1].is_empty() {
        let k = sres[j - 1].len() - 1;
        let denom = s[j].mul(&t[i - 1]);
        let next;
        if k == j - 1 {
            s[j - 1] = t[j - 1].clone();
            if k == 0 {
                break;
            }
            let num = up_scale(&sres[i - 1], &s[j - 1].mul(&s[j - 1]));
            next = remainder_over(&num, &sres[j - 1], &denom);
        } else {
            s[j - 1] = zero.clone();
            for delta in 1..=(j - k - 1) {
                let v = t[j - 1].mul(&t[j - delta]).exact_div(&s[j]).expect("exact");
                t[j - delta - 1] = if delta % 2 == 1 { v.neg() } else { v };
            }
            s[k] = t[k].clone();
            sres[k] = up_div(&up_scale(&sres[j - 1], &s[k]), &t[j - 1]);
            if k == 0 {
                break;
            }
            let num = up_scale(&sres[i - 1], &t[j - 1].mul(&s[k]));
            next = remainder_over(&num, &sres[j - 1], &denom);
        }
        sres[k - 1] = next;
        t[k - 1] = sres[k - 1].last().cloned().unwrap_or_else(|| zero.clone());
        i = j;
        j = k;
    }
    (0..=q)
        .map(|jj| {
            let e = (p - jj) * (p - jj - 1) / 2;
            if e % 2 == 1 {
                s[jj].neg()
            } else {
                s[jj].clone()
            }
        })
        .collect()
}

/// `−Rem(num, b) / denom`, where `Rem` is the remainder over the fraction
/// field; computed from the pseudo-remainder with exact divisions.
fn remainder_over<F: Field>(num: &Up<F>, b: &Up<F>, denom: &MPoly<F>) -> Up<F> {
    let delta = num.len() as isize - b.len() as isize;
    let r = up_prem(num, b);
    let lb = b.last().expect("nonzero divisor");
    let scale = if delta >= 0 { lb.pow(delta as u32 + 1) } else { MPoly::one(lb.nvars()) };
    let r = up_div(&r, &scale.mul(denom));
    r.iter().map(|c| c.neg()).collect()
}

/// Sylvester resultant of `p` and `q` with respect to `var`.
pub fn resultant<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: usize) -> Result<MPoly<F>> {
    if p.degree_in(var) <= 0 && q.degree_in(var) <= 0 {
        return Err(Error::InvalidInput("resultant: both polynomials are constant in the variable".into()));
    }
    Ok(subresultant_chain(p, q, var).swap_remove(0))
}

/// Discriminant-like projection helper: psc chain of `p` and `∂p/∂var`.
pub fn derivative_chain<F: Field>(p: &MPoly<F>, var: usize) -> Vec<MPoly<F>> {
    subresultant_chain(p, &p.derivative(var), var)
}

pub(crate) fn prem_in<F: Field>(a: &MPoly<F>, b: &MPoly<F>, var: usize) -> MPoly<F> {
    let n = a.nvars();
    from_up(n, var, &up_prem(&to_up(a, var), &to_up(b, var)))
}
