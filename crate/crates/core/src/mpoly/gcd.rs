//! Multivariate gcd over the rationals (recursive primitive PRS) and
//! squarefree decomposition.

use alloc::vec::Vec;

use super::poly::QPoly;
use super::subres::prem_in;

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient (`gcd(0, 0) = 0`).
pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let Some(v) = a.main_var().max(b.main_var()) else {
        return QPoly::one(n);
    };
    if !a.involves(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.involves(v) {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut r0 = a.exact_div(&ca).expect("content divides");
    let mut r1 = b.exact_div(&cb).expect("content divides");
    if r0.degree_in(v) < r1.degree_in(v) {
        core::mem::swap(&mut r0, &mut r1);
    }
    let g = loop {
        let r = prem_in(&r0, &r1, v);
        if r.is_zero() {
            break r1;
        }
        if !r.involves(v) {
            break QPoly::one(n);
        }
        r0 = r1;
        r1 = primitive_in(&r, v);
    };
    c.mul(&primitive_in(&g, v)).primitive()
}

pub fn lcm(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero(a.nvars());
    }
    a.mul(b).exact_div(&gcd(a, b)).expect("gcd divides").primitive()
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`.
pub fn content_in(f: &QPoly, var: usize) -> QPoly {
    let mut g = QPoly::zero(f.nvars());
    for c in f.coeffs_in(var) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return QPoly::one(f.nvars());
        }
    }
    g
}

pub fn primitive_in(f: &QPoly, var: usize) -> QPoly {
    if f.is_zero() {
        return f.clone();
    }
    f.exact_div(&content_in(f, var)).expect("content divides").primitive()
}

/// Squarefree decomposition `f = c · Π a_i^i` with each `a_i` squarefree,
/// primitive, pairwise coprime and nonconstant. Returns `(a_i, i)` pairs.
pub fn squarefree_decomposition(f: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    sqf_rec(&f.primitive(), &mut out);
    out.sort_by_key(|a| a.1);
    // merge parts with equal multiplicity
    let mut merged: Vec<(QPoly, u32)> = Vec::new();
    for (p, e) in out {
        match merged.last_mut() {
            Some((q, k)) if *k == e => *q = q.mul(&p).primitive(),
            _ => merged.push((p, e)),
        }
    }
    merged
}

fn sqf_rec(f: &QPoly, out: &mut Vec<(QPoly, u32)>) {
    let Some(v) = f.main_var() else { return };
    let c = content_in(f, v);
    sqf_rec(&c, out);
    let f = f.exact_div(&c).expect("content divides");
    // Yun's algorithm in `v`; every factor of the primitive part involves `v`.
    let df = f.derivative(v);
    let a0 = gcd(&f, &df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut cpoly = df.exact_div(&a0).expect("gcd divides");
    let mut d = cpoly.sub(&b.derivative(v));
    let mut i = 1;
    while b.involves(v) {
        let a = gcd(&b, &d);
        if a.involves(v) {
            out.push((a.primitive(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        cpoly = d.exact_div(&a).expect("gcd divides");
        d = cpoly.sub(&b.derivative(v));
        i += 1;
    }
}

pub fn squarefree_part(f: &QPoly) -> QPoly {
    squarefree_decomposition(f).into_iter().fold(QPoly::one(f.nvars()), |acc, (p, _)| acc.mul(&p)).primitive()
}
