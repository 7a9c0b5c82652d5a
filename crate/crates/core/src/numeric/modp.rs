//! Dense polynomial arithmetic over a small prime field and Berlekamp
//! factorization. Coefficients are `u64` residues, low-to-high.

use alloc::vec;
use alloc::vec::Vec;

pub type PolyP = Vec<u64>;

pub fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &[u64], c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| x * (c % p) % p).collect())
}

pub fn divrem(a: &[u64], d: &[u64], p: u64) -> (PolyP, PolyP) {
    assert!(!d.is_empty(), "division by zero polynomial");
    let dd = d.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let inv = inv_mod(d[dd], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &dc) in d.iter().enumerate() {
            r[k + j] = (r[k + j] + p - c * dc % p) % p;
        }
        q[k] = c;
    }
    r.truncate(dd);
    (trim(q), trim(r))
}

pub fn monic(a: &[u64], p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, inv_mod(l, p), p),
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        r0 = core::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = core::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = core::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().expect("nonzero input"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &[u64], p: u64) -> PolyP {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect())
}

fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> PolyP {
    divrem(&mul(a, b, p), f, p).1
}

fn powmod_poly(base: &[u64], mut e: u64, f: &[u64], p: u64) -> PolyP {
    let mut acc = vec![1u64];
    let mut b = divrem(base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && gcd(f, &d, p).len() == 1
}

/// Null-space basis of the Berlekamp matrix of a monic squarefree `f`.
fn berlekamp_kernel(f: &[u64], p: u64) -> Vec<PolyP> {
    let n = f.len() - 1;
    let xp = powmod_poly(&[0, 1], p, f, p);
    // rows[i] = x^{ip} mod f
    let mut rows: Vec<PolyP> = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for _ in 0..n {
        rows.push(cur.clone());
        cur = mulmod(&cur, &xp, f, p);
    }
    // m = (Q - I)^T, solve m v = 0.
    let mut m = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let q = row.get(j).copied().unwrap_or(0);
            let v = if i == j { (q + p - 1) % p } else { q };
            m[j][i] = v;
        }
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..n {
            if i != r && m[i][c] != 0 {
                let fct = m[i][c];
                for k in 0..n {
                    m[i][k] = (m[i][k] + p - fct * m[r][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[row][free]) % p;
        }
        basis.push(trim(v));
    }
    basis
}

/// Number of irreducible factors of a monic squarefree `f` modulo `p`.
pub fn factor_count(f: &[u64], p: u64) -> usize {
    berlekamp_kernel(f, p).len()
}

/// Monic irreducible factors of a monic squarefree `f` modulo `p`.
pub fn berlekamp(f: &[u64], p: u64) -> Vec<PolyP> {
    let kernel = berlekamp_kernel(f, p);
    let r = kernel.len();
    let mut factors = vec![f.to_vec()];
    if r <= 1 {
        return factors;
    }
    'outer: for v in kernel.iter().filter(|v| v.len() > 1) {
        for s in 0..p {
            let mut next = Vec::with_capacity(factors.len() + 1);
            for u in factors.drain(..) {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let shifted = sub(v, &[s], p);
                let g = gcd(&u, &shifted, p);
                if g.len() > 1 && g.len() < u.len() {
                    let other = monic(&divrem(&u, &g, p).0, p);
                    next.push(g);
                    next.push(other);
                } else {
                    next.push(u);
                }
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
    }
    factors.sort();
    factors
}
