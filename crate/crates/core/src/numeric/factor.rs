//! Factorization of univariate rational polynomials: squarefree
//! decomposition, Berlekamp modulo a small prime, quadratic Hensel lifting and
//! Zassenhaus recombination.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{self, PolyP};
use super::{Integer, Rational, UniPoly};
use crate::error::{Error, Result};

/// Squarefree parts above this degree are returned unfactored.
pub const DEGREE_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFactor {
    /// Primitive integer polynomial with positive leading coefficient.
    pub poly: UniPoly<Rational>,
    pub multiplicity: u32,
    /// Set when the factor exceeded the degree cap and may be reducible.
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniFactorization {
    pub unit: Rational,
    pub factors: Vec<UniFactor>,
}

impl UniFactorization {
    pub fn pairs(&self) -> Vec<(UniPoly<Rational>, u32)> {
        self.factors.iter().map(|f| (f.poly.clone(), f.multiplicity)).collect()
    }

    pub fn expand(&self) -> UniPoly<Rational> {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
    }
}

pub fn factor_univariate(p: &UniPoly<Rational>) -> Result<UniFactorization> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let mut factors = Vec::new();
    let mut rest = p.clone();
    for (part, mult) in p.squarefree_decomposition() {
        let (_, prim) = part.primitive_integer();
        let pieces: Vec<(Vec<Integer>, bool)> = if prim.len() - 1 > DEGREE_CAP {
            vec![(prim, true)]
        } else {
            factor_squarefree(&prim).into_iter().map(|f| (f, false)).collect()
        };
        for (f, capped) in pieces {
            let poly = UniPoly::from_integer_coeffs(&f);
            rest = rest.exact_div(&poly.pow(mult)).expect("factor divides input");
            factors.push(UniFactor { poly, multiplicity: mult, capped });
        }
    }
    debug_assert!(rest.is_constant());
    factors.sort_by(|a, b| {
        let ka = (a.poly.deg(), a.poly.coeffs());
        let kb = (b.poly.deg(), b.poly.coeffs());
        ka.partial_cmp(&kb).unwrap_or(core::cmp::Ordering::Equal).then(a.multiplicity.cmp(&b.multiplicity))
    });
    Ok(UniFactorization { unit: rest.lc(), factors })
}

/// Irreducible factors (over Z, primitive, positive leading coefficient) of a
/// primitive squarefree integer polynomial.
pub fn factor_squarefree(f: &[Integer]) -> Vec<Vec<Integer>> {
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![normalize_sign(f.to_vec())];
    }
    if f[0].is_zero() {
        let mut out = factor_squarefree(&f[1..]);
        out.push(vec![BigInt::zero(), BigInt::one()]);
        return out;
    }
    let Some((p, facs)) = choose_prime(f) else {
        return vec![normalize_sign(f.to_vec())];
    };
    if facs.len() == 1 {
        return vec![normalize_sign(f.to_vec())];
    }
    let lc = f[n].abs();
    // Mignotte-style coefficient bound for any factor.
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm2.sqrt() + BigInt::one();
    let bound: BigInt = (BigInt::one() << n) * norm * &lc * 2;
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
    }
    let lifted = lift_tree(f, &facs, p, &pk);
    recombine(f.to_vec(), lifted, &pk)
}

fn normalize_sign(mut f: Vec<Integer>) -> Vec<Integer> {
    if f.last().is_some_and(|c| c.is_negative()) {
        for c in f.iter_mut() {
            *c = -c.clone();
        }
    }
    f
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..4000).filter(|&q| (2..).take_while(|d| d * d <= q).all(|d| q % d != 0))
}

fn reduce_mod_p(f: &[Integer], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    modp::trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().expect("small residue")).collect())
}

fn choose_prime(f: &[Integer]) -> Option<(u64, Vec<PolyP>)> {
    let n = f.len() - 1;
    let mut best: Option<(usize, u64)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&f[n] % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(f, p);
        let monic = modp::monic(&fp, p);
        if !modp::is_squarefree(&monic, p) {
            continue;
        }
        let r = modp::factor_count(&monic, p);
        if best.is_none_or(|(br, _)| r < br) {
            best = Some((r, p));
        }
        tried += 1;
        if r == 1 || tried >= 6 {
            break;
        }
    }
    let (_, p) = best?;
    let monic = modp::monic(&reduce_mod_p(f, p), p);
    Some((p, modp::berlekamp(&monic, p)))
}

type ZPoly = Vec<Integer>;

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zmod(a: &[Integer], m: &Integer) -> ZPoly {
    ztrim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zsym(a: &[Integer], m: &Integer) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half { r - m } else { r }
            })
            .collect(),
    )
}

fn zadd(a: &[Integer], b: &[Integer]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    ztrim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
}

fn zsub(a: &[Integer], b: &[Integer]) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    ztrim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn zmul(a: &[Integer], b: &[Integer]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ztrim(out)
}

fn zscale(a: &[Integer], c: &Integer) -> ZPoly {
    ztrim(a.iter().map(|x| x * c).collect())
}

/// Division by a monic `h` modulo `m`.
fn zdivrem_monic(a: &[Integer], h: &[Integer], m: &Integer) -> (ZPoly, ZPoly) {
    let dh = h.len() - 1;
    let mut r = zmod(a, m);
    if r.len() <= dh {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - dh];
    for k in (0..q.len()).rev() {
        let c = r[k + dh].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hc) in h.iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * hc).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(dh);
    (ztrim(q), zmod(&r, m))
}

fn from_modp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn inv_mod_big(a: &Integer, m: &Integer) -> Integer {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f ≡ lc(f)·Π facs (mod p)` to monic factors modulo `pk`.
fn lift_tree(f: &[Integer], facs: &[PolyP], p: u64, pk: &Integer) -> Vec<ZPoly> {
    if facs.len() == 1 {
        let lc = f.last().expect("nonzero").mod_floor(pk);
        let inv = inv_mod_big(&lc, pk);
        return vec![zmod(&zscale(f, &inv), pk)];
    }
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let lc_p = f.last().expect("nonzero").mod_floor(&BigInt::from(p)).to_u64().expect("small");
    let g0 = left.iter().fold(vec![lc_p], |acc, a| modp::mul(&acc, a, p));
    let h0 = right.iter().fold(vec![1u64], |acc, a| modp::mul(&acc, a, p));
    let (_, s0, t0) = modp::ext_gcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (from_modp(&g0), from_modp(&h0), from_modp(&s0), from_modp(&t0));
    let mut m = BigInt::from(p);
    while &m < pk {
        let m2 = &m * &m;
        let e = zmod(&zsub(f, &zmul(&g, &h)), &m2);
        let (q, r) = zdivrem_monic(&zmul(&s, &e), &h, &m2);
        let g1 = zmod(&zadd(&zadd(&g, &zmul(&t, &e)), &zmul(&q, &g)), &m2);
        let h1 = zmod(&zadd(&h, &r), &m2);
        let b = zmod(&zsub(&zadd(&zmul(&s, &g1), &zmul(&t, &h1)), &[BigInt::one()]), &m2);
        let (c, d) = zdivrem_monic(&zmul(&s, &b), &h1, &m2);
        s = zmod(&zsub(&s, &d), &m2);
        t = zmod(&zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &g1)), &m2);
        g = g1;
        h = h1;
        m = m2;
    }
    let g = zmod(&g, pk);
    let h = zmod(&h, pk);
    let mut out = lift_tree(&g, left, p, pk);
    out.extend(lift_tree(&h, right, p, pk));
    out
}

fn content(a: &[Integer]) -> Integer {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &[Integer]) -> ZPoly {
    let c = content(a);
    normalize_sign(a.iter().map(|x| x / &c).collect())
}

/// Exact division over Z; `None` when `b` does not divide `a`.
fn zdiv_exact(a: &[Integer], b: &[Integer]) -> Option<ZPoly> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return if a.is_empty() { Some(Vec::new()) } else { None };
    }
    if !b[0].is_zero() && !(&a[0] % &b[0]).is_zero() {
        return None;
    }
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    let lb = &b[db];
    for k in (0..q.len()).rev() {
        let top = &r[k + db];
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then(|| ztrim(q))
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, pk: &Integer) -> Vec<ZPoly> {
    let mut result = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let lc = f.last().expect("nonzero").clone();
            let prod = idx.iter().fold(vec![lc], |acc, &i| zmod(&zmul(&acc, &lifted[i]), pk));
            let cand = primitive(&zsym(&prod, pk));
            if let Some(q) = zdiv_exact(&f, &cand) {
                found = Some((idx.clone(), cand, q));
                break;
            }
            if !next_combination(&mut idx, lifted.len()) {
                break;
            }
        }
        match found {
            Some((idx, cand, q)) => {
                result.push(cand);
                f = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        result.push(normalize_sign(f));
    }
    result
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
