use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Exponent vector over the ambient variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; nvars];
        v[i] = e;
        Self(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, rhs: &Self) -> bool {
        self.0.iter().zip(&rhs.0).all(|(a, b)| a <= b)
    }

    /// `rhs / self`, assuming divisibility.
    pub fn quotient_of(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(&rhs.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(&rhs.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        Self(self.0.iter().zip(&rhs.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, rhs: &Self) -> bool {
        self.0.iter().zip(&rhs.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of total degree ≤ d in `nvars` variables, graded lex
    /// (degree ascending; within a degree, lex with x₁ > x₂ > ... descending).
    pub fn all_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for deg in 0..=d {
            let mut cur = vec![0u32; nvars];
            of_degree(nvars, deg, 0, &mut cur, &mut out);
        }
        out
    }
}

fn of_degree(nvars: usize, left: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if left == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == nvars - 1 {
        cur[pos] = left;
        out.push(Monomial(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        of_degree(nvars, left - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

/// Monomial orders. Variable 0 is the largest variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Grevlex on variables `0..k`, then grevlex on `k..n`; eliminates the
    /// first `k` variables.
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GrevLex => grevlex(&a.0, &b.0),
            MonomialOrder::Block(k) => {
                let k = k.min(a.0.len());
                grevlex(&a.0[..k], &b.0[..k]).then_with(|| grevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}
