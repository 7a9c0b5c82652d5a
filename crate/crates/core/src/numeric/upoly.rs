use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Field, Integer, Rational};

/// Dense univariate polynomial, coefficients stored low-to-high.
///
/// The variable is implicit; callers that move between univariate and
/// multivariate representations say which variable they mean.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial at -1.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.negate()).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_assign(&a.times(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].times(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].minus(&c.times(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// Quotient when `d` divides `self`, otherwise `None`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            // keeping the remainders monic bounds coefficient growth over Q
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·rhs = g`, `g` monic.
    pub fn ext_gcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = core::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Yun's algorithm: monic squarefree `s_i` with `self = lc · Π s_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = d.exact_div(&a0).expect("gcd divides");
        let mut dd = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&dd);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            c = dd.exact_div(&a).expect("gcd divides");
            dd = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            return String::from("0");
        }
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = c.render();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = body == "1";
            match k {
                0 => s.push_str(&body),
                _ => {
                    if !unit {
                        s.push_str(&body);
                        s.push('*');
                    }
                    s.push_str(var);
                    if k > 1 {
                        s.push('^');
                        s.push_str(&alloc::format!("{k}"));
                    }
                }
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("x"))
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from_integer(v.into())).collect())
    }

    /// `(content, primitive integer polynomial with positive leading coefficient)`
    /// such that `self = content · primitive`.
    pub fn primitive_integer(&self) -> (Rational, Vec<Integer>) {
        if self.is_zero() {
            return (Rational::zero(), Vec::new());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &den).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        let prim = ints.iter().map(|c| c / &g).collect();
        (Rational::new(g, den), prim)
    }

    pub fn from_integer_coeffs(c: &[Integer]) -> Self {
        Self::new(c.iter().map(|v| Rational::from_integer(v.clone())).collect())
    }

    /// Primitive integer form with positive leading coefficient, as rationals.
    pub fn primitive(&self) -> Self {
        Self::from_integer_coeffs(&self.primitive_integer().1)
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        self.compose(&Self::new(vec![c.clone(), Rational::one()]))
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::to_f64(c);
        }
        acc
    }
}
