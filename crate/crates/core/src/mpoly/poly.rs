use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::numeric::{Field, GaussianRational, Rational, UniPoly};

/// Sparse multivariate polynomial. Terms are kept sorted ascending in the
/// polynomial's monomial order, so the leading term is the last one.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MPoly<F> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

pub type QPoly = MPoly<Rational>;
pub type GPoly = MPoly<GaussianRational>;

impl<F: Field> MPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, order: MonomialOrder::default(), terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_terms(nvars, vec![(Monomial::var(nvars, i, 1), F::one())])
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let n = m.nvars();
        Self::from_terms(n, vec![(m, c)])
    }

    /// Builds a polynomial in the default (grevlex) order, merging duplicate
    /// monomials and dropping zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, F)>) -> Self {
        Self::from_terms_ordered(nvars, MonomialOrder::default(), terms)
    }

    pub fn from_terms_ordered(nvars: usize, order: MonomialOrder, terms: Vec<(Monomial, F)>) -> Self {
        let mut map: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            if c.is_zero() {
                continue;
            }
            match map.get_mut(&m) {
                Some(e) => e.add_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Self { nvars, order, terms }
    }

    /// Internal: terms already sorted ascending in `order`, nonzero, distinct.
    fn from_sorted(nvars: usize, order: MonomialOrder, terms: Vec<(Monomial, F)>) -> Self {
        Self { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Self { nvars: self.nvars, order, terms }
    }

    /// Terms in ascending order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<F> {
        if self.is_zero() {
            return Some(F::zero());
        }
        self.is_constant().then(|| self.terms[0].1.clone())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading(&self) -> Option<&(Monomial, F)> {
        self.terms.last()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms.last().expect("leading monomial of zero").0
    }

    pub fn lc(&self) -> F {
        self.terms.last().map(|t| t.1.clone()).unwrap_or_else(F::zero)
    }

    pub fn coeff_of(&self, m: &Monomial) -> F {
        self.terms
            .binary_search_by(|t| self.order.cmp(&t.0, m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.iter().map(|t| t.0.degree() as i64).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.iter().map(|t| t.0.exp(var) as i64).max().unwrap_or(-1)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(var) > 0)
    }

    pub fn vars_used(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.involves(v)).collect()
    }

    /// Highest-index variable that occurs, if any.
    pub fn main_var(&self) -> Option<usize> {
        (0..self.nvars).rev().find(|&v| self.involves(v))
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
    }

    fn aligned<'a>(&self, rhs: &'a Self) -> alloc::borrow::Cow<'a, Self> {
        if rhs.order == self.order {
            alloc::borrow::Cow::Borrowed(rhs)
        } else {
            alloc::borrow::Cow::Owned(rhs.with_order(self.order))
        }
    }

    fn merge(&self, rhs: &Self, negate_rhs: bool) -> Self {
        self.check(rhs);
        if self.is_zero() && self.order != rhs.order {
            let r = rhs.with_order(self.order);
            return if negate_rhs { r.neg() } else { r };
        }
        let rhs = self.aligned(rhs);
        let ord = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &rhs.terms;
        while i < a.len() && j < b.len() {
            match ord.cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_rhs { b[j].1.negate() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs { a[i].1.minus(&b[j].1) } else { a[i].1.plus(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate_rhs { t.1.negate() } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Self::from_sorted(self.nvars, ord, out)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.merge(rhs, false)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.merge(rhs, true)
    }

    pub fn neg(&self) -> Self {
        Self::from_sorted(self.nvars, self.order, self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self { nvars: self.nvars, order: self.order, terms: Vec::new() };
        }
        Self::from_sorted(self.nvars, self.order, self.terms.iter().map(|(m, a)| (m.clone(), a.times(c))).collect())
    }

    /// `c · m · self`; order is preserved because monomial orders are
    /// multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self { nvars: self.nvars, order: self.order, terms: Vec::new() };
        }
        Self::from_sorted(
            self.nvars,
            self.order,
            self.terms.iter().map(|(t, a)| (t.mul(m), a.times(c))).collect(),
        )
    }

    /// `self - c·m·g`, in a single merge.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        self.sub(&self.aligned(g).mul_term(m, c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self { nvars: self.nvars, order: self.order, terms: Vec::new() };
        }
        let mut map: BTreeMap<Monomial, F> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.times(cb);
                match map.get_mut(&m) {
                    Some(e) => e.add_assign(&c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let ord = self.order;
        terms.sort_by(|a, b| ord.cmp(&a.0, &b.0));
        Self::from_sorted(self.nvars, ord, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars).with_order(self.order);
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

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv())
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.0[var];
                e.0[var] -= 1;
                (e, c.times(&F::from_i64(k as i64)))
            })
            .collect();
        Self::from_terms_ordered(self.nvars, self.order, terms)
    }

    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t.times(&point[v]);
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// Replaces `var` by the polynomial `value` (in the same ring).
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        let coeffs = self.coeffs_in(var);
        let mut acc = Self::zero(self.nvars).with_order(self.order);
        for c in coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    pub fn substitute_value(&self, var: usize, value: &F) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.clone();
                let k = e.0[var];
                e.0[var] = 0;
                let mut c = c.clone();
                for _ in 0..k {
                    c = c.times(value);
                }
                (e, c)
            })
            .collect();
        Self::from_terms_ordered(self.nvars, self.order, terms)
    }

    /// Coefficients with respect to `var` (index k holds the coefficient of
    /// `var^k`, with `var` removed).
    pub fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var);
        if d < 0 {
            return Vec::new();
        }
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); d as usize + 1];
        for (m, c) in &self.terms {
            let mut e = m.clone();
            let k = e.0[var] as usize;
            e.0[var] = 0;
            buckets[k].push((e, c.clone()));
        }
        // Removing a single variable keeps the relative order of the terms
        // within a bucket for lex and block orders but not always for
        // grevlex, so re-sort.
        buckets.into_iter().map(|t| Self::from_terms_ordered(self.nvars, self.order, t)).collect()
    }

    pub fn from_coeffs_in(nvars: usize, var: usize, coeffs: &[Self]) -> Self {
        let mut terms = Vec::new();
        let order = coeffs.first().map(|c| c.order).unwrap_or_default();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                let mut e = m.clone();
                e.0[var] += k as u32;
                terms.push((e, a.clone()));
            }
        }
        Self::from_terms_ordered(nvars, order, terms)
    }

    /// Leading coefficient with respect to `var`.
    pub fn lc_in(&self, var: usize) -> Self {
        self.coeffs_in(var).pop().unwrap_or_else(|| Self::zero(self.nvars))
    }

    pub fn to_univariate(&self, var: usize) -> Option<UniPoly<F>> {
        if self.terms.iter().any(|(m, _)| m.0.iter().enumerate().any(|(v, &e)| v != var && e > 0)) {
            return None;
        }
        let d = self.degree_in(var).max(0) as usize;
        let mut c = vec![F::zero(); d + 1];
        for (m, a) in &self.terms {
            c[m.exp(var) as usize] = a.clone();
        }
        Some(UniPoly::new(c))
    }

    pub fn from_univariate(nvars: usize, var: usize, p: &UniPoly<F>) -> Self {
        Self::from_terms(
            nvars,
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var(nvars, var, k as u32), c.clone()))
                .collect(),
        )
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> MPoly<G> {
        MPoly::from_terms_ordered(self.nvars, self.order, self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect())
    }

    pub fn conj(&self) -> Self {
        self.map_coeffs(|c| c.conj())
    }

    /// Moves variable `i` to position `map[i]` in a ring with `nvars` variables.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Self::from_terms_ordered(nvars, self.order, terms)
    }

    /// Exact quotient `self / d` when `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let d = self.aligned(d).into_owned();
        let (lm, lc) = d.leading().cloned().expect("nonzero");
        let inv = lc.inv();
        let mut r = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = r.leading().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c.times(&inv);
            r = r.sub_mul_term(&qc, &qm, &d);
            q.push((qm, qc));
        }
        Some(Self::from_terms_ordered(self.nvars, self.order, q))
    }

    /// Multivariate division with remainder by `divisors` (full reduction).
    pub fn reduce(&self, divisors: &[Self]) -> Self {
        let mut p = self.clone();
        let mut rem: Vec<(Monomial, F)> = Vec::new();
        'outer: while let Some((m, c)) = p.terms.last().cloned() {
            for g in divisors {
                let (gm, gc) = g.leading().expect("nonzero divisor");
                if gm.divides(&m) {
                    let q = gm.quotient_of(&m);
                    p = p.sub_mul_term(&c.over(gc), &q, g);
                    continue 'outer;
                }
            }
            p.terms.pop();
            rem.push((m, c));
        }
        rem.reverse();
        Self::from_sorted(self.nvars, self.order, rem)
    }

    /// Canonical rendering: terms from the leading one down, `*` between
    /// factors, `^` for powers.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (m, c) in self.terms.iter().rev() {
            let (neg, body) = c.render();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, names);
            if mono.is_empty() {
                s.push_str(&body);
            } else if body == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&body);
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }
}

pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[v].clone()),
            _ => parts.push(format!("{}^{}", names[v], e)),
        }
    }
    parts.join("*")
}

/// Default variable names `x1, x2, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl<F: Field> core::fmt::Display for MPoly<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

impl MPoly<Rational> {
    /// Splits off the rational content: `self = c · p` with `p` having
    /// coprime integer coefficients and positive leading coefficient.
    pub fn primitive_part(&self) -> (Rational, Self) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c * &den).to_integer());
        }
        let mut content = Rational::new(g, den);
        if self.lc().is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    pub fn primitive(&self) -> Self {
        self.primitive_part().1
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Rational {
        self.eval(point)
    }

    pub fn to_gaussian(&self) -> MPoly<GaussianRational> {
        self.map_coeffs(GaussianRational::from_rational)
    }

    pub fn from_ints(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (Monomial(e.to_vec()), Rational::from_integer((*c).into())))
                .collect(),
        )
    }

    /// Linear change of coordinates `x ↦ T x`, i.e. `p(T x)`. `t` must be
    /// square with `nvars` rows and invertible over the rationals.
    pub fn linear_change(&self, t: &[Vec<Rational>]) -> Result<Self> {
        let n = self.nvars;
        if t.len() != n || t.iter().any(|r| r.len() != n) {
            return Err(Error::VariableMismatch(format!("transformation must be {n}x{n}")));
        }
        if super::matrix::rational_det(t).is_zero() {
            return Err(Error::SingularTransform);
        }
        let images: Vec<Self> = (0..n)
            .map(|i| {
                Self::from_terms(
                    n,
                    (0..n).map(|j| (Monomial::var(n, j, 1), t[i][j].clone())).collect(),
                )
            })
            .collect();
        let mut acc = Self::zero(n).with_order(self.order);
        for (m, c) in &self.terms {
            let mut term = Self::constant(n, c.clone()).with_order(self.order);
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[v].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

impl MPoly<GaussianRational> {
    /// Real and imaginary parts: `self = re + i·im`.
    pub fn re_im(&self) -> (MPoly<Rational>, MPoly<Rational>) {
        let re = MPoly::from_terms_ordered(
            self.nvars,
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), c.re.clone())).collect(),
        );
        let im = MPoly::from_terms_ordered(
            self.nvars,
            self.order,
            self.terms.iter().map(|(m, c)| (m.clone(), c.im.clone())).collect(),
        );
        (re, im)
    }

    /// `Some` when every coefficient is real.
    pub fn to_rational(&self) -> Option<MPoly<Rational>> {
        let (re, im) = self.re_im();
        im.is_zero().then_some(re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::parse_poly;
    use crate::numeric::rational::int;
    use proptest::prelude::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| String::from(*s)).collect()
    }

    fn q(s: &str) -> QPoly {
        parse_poly(s, &names(&["x", "y", "z"])).unwrap()
    }

    #[test]
    fn derivative_and_substitution() {
        assert_eq!(q("x^2+y^2").derivative(0), q("2*x"));
        let p = q("(x^2+y^2+z^2)*(z-2)");
        assert!(p.substitute_value(2, &int(2)).is_zero());
        assert_eq!(p.substitute(2, &q("x")), q("(2*x^2+y^2)*(x-2)"));
    }

    #[test]
    fn gaussian_conjugate_product() {
        let n = names(&["x", "y"]);
        let g = crate::mpoly::parse::parse_gaussian("x + I*y", &n).unwrap();
        let prod = g.mul(&g.conj());
        assert_eq!(prod.to_rational().unwrap(), parse_poly("x^2+y^2", &n).unwrap());
    }

    #[test]
    fn rendering_is_canonical() {
        let n = names(&["x", "y", "z"]);
        assert_eq!(q("3 - x*z + y^2").render(&n), "y^2 - x*z + 3");
        assert_eq!(q("-x + 1").render(&n), "-x + 1");
        assert_eq!(q("1/2*x - 2/3").render(&n), "1/2*x - 2/3");
        assert_eq!(q("0").render(&n), "0");
    }

    #[test]
    fn linear_change_examples() {
        let n = names(&["x", "y"]);
        let xy = parse_poly("x*y", &n).unwrap();
        let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
        assert_eq!(xy.linear_change(&id).unwrap(), xy);
        let shear = vec![vec![int(1), int(1)], vec![int(0), int(1)]];
        assert_eq!(xy.linear_change(&shear).unwrap(), parse_poly("x*y+y^2", &n).unwrap());
        let inv = vec![vec![int(1), int(-1)], vec![int(0), int(1)]];
        assert_eq!(xy.linear_change(&shear).unwrap().linear_change(&inv).unwrap(), xy);
        let sing = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert_eq!(xy.linear_change(&sing), Err(Error::SingularTransform));
    }

    #[test]
    fn exact_division_and_reduction() {
        let a = q("x^3 - y^3");
        assert_eq!(a.exact_div(&q("x - y")).unwrap(), q("x^2 + x*y + y^2"));
        assert!(a.exact_div(&q("x + y")).is_none());
        let r = q("x^2*y + x*y^2 + y^2").reduce(&[q("x*y - 1"), q("y^2 - 1")]);
        assert_eq!(r, q("x + y + 1"));
    }

    fn arb_poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..2), -4i64..5), 0..5).prop_map(|ts| {
            QPoly::from_terms(3, ts.into_iter().map(|((a, b, c), k)| (Monomial(vec![a, b, c]), int(k))).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.add(&b).sub(&b), a.clone());
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            if !b.is_zero() {
                prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a.clone()));
            }
            let lex = a.with_order(MonomialOrder::Lex);
            prop_assert_eq!(lex.mul(&b).with_order(MonomialOrder::GrevLex), a.mul(&b));
        }
    }
}
