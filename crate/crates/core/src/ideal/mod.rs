//! Polynomial ideals backed by reduced Gröbner bases: membership, equality,
//! elimination, intersection, quotient, dimension, radical membership, the
//! complexified splitting test and scoped decomposition.

pub mod decompose;
pub mod groebner;
pub mod solve;
pub mod split;

use alloc::string::String;
use alloc::vec::Vec;

use crate::mpoly::{MPoly, Monomial, MonomialOrder};
use crate::numeric::{Field, Rational};

pub use decompose::{decompose_scoped, Component, DecompositionCertificate, Origin, Primality};
pub use groebner::{groebner, is_groebner, normal_form};
pub use split::{complexified_split, SplitResult};

/// Ideal with its reduced Gröbner basis, computed at construction.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field = Rational> {
    nvars: usize,
    order: MonomialOrder,
    gens: Vec<MPoly<F>>,
    basis: Vec<MPoly<F>>,
}

pub type QIdeal = Ideal<Rational>;

impl<F: Field> PartialEq for Ideal<F> {
    /// Equality as ideals.
    fn eq(&self, other: &Self) -> bool {
        self.same_ideal(other)
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(nvars: usize, gens: Vec<MPoly<F>>) -> Self {
        Self::with_order(nvars, gens, MonomialOrder::GrevLex)
    }

    pub fn with_order(nvars: usize, gens: Vec<MPoly<F>>, order: MonomialOrder) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator lives in a different ring");
        }
        let basis = groebner(&gens, nvars, order);
        Self { nvars, order, gens, basis }
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, alloc::vec![MPoly::one(nvars)])
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn gens(&self) -> &[MPoly<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis, ascending by leading monomial.
    pub fn basis(&self) -> &[MPoly<F>] {
        &self.basis
    }

    pub fn reorder(&self, order: MonomialOrder) -> Self {
        Self::with_order(self.nvars, self.gens.clone(), order)
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, f: &MPoly<F>) -> MPoly<F> {
        normal_form(&f.with_order(self.order), &self.basis)
    }

    pub fn contains(&self, f: &MPoly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Self) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    pub fn same_ideal(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        if self.order == other.order {
            return self.basis == other.basis;
        }
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn add_gens(&self, extra: &[MPoly<F>]) -> Self {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::with_order(self.nvars, gens, self.order)
    }

    pub fn sum(&self, other: &Self) -> Self {
        self.add_gens(&other.gens)
    }

    pub fn product(&self, other: &Self) -> Self {
        let mut gens = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                gens.push(a.mul(b));
            }
        }
        Self::with_order(self.nvars, gens, self.order)
    }

    /// Polynomials of the ideal free of the variables in `vars`, as an ideal
    /// of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Self {
        let n = self.nvars;
        let k = vars.len();
        if k == 0 {
            return self.clone();
        }
        // permutation placing `vars` first
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|v| !vars.contains(v)));
        let mut to_new = alloc::vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let moved: Vec<MPoly<F>> = self.basis.iter().map(|g| g.remap(n, &to_new)).collect();
        let gb = groebner(&moved, n, MonomialOrder::Block(k));
        let kept: Vec<MPoly<F>> = gb
            .into_iter()
            .filter(|g| (0..k).all(|v| !g.involves(v)))
            .map(|g| g.remap(n, &perm).with_order(self.order))
            .collect();
        Self::with_order(n, kept, self.order)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let n = self.nvars;
        let shift: Vec<usize> = (1..=n).collect();
        let t = MPoly::<F>::var(n + 1, 0);
        let one_minus_t = MPoly::one(n + 1).sub(&t);
        let mut gens = Vec::new();
        for g in &self.basis {
            gens.push(g.remap(n + 1, &shift).mul(&t));
        }
        for g in &other.basis {
            gens.push(g.remap(n + 1, &shift).mul(&one_minus_t));
        }
        let gb = groebner(&gens, n + 1, MonomialOrder::Block(1));
        let mut back = alloc::vec![0usize; n + 1];
        for (i, b) in back.iter_mut().enumerate().skip(1) {
            *b = i - 1;
        }
        let kept: Vec<MPoly<F>> = gb
            .into_iter()
            .filter(|g| !g.involves(0))
            .map(|g| g.remap(n, &back).with_order(self.order))
            .collect();
        Self::with_order(n, kept, self.order)
    }

    /// `(I : ⟨g⟩)`.
    pub fn quotient(&self, g: &MPoly<F>) -> Self {
        assert!(!g.is_zero(), "quotient by the zero polynomial");
        let principal = Self::with_order(self.nvars, alloc::vec![g.clone()], self.order);
        let inter = self.intersect(&principal);
        let gens =
            inter.basis.iter().map(|h| h.exact_div(&g.with_order(self.order)).expect("g divides")).collect();
        Self::with_order(self.nvars, gens, self.order)
    }

    /// Membership in the radical, by the Rabinowitsch trick.
    pub fn radical_contains(&self, f: &MPoly<F>) -> bool {
        if self.contains(f) {
            return true;
        }
        let n = self.nvars;
        let shift: Vec<usize> = (0..n).collect();
        let t = MPoly::<F>::var(n + 1, n);
        let mut gens: Vec<MPoly<F>> = self.basis.iter().map(|g| g.remap(n + 1, &shift)).collect();
        gens.push(MPoly::one(n + 1).sub(&t.mul(&f.remap(n + 1, &shift))));
        let gb = groebner(&gens, n + 1, MonomialOrder::GrevLex);
        gb.len() == 1 && gb[0].is_constant()
    }

    /// `V(self) = V(other)` over ℂ.
    pub fn same_radical(&self, other: &Self) -> bool {
        self.basis.iter().all(|g| other.radical_contains(g)) && other.basis.iter().all(|g| self.radical_contains(g))
    }

    /// Leading monomials of the reduced basis.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().clone()).collect()
    }

    /// Maximal sets of variables independent modulo the leading-term ideal.
    pub fn independent_sets(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let lms = self.leading_monomials();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut cur = Vec::new();
        extend_independent(&lms, self.nvars, 0, &mut cur, &mut out);
        out
    }

    /// Krull dimension; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        self.independent_sets().iter().map(|s| s.len() as i64).max().unwrap_or(0)
    }

    /// True when the ideal contains a nonzero polynomial in the variables
    /// `subset` only (equivalently `1 ∈ k(subset)·I`).
    pub fn rationally_trivial(&self, subset: &[usize]) -> bool {
        let others: Vec<usize> = (0..self.nvars).filter(|v| !subset.contains(v)).collect();
        !self.eliminate(&others).is_zero()
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.basis.iter().rev().map(|g| g.render(names)).collect();
        alloc::format!("<{}>", parts.join(", "))
    }
}

fn independent(lms: &[Monomial], set: &[usize]) -> bool {
    lms.iter().all(|m| m.0.iter().enumerate().any(|(v, &e)| e > 0 && !set.contains(&v)))
}

/// Depth-first enumeration of maximal independent sets (Kredel–Weispfenning).
fn extend_independent(lms: &[Monomial], n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut extended = false;
    for v in start..n {
        cur.push(v);
        if independent(lms, cur) {
            extended = true;
            extend_independent(lms, n, v + 1, cur, out);
        }
        cur.pop();
    }
    if !extended {
        // maximal only if no earlier variable can be added either
        let maximal = (0..n).filter(|v| !cur.contains(v)).all(|v| {
            let mut s = cur.clone();
            s.push(v);
            !independent(lms, &s)
        });
        if maximal && !out.contains(cur) {
            out.push(cur.clone());
        }
    }
}

impl Ideal<Rational> {
    /// Gaussian-rational extension of the ideal (same generators).
    pub fn complexify(&self) -> Ideal<crate::numeric::GaussianRational> {
        Ideal::with_order(self.nvars, self.basis.iter().map(|g| g.to_gaussian()).collect(), self.order)
    }
}
