//! Search for rational points on an algebraic set given by polynomial
//! equations over Q.
//!
//! Gröbner bases decide emptiness over C. Positive-dimensional fibres are cut
//! down by fixing an independent variable to small integers; zero-dimensional
//! systems branch on the rational roots of a univariate eliminant.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::Ideal;
use crate::mpoly::{MPoly, QPoly};
use crate::numeric::rational::{int, simplicity_key};
use crate::numeric::{factor_univariate, Rational};

/// Values tried for a free variable, in order.
const PROBES: [i64; 5] = [0, 1, -1, 2, -2];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search {
    Found(Vec<Rational>),
    /// No acceptable rational point exists.
    Infeasible,
    /// The search stopped without a proof either way.
    GaveUp,
}

/// First rational point of `V(eqs)` accepted by `accept`, using at most
/// `budget` Gröbner basis computations.
pub fn rational_point(
    eqs: &[QPoly],
    nvars: usize,
    budget: usize,
    mut accept: impl FnMut(&[Rational]) -> bool,
) -> Search {
    let mut s = Searcher { nvars, budget, accept: &mut accept };
    s.search(eqs.to_vec())
}

struct Searcher<'a> {
    nvars: usize,
    budget: usize,
    accept: &'a mut dyn FnMut(&[Rational]) -> bool,
}

impl Searcher<'_> {
    fn search(&mut self, eqs: Vec<QPoly>) -> Search {
        if self.budget == 0 {
            return Search::GaveUp;
        }
        self.budget -= 1;
        let n = self.nvars;
        let ideal = Ideal::new(n, eqs);
        if ideal.is_unit() {
            return Search::Infeasible;
        }
        if let Some(pt) = linear_point(ideal.basis(), n) {
            return if (self.accept)(&pt) { Search::Found(pt) } else { Search::Infeasible };
        }
        let sets = ideal.independent_sets();
        let dim = sets.iter().map(|s| s.len()).max().unwrap_or(0);
        if dim > 0 {
            let v = sets.iter().find(|s| s.len() == dim).expect("maximal set")[0];
            for c in PROBES {
                if let Search::Found(p) = self.branch(&ideal, v, int(c)) {
                    return Search::Found(p);
                }
            }
            // other values of the free variable were never tried
            return Search::GaveUp;
        }
        let v = (0..n).rev().find(|&v| !determined(ideal.basis(), v)).expect("some variable is undetermined");
        let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let elim = ideal.eliminate(&others);
        let Some(g) = elim.basis().first() else {
            return Search::GaveUp;
        };
        let uni = g.to_univariate(v).expect("eliminant is univariate");
        let mut roots = rational_roots(&uni);
        roots.sort_by_key(simplicity_key);
        let mut gave_up = false;
        for r in roots {
            match self.branch(&ideal, v, r) {
                Search::Found(p) => return Search::Found(p),
                Search::Infeasible => {}
                Search::GaveUp => gave_up = true,
            }
        }
        if gave_up {
            Search::GaveUp
        } else {
            Search::Infeasible
        }
    }

    fn branch(&mut self, ideal: &Ideal<Rational>, v: usize, value: Rational) -> Search {
        let n = self.nvars;
        let mut eqs = ideal.basis().to_vec();
        eqs.push(MPoly::var(n, v).sub(&MPoly::constant(n, value)));
        self.search(eqs)
    }
}

/// Rational roots of a univariate polynomial.
pub fn rational_roots(p: &crate::numeric::UniPoly<Rational>) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let Ok(f) = factor_univariate(p) else { return Vec::new() };
    f.factors
        .iter()
        .filter(|u| u.poly.degree() == Some(1))
        .map(|u| -(u.poly.coeff(0) / u.poly.coeff(1)))
        .collect()
}

fn determined(basis: &[QPoly], v: usize) -> bool {
    basis.iter().any(|g| g.total_degree() == 1 && g.vars_used() == vec![v])
}

/// The point, when the reduced basis is `{x_i - c_i}` for every variable.
fn linear_point(basis: &[QPoly], n: usize) -> Option<Vec<Rational>> {
    let mut pt = vec![Rational::zero(); n];
    let mut seen = vec![false; n];
    for g in basis {
        if g.total_degree() != 1 {
            return None;
        }
        let vars = g.vars_used();
        if vars.len() != 1 {
            return None;
        }
        let v = vars[0];
        let lc = g.coeff_of(&crate::mpoly::Monomial::var(n, v, 1));
        pt[v] = -(g.coeff_of(&crate::mpoly::Monomial::one(n)) / lc);
        seen[v] = true;
    }
    seen.iter().all(|&s| s).then_some(pt)
}
