//! Buchberger's algorithm with the product and chain criteria and the normal
//! selection strategy, producing reduced Gröbner bases.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::mpoly::{MPoly, Monomial, MonomialOrder};
use crate::numeric::Field;

/// Full normal form of `f` modulo `basis` (leading monomials must be those
/// of `basis` in `f`'s order).
pub fn normal_form<F: Field>(f: &MPoly<F>, basis: &[MPoly<F>]) -> MPoly<F> {
    if basis.is_empty() || f.is_zero() {
        return f.clone();
    }
    f.reduce(basis)
}

pub fn s_polynomial<F: Field>(f: &MPoly<F>, g: &MPoly<F>) -> MPoly<F> {
    let (mf, cf) = f.leading().expect("nonzero");
    let (mg, cg) = g.leading().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.inv());
    let b = g.mul_term(&mg.quotient_of(&l), &cg.inv());
    a.sub(&b)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `order`,
/// monic and sorted by leading monomial (ascending).
pub fn groebner<F: Field>(gens: &[MPoly<F>], nvars: usize, order: MonomialOrder) -> Vec<MPoly<F>> {
    let mut basis: Vec<MPoly<F>> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut input: Vec<MPoly<F>> =
        gens.iter().map(|g| g.with_order(order)).filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    for g in input {
        let r = normal_form(&g, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return alloc::vec![MPoly::one(nvars).with_order(order)];
        }
        add_to_basis(&mut basis, &mut pairs, r.monic());
    }
    while let Some(pair) = select(&basis, &pairs, order) {
        pairs.remove(&pair);
        let (i, j) = pair;
        let (li, lj) = (basis[i].lm().clone(), basis[j].lm().clone());
        if li.coprime(&lj) || chain_criterion(&basis, &pairs, i, j) {
            continue;
        }
        let r = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return alloc::vec![MPoly::one(nvars).with_order(order)];
        }
        add_to_basis(&mut basis, &mut pairs, r.monic());
    }
    let reduced = interreduce(basis, order);
    debug_assert!(is_groebner(&reduced), "S-pair check failed on a constructed basis");
    reduced
}

fn add_to_basis<F: Field>(basis: &mut Vec<MPoly<F>>, pairs: &mut BTreeSet<(usize, usize)>, g: MPoly<F>) {
    let k = basis.len();
    basis.push(g);
    for i in 0..k {
        pairs.insert((i, k));
    }
}

/// Normal strategy: the pair with the smallest lcm of leading monomials.
fn select<F: Field>(
    basis: &[MPoly<F>],
    pairs: &BTreeSet<(usize, usize)>,
    order: MonomialOrder,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), Monomial)> = None;
    for &(i, j) in pairs {
        let l = basis[i].lm().lcm(basis[j].lm());
        let better = match &best {
            None => true,
            Some((_, bl)) => order.cmp(&l, bl) == Ordering::Less,
        };
        if better {
            best = Some(((i, j), l));
        }
    }
    best.map(|(p, _)| p)
}

fn chain_criterion<F: Field>(basis: &[MPoly<F>], pairs: &BTreeSet<(usize, usize)>, i: usize, j: usize) -> bool {
    let l = basis[i].lm().lcm(basis[j].lm());
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].lm().divides(&l)
            && !pairs.contains(&key(i, k))
            && !pairs.contains(&key(j, k))
    })
}

fn interreduce<F: Field>(mut basis: Vec<MPoly<F>>, order: MonomialOrder) -> Vec<MPoly<F>> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<MPoly<F>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            k != idx && h.lm().divides(g.lm()) && (h.lm() != g.lm() || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MPoly<F>> =
            minimal.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g.clone()).collect();
        out.push(normal_form(&minimal[i], &others).monic());
    }
    out.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    out
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner<F: Field>(basis: &[MPoly<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].lm().coprime(basis[j].lm()) {
                continue;
            }
            if !normal_form(&s_polynomial(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::Rational;

    const V: [&str; 3] = ["x", "y", "z"];

    fn q(s: &str) -> MPoly<Rational> {
        poly(s, &V).unwrap()
    }

    #[test]
    fn small_bases() {
        let g = groebner(&[q("x+y"), q("x-y")], 3, MonomialOrder::GrevLex);
        assert_eq!(g, alloc::vec![q("y"), q("x")]);
        assert_eq!(groebner(&[q("x^2")], 3, MonomialOrder::GrevLex), alloc::vec![q("x^2")]);
        assert_eq!(groebner(&[q("x"), q("x+1")], 3, MonomialOrder::GrevLex), alloc::vec![q("1")]);
    }

    #[test]
    fn twisted_cubic_pieces() {
        let g = groebner(&[q("y^2-x*z"), q("x^3-y*z")], 3, MonomialOrder::GrevLex);
        assert!(is_groebner(&g));
        assert!(!normal_form(&q("x^2*y - z^2"), &g).is_zero());
        let lex = groebner(&[q("y^2-x*z"), q("x^3-y*z")], 3, MonomialOrder::Lex);
        assert!(is_groebner(&lex));
    }
}
