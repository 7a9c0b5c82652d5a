//! Bounded multivariate factorization over the rationals: squarefree
//! decomposition, content splitting, then Kronecker substitution to a
//! univariate factorization followed by recombination of its factors.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::gcd::{content_in, squarefree_decomposition};
use super::monomial::Monomial;
use super::poly::QPoly;
use crate::error::{Error, Result};
use crate::numeric::factor::factor_squarefree;
use crate::numeric::{Integer, Rational, UniPoly};

/// Total-degree cap for multivariate factorization.
pub const MULTI_DEGREE_CAP: i64 = 12;
/// Largest univariate image produced by the Kronecker substitution.
const IMAGE_DEGREE_CAP: u64 = 600;
/// Largest number of univariate factors tried in recombination.
const RECOMBINE_CAP: usize = 16;

/// Irreducible factors of `f` with multiplicities; each factor primitive with
/// positive leading coefficient, sorted by total degree then rendering.
pub fn factor(f: &QPoly) -> Result<Vec<(QPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    if f.total_degree() > MULTI_DEGREE_CAP {
        return Err(Error::UnsupportedScope(format!(
            "multivariate factorization is capped at total degree {MULTI_DEGREE_CAP}"
        )));
    }
    let mut out = Vec::new();
    for (part, e) in squarefree_decomposition(f) {
        for g in factor_squarefree_multi(&part)? {
            out.push((g, e));
        }
    }
    out.sort_by(|a, b| {
        a.0.total_degree().cmp(&b.0.total_degree()).then_with(|| a.0.to_string().cmp(&b.0.to_string()))
    });
    Ok(out)
}

/// Irreducible factors of a squarefree primitive polynomial.
pub fn factor_squarefree_multi(f: &QPoly) -> Result<Vec<QPoly>> {
    let vars = f.vars_used();
    if vars.is_empty() {
        return Ok(Vec::new());
    }
    for &v in &vars {
        let c = content_in(f, v);
        if !c.is_constant() {
            let mut out = factor_squarefree_multi(&c)?;
            out.extend(factor_squarefree_multi(&f.exact_div(&c).expect("content divides"))?);
            return Ok(out);
        }
    }
    kronecker(f, &vars)
}

fn kronecker(f: &QPoly, vars: &[usize]) -> Result<Vec<QPoly>> {
    let n = f.nvars();
    let (_, f) = f.primitive_part();
    let radix: Vec<u64> = vars.iter().map(|&v| f.degree_in(v) as u64 + 1).collect();
    let mut weights = Vec::with_capacity(vars.len());
    let mut w = 1u64;
    for r in &radix {
        weights.push(w);
        w = w.saturating_mul(*r);
    }
    if w > IMAGE_DEGREE_CAP + 1 {
        return Err(Error::UnsupportedScope(format!(
            "Kronecker image of degree {} exceeds the factorization cap",
            w - 1
        )));
    }
    let mut image = alloc::vec![BigInt::zero(); w as usize];
    for (m, c) in f.terms() {
        let e: u64 = vars.iter().zip(&weights).map(|(&v, wt)| m.exp(v) as u64 * wt).sum();
        image[e as usize] = c.to_integer();
    }
    while image.last().is_some_and(|c| c.is_zero()) {
        image.pop();
    }
    // The image of a squarefree polynomial need not be squarefree, so every
    // squarefree part is factored and repeated by its multiplicity.
    let mut ufacs = Vec::new();
    for (part, e) in UniPoly::from_integer_coeffs(&image).squarefree_decomposition() {
        let (_, prim) = part.primitive_integer();
        for g in factor_squarefree(&prim) {
            for _ in 0..e {
                ufacs.push(g.clone());
            }
        }
    }
    if ufacs.len() <= 1 {
        return Ok(alloc::vec![f.clone()]);
    }
    if ufacs.len() > RECOMBINE_CAP {
        return Err(Error::UnsupportedScope(format!(
            "Kronecker image splits into {} factors; recombination is capped at {RECOMBINE_CAP}",
            ufacs.len()
        )));
    }
    let invert = |u: &[Integer]| -> Option<QPoly> {
        let mut terms = Vec::new();
        for (e, c) in u.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut rest = e as u64;
            let mut exps = alloc::vec![0u32; n];
            for (i, &v) in vars.iter().enumerate().rev() {
                let d = rest / weights[i];
                rest %= weights[i];
                if d >= radix[i] {
                    return None;
                }
                exps[v] = d as u32;
            }
            terms.push((Monomial(exps), Rational::from_integer(c.clone())));
        }
        Some(QPoly::from_terms(n, terms))
    };
    let mut remaining: Vec<Vec<Integer>> = ufacs;
    let mut current = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'search: while 2 * size <= remaining.len() {
        for subset in subsets(remaining.len(), size) {
            let prod = subset.iter().fold(alloc::vec![BigInt::one()], |acc, &i| zmul(&acc, &remaining[i]));
            let Some(g) = invert(&prod) else { continue };
            if g.is_constant() {
                continue;
            }
            if let Some(q) = current.exact_div(&g) {
                found.push(g.primitive());
                current = q;
                let mut k = 0;
                remaining.retain(|_| {
                    let keep = !subset.contains(&k);
                    k += 1;
                    keep
                });
                continue 'search;
            }
        }
        size += 1;
    }
    if !current.is_constant() {
        found.push(current.primitive());
    }
    Ok(found)
}

fn zmul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// True when `f` is irreducible over the rationals (within the caps).
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    if f.is_constant() {
        return Ok(false);
    }
    let fs = factor(f)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use proptest::prelude::*;

    const V: [&str; 3] = ["x", "y", "z"];

    fn q(s: &str) -> QPoly {
        poly(s, &V).unwrap()
    }

    fn factor_set(s: &str) -> Vec<QPoly> {
        factor(&q(s)).unwrap().into_iter().map(|(p, _)| p).collect()
    }

    #[test]
    fn principal_examples() {
        assert_eq!(factor_set("(x^2+y^2)*z"), alloc::vec![q("z"), q("x^2+y^2")]);
        assert_eq!(factor_set("(x^2+y^2+z^2)*(z-2)"), alloc::vec![q("z-2"), q("x^2+y^2+z^2")]);
        assert_eq!(factor_set("x^2 - y^2"), alloc::vec![q("x+y"), q("x-y")]);
        assert_eq!(factor_set("4*x^2 + 4*y^2 + y^4"), alloc::vec![q("4*x^2 + 4*y^2 + y^4")]);
        assert_eq!(factor_set("x^4 - y^4"), alloc::vec![q("x+y"), q("x-y"), q("x^2+y^2")]);
        let f = factor(&q("x^2*(x*y - z^2)^3")).unwrap();
        assert_eq!(f, alloc::vec![(q("x"), 2), (q("x*y - z^2"), 3)]);
    }

    #[test]
    fn capped_inputs_are_rejected() {
        assert!(matches!(factor(&q("x^13 + y")), Err(Error::UnsupportedScope(_))));
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 1), alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]]);
        assert_eq!(subsets(2, 2), alloc::vec![alloc::vec![0, 1]]);
    }

    fn arb_lin() -> impl Strategy<Value = QPoly> {
        (-3i64..4, -3i64..4, 1i64..4, -3i64..4).prop_map(|(a, b, c, d)| {
            q(&alloc::format!("{a}*x + {b}*y + {c}*z + {d}"))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn factors_reexpand(a in arb_lin(), b in arb_lin(), c in arb_lin()) {
            let f = a.mul(&b).mul(&c.add(&q("x^2")));
            let fs = factor(&f).unwrap();
            let prod = fs.iter().fold(q("1"), |acc, (p, e)| acc.mul(&p.pow(*e)));
            prop_assert_eq!(prod.primitive(), f.primitive());
            for (p, _) in &fs {
                prop_assert!(p.total_degree() >= 1);
            }
            prop_assert!(fs.iter().map(|(_, e)| *e as usize).sum::<usize>() >= 3, "{} / {} / {} -> {:?}", a, b, c, fs.iter().map(|(p, e)| alloc::format!("({p})^{e}")).collect::<Vec<_>>());
        }
    }
}
