//! Prime decomposition in the cases we can certify: principal ideals (by
//! multivariate factorization) and user-supplied components that are checked
//! against the ideal.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{Ideal, QIdeal};
use crate::error::{Error, Result};
use crate::mpoly::factor::{factor, is_irreducible};
use crate::mpoly::{MPoly, MonomialOrder};
use crate::numeric::factor_univariate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Computed,
    UserSupplied,
}

/// Why a component's radical is prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primality {
    PrincipalIrreducible,
    /// Zero-dimensional, lex basis `{x_i - q_i(x_n)} ∪ {p(x_n)}` with `p` irreducible.
    ShapePosition,
    /// Generated by polynomials of degree at most one.
    Linear,
    /// Taken from the hint without proof.
    Trusted,
}

impl Primality {
    pub fn is_proved(self) -> bool {
        self != Primality::Trusted
    }
}

#[derive(Clone, Debug)]
pub struct Component {
    /// Primary component.
    pub ideal: QIdeal,
    /// Its radical, the associated prime.
    pub prime: QIdeal,
    pub primality: Primality,
}

impl Component {
    pub fn is_radical(&self) -> bool {
        self.ideal.same_ideal(&self.prime)
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionCertificate {
    pub components: Vec<Component>,
    pub origin: Origin,
    /// `true` when the components intersect to the ideal itself, `false` when
    /// only the zero sets agree.
    pub exact: bool,
}

impl DecompositionCertificate {
    pub fn primes(&self) -> Vec<QIdeal> {
        self.components.iter().map(|c| c.prime.clone()).collect()
    }
}

/// Decomposes `ideal`; non-principal ideals need `hint` unless they are
/// provably prime already.
pub fn decompose_scoped(ideal: &QIdeal, hint: Option<&[QIdeal]>) -> Result<DecompositionCertificate> {
    let n = ideal.nvars();
    if let Some(parts) = hint {
        return verify_hint(ideal, parts);
    }
    if ideal.is_unit() {
        return Ok(DecompositionCertificate { components: Vec::new(), origin: Origin::Computed, exact: true });
    }
    if ideal.basis().len() == 1 {
        let f = &ideal.basis()[0];
        let mut components = Vec::new();
        for (p, e) in factor(f)? {
            let prime = Ideal::with_order(n, vec![p.clone()], ideal.order());
            let primary = Ideal::with_order(n, vec![p.pow(e)], ideal.order());
            components.push(Component { ideal: primary, prime, primality: Primality::PrincipalIrreducible });
        }
        return Ok(DecompositionCertificate { components, origin: Origin::Computed, exact: true });
    }
    if let Some(why) = prove_prime(ideal)? {
        let c = Component { ideal: ideal.clone(), prime: ideal.clone(), primality: why };
        return Ok(DecompositionCertificate { components: vec![c], origin: Origin::Computed, exact: true });
    }
    Err(Error::UnsupportedScope(format!(
        "non-principal ideal with {} basis elements needs a decomposition hint",
        ideal.basis().len()
    )))
}

fn verify_hint(ideal: &QIdeal, parts: &[QIdeal]) -> Result<DecompositionCertificate> {
    let n = ideal.nvars();
    if parts.iter().any(|p| p.nvars() != n) {
        return Err(Error::VariableMismatch("hint component lives in a different ring".into()));
    }
    if parts.is_empty() {
        if ideal.is_unit() {
            return Ok(DecompositionCertificate { components: Vec::new(), origin: Origin::UserSupplied, exact: true });
        }
        return Err(Error::Precondition("empty hint for a proper ideal".into()));
    }
    let mut components: Vec<Component> = Vec::new();
    for p in parts {
        let p = p.reorder(ideal.order());
        if p.is_unit() {
            return Err(Error::Precondition("hint component is the unit ideal".into()));
        }
        let primality = prove_prime(&p)?.unwrap_or(Primality::Trusted);
        components.push(Component { ideal: p.clone(), prime: p, primality });
    }
    // a component containing another one adds nothing to the intersection
    let mut keep = vec![true; components.len()];
    for i in 0..components.len() {
        for j in 0..components.len() {
            if i != j && keep[j] && keep[i] && components[i].prime.contains_ideal(&components[j].prime) {
                let same = components[j].prime.contains_ideal(&components[i].prime);
                if !same || j < i {
                    keep[i] = false;
                }
            }
        }
    }
    let components: Vec<Component> =
        components.into_iter().zip(keep).filter_map(|(c, k)| k.then_some(c)).collect();
    let mut inter = components[0].prime.clone();
    for c in &components[1..] {
        inter = inter.intersect(&c.prime);
    }
    let exact = inter.same_ideal(ideal);
    if !exact {
        let contained = components.iter().all(|c| c.prime.contains_ideal(ideal));
        if !contained || !inter.same_radical(ideal) {
            return Err(Error::Precondition(format!(
                "hint components do not intersect to the ideal {}",
                ideal.render(&crate::mpoly::poly::default_names(n))
            )));
        }
    }
    Ok(DecompositionCertificate { components, origin: Origin::UserSupplied, exact })
}

/// Primality proofs for the classes we can decide.
pub fn prove_prime(ideal: &QIdeal) -> Result<Option<Primality>> {
    if ideal.is_unit() {
        return Ok(None);
    }
    let basis = ideal.basis();
    if basis.iter().all(|g| g.total_degree() <= 1) {
        return Ok(Some(Primality::Linear));
    }
    if basis.len() == 1 {
        let f = &basis[0];
        if f.total_degree() <= crate::mpoly::factor::MULTI_DEGREE_CAP && is_irreducible(f)? {
            return Ok(Some(Primality::PrincipalIrreducible));
        }
        return Ok(None);
    }
    if ideal.dimension() == 0 && shape_position(ideal)? {
        return Ok(Some(Primality::ShapePosition));
    }
    Ok(None)
}

/// Shape position with respect to some variable moved to the end.
fn shape_position(ideal: &QIdeal) -> Result<bool> {
    let n = ideal.nvars();
    for v in (0..n).rev() {
        let mut perm: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        perm.push(v);
        let mut to_new = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let moved = Ideal::with_order(n, ideal.basis().iter().map(|g| g.remap(n, &to_new)).collect(), MonomialOrder::Lex);
        if shape_in_last(&moved)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn shape_in_last(lex: &QIdeal) -> Result<bool> {
    let n = lex.nvars();
    let basis = lex.basis();
    if basis.len() != n || n == 0 {
        return Ok(false);
    }
    let last = n - 1;
    let Some(p) = basis[0].to_univariate(last) else { return Ok(false) };
    if !basis[0].vars_used().iter().all(|&v| v == last) {
        return Ok(false);
    }
    for (k, g) in basis[1..].iter().enumerate() {
        let v = last - 1 - k;
        if g.lm() != &crate::mpoly::Monomial::var(n, v, 1) || g.vars_used().iter().any(|&w| w != v && w != last) {
            return Ok(false);
        }
    }
    let f = factor_univariate(&p)?;
    Ok(f.factors.len() == 1 && f.factors[0].multiplicity == 1 && !f.factors[0].capped)
}

/// Convenience for principal ideals: factors as prime ideals.
pub fn principal_components(f: &MPoly<crate::numeric::Rational>) -> Result<Vec<QIdeal>> {
    let n = f.nvars();
    Ok(factor(f)?.into_iter().map(|(p, _)| Ideal::new(n, vec![p])).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::mpoly::QPoly;

    const V: [&str; 3] = ["x", "y", "z"];

    fn q(s: &str) -> QPoly {
        poly(s, &V).unwrap()
    }

    fn id(gens: &[&str]) -> QIdeal {
        Ideal::new(3, gens.iter().map(|s| q(s)).collect())
    }

    fn primes(c: &DecompositionCertificate) -> Vec<QIdeal> {
        c.primes()
    }

    #[test]
    fn principal_products() {
        let c = decompose_scoped(&id(&["(x^2+y^2)*z"]), None).unwrap();
        assert_eq!(primes(&c), vec![id(&["z"]), id(&["x^2+y^2"])]);
        assert!(c.components.iter().all(|k| k.primality == Primality::PrincipalIrreducible));
        let c = decompose_scoped(&id(&["(x^2+y^2+z^2)*(z-2)"]), None).unwrap();
        assert_eq!(primes(&c), vec![id(&["z-2"]), id(&["x^2+y^2+z^2"])]);
    }

    #[test]
    fn repeated_factors_are_primary() {
        let c = decompose_scoped(&id(&["x^2*(y-1)"]), None).unwrap();
        assert_eq!(c.components.len(), 2);
        let sq = c.components.iter().find(|k| k.prime == id(&["x"])).unwrap();
        assert!(!sq.is_radical());
        assert_eq!(sq.ideal, id(&["x^2"]));
    }

    #[test]
    fn hints_are_verified() {
        let c = decompose_scoped(&id(&["x*y"]), Some(&[id(&["x"]), id(&["y"])])).unwrap();
        assert!(c.exact);
        assert_eq!(c.origin, Origin::UserSupplied);
        assert!(decompose_scoped(&id(&["x*y"]), Some(&[id(&["x"])])).is_err());
        let curve = id(&["y^2-x*z", "x^3-y*z"]);
        let j = id(&["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]);
        let c = decompose_scoped(&curve, Some(&[j.clone(), id(&["x", "y"])])).unwrap();
        assert!(c.exact);
        assert_eq!(c.components[0].primality, Primality::Trusted);
        assert_eq!(c.components[1].primality, Primality::Linear);
    }

    #[test]
    fn radical_hints_and_redundancy() {
        // ⟨x², xy⟩ has zero set {x = 0}
        let c = decompose_scoped(&id(&["x^2", "x*y"]), Some(&[id(&["x"]), id(&["x", "y"])])).unwrap();
        assert!(!c.exact);
        assert_eq!(c.components.len(), 1);
        let prime = id(&["x", "y"]);
        let c = decompose_scoped(&prime, Some(std::slice::from_ref(&prime))).unwrap();
        assert_eq!(primes(&c), vec![prime]);
    }

    #[test]
    fn unsupported_without_hint() {
        let curve = id(&["y^2-x*z", "x^3-y*z"]);
        assert!(matches!(decompose_scoped(&curve, None), Err(Error::UnsupportedScope(_))));
    }

    #[test]
    fn primality_classes() {
        assert_eq!(prove_prime(&id(&["x-1", "y+z"])).unwrap(), Some(Primality::Linear));
        assert_eq!(prove_prime(&id(&["x^2-2", "y-x", "z"])).unwrap(), Some(Primality::ShapePosition));
        assert_eq!(prove_prime(&id(&["x^2-1", "y", "z"])).unwrap(), None);
        assert_eq!(prove_prime(&id(&["x^2+y^2+z^2"])).unwrap(), Some(Primality::PrincipalIrreducible));
    }
}
