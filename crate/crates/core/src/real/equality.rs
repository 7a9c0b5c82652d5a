//! Deciding `I(S ∩ V(I)) = I` componentwise.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::component::{open_search, radical_gap, working_coordinates, LiftedPoint};
use super::SemialgebraicSet;
use crate::error::{Error, Result};
use crate::ideal::{complexified_split, decompose_scoped, Component, Primality, QIdeal, SplitResult};
use crate::mpoly::{GPoly, QPoly};
use crate::numeric::AlgebraicNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equality {
    Equal,
    NotEqual,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentOutcome {
    /// A point of `V(I_t) ∩ S` over an open cell of the free variables.
    Accepted { point: Vec<AlgebraicNumber>, interior: bool },
    NotRadical { witness: QPoly },
    ComplexSplit { witnesses: Vec<GPoly> },
    /// No lifted point over the open cells lies in `S`.
    NoPointInSet,
    Unknown(String),
}

impl ComponentOutcome {
    pub fn verdict(&self) -> Equality {
        match self {
            ComponentOutcome::Accepted { .. } => Equality::Equal,
            ComponentOutcome::Unknown(_) => Equality::Inconclusive,
            _ => Equality::NotEqual,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub prime: QIdeal,
    pub outcome: ComponentOutcome,
    /// Free variables used as the base of the decomposition.
    pub free: Vec<usize>,
    /// Real roots of the level-one projection factors.
    pub base_roots: Vec<AlgebraicNumber>,
    /// How the component was shown prime; `None` for the intersection
    /// reported when the ideal is not radical.
    pub primality: Option<Primality>,
}

#[derive(Clone, Debug)]
pub struct EqualityVerdict {
    pub verdict: Equality,
    pub components: Vec<ComponentReport>,
}

impl EqualityVerdict {
    /// Index of the first component that fails.
    pub fn failing(&self) -> Option<usize> {
        self.components.iter().position(|c| c.outcome.verdict() == Equality::NotEqual)
    }
}

/// Tests `I(S ∩ V(I)) = I` over a (possibly hinted) prime decomposition.
pub fn check_equality(set: &SemialgebraicSet, ideal: &QIdeal, hint: Option<&[QIdeal]>) -> Result<EqualityVerdict> {
    if set.nvars != ideal.nvars() {
        return Err(Error::VariableMismatch("set and ideal live in different rings".into()));
    }
    let cert = decompose_scoped(ideal, hint)?;
    if !cert.exact {
        let inter = cert.primes().into_iter().reduce(|a, b| a.intersect(&b)).expect("nonempty");
        let witness = inter.basis().iter().find(|g| !ideal.contains(g)).expect("strictly larger").clone();
        let report = plain_report(inter, ComponentOutcome::NotRadical { witness });
        return Ok(aggregate(alloc::vec![report]));
    }
    // a split anywhere already rules out equality
    let mut reports: Vec<Option<ComponentReport>> = alloc::vec![None; cert.components.len()];
    for (i, c) in cert.components.iter().enumerate() {
        if let Some(outcome) = algebraic_rejection(c) {
            reports[i] = Some(plain_report(c.prime.clone(), outcome));
        }
    }
    if reports.iter().flatten().all(|r| r.outcome.verdict() != Equality::NotEqual) {
        for (i, c) in cert.components.iter().enumerate() {
            if reports[i].is_none() {
                reports[i] = Some(
                    check_component(&c.prime, set)
                        .unwrap_or_else(|e| plain_report(c.prime.clone(), ComponentOutcome::Unknown(e.to_string()))),
                );
            }
        }
    }
    let reports = reports
        .into_iter()
        .zip(&cert.components)
        .filter_map(|(r, c)| r.map(|r| ComponentReport { primality: Some(c.primality), ..r }))
        .collect();
    Ok(aggregate(reports))
}

fn plain_report(prime: QIdeal, outcome: ComponentOutcome) -> ComponentReport {
    ComponentReport { prime, outcome, free: Vec::new(), base_roots: Vec::new(), primality: None }
}

fn aggregate(components: Vec<ComponentReport>) -> EqualityVerdict {
    let vs: Vec<Equality> = components.iter().map(|c| c.outcome.verdict()).collect();
    let verdict = if vs.contains(&Equality::NotEqual) {
        Equality::NotEqual
    } else if vs.contains(&Equality::Inconclusive) {
        Equality::Inconclusive
    } else {
        Equality::Equal
    };
    EqualityVerdict { verdict, components }
}

/// Non-radical or split components, decided without any decomposition of space.
fn algebraic_rejection(c: &Component) -> Option<ComponentOutcome> {
    if !c.is_radical() {
        let witness = c.prime.basis().iter().find(|g| !c.ideal.contains(g)).expect("prime is larger").clone();
        return Some(ComponentOutcome::NotRadical { witness });
    }
    if let Some(witness) = radical_gap(&c.prime) {
        return Some(ComponentOutcome::NotRadical { witness });
    }
    match complexified_split(&c.prime) {
        Ok(SplitResult::Split { witnesses }) => Some(ComponentOutcome::ComplexSplit { witnesses }),
        Ok(SplitResult::Inconclusive(why)) => Some(ComponentOutcome::Unknown(why)),
        Ok(SplitResult::PrimeOverC) => None,
        Err(e) => Some(ComponentOutcome::Unknown(e.to_string())),
    }
}

/// Searches for a point of `V(prime) ∩ S` over the open cells of the free
/// variables, preferring interior points of `S`.
pub fn check_component(prime: &QIdeal, set: &SemialgebraicSet) -> Result<ComponentReport> {
    let (coords, d) = working_coordinates(prime)?;
    let work = coords.forward_ideal(prime)?;
    let work_set = coords.forward_set(set)?;
    let search = open_search(&work, &work_set, d)?;
    let crate::real::Coordinates::Permutation { order } = &coords else { unreachable!("free variables permute") };
    let free = order[..d].to_vec();
    let outcome = match search.witness() {
        Some(LiftedPoint { point, interior }) => ComponentOutcome::Accepted {
            point: coords.point_back(point).expect("permutation"),
            interior: *interior,
        },
        None => ComponentOutcome::NoPointInSet,
    };
    Ok(ComponentReport { prime: prime.clone(), outcome, free, base_roots: search.base_roots, primality: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::mpoly::parse::poly;
    use crate::numeric::sign_at;
    use crate::real::{is_real, Constraint, Reality, Relation};
    use alloc::vec;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn id(names: &[&str], gens: &[&str]) -> QIdeal {
        Ideal::new(names.len(), gens.iter().map(|s| poly(s, names).unwrap()).collect())
    }

    fn ge(names: &[&str], g: &str) -> SemialgebraicSet {
        SemialgebraicSet::basic(names.len(), vec![Constraint { poly: poly(g, names).unwrap(), rel: Relation::Ge }])
    }

    #[test]
    fn tangent_disk_is_not_equal() {
        let s = ge(&["x", "y"], "1-x^2-(y-1)^2");
        let v = check_equality(&s, &id(&["x", "y"], &["y"]), None).unwrap();
        assert_eq!(v.verdict, Equality::NotEqual);
        assert_eq!(v.components[0].outcome, ComponentOutcome::NoPointInSet);
    }

    #[test]
    fn twisted_cubic_in_a_ball_is_equal() {
        let s = ge(&XYZ, "1-(x-1)^2-(y-1)^2-(z-1)^2");
        let i = id(&XYZ, &["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]);
        let v = check_equality(&s, &i, Some(std::slice::from_ref(&i))).unwrap();
        assert_eq!(v.verdict, Equality::Equal);
        let c = &v.components[0];
        assert_eq!(c.free, vec![0]);
        let roots: Vec<f64> = c.base_roots.iter().map(|r| r.to_f64()).collect();
        for target in [0.522613, 1.39169] {
            assert!(roots.iter().any(|r| (r - target).abs() < 1e-4), "{target} missing from {roots:?}");
        }
        let ComponentOutcome::Accepted { point, .. } = &c.outcome else { panic!() };
        for g in i.basis() {
            assert_eq!(sign_at(g, point).unwrap(), 0);
        }
        assert!(s.contains(point).unwrap());
    }

    #[test]
    fn whole_space_agrees_with_reality() {
        let cases: Vec<(Vec<&str>, Vec<&str>, Option<Vec<Vec<&str>>>)> = vec![
            (vec!["x", "y"], vec!["x^2+y^2"], None),
            (vec!["x", "y"], vec!["x*y"], Some(vec![vec!["x"], vec!["y"]])),
            (XYZ.to_vec(), vec!["x^2+y^2+z^2"], None),
            (vec!["x", "y"], vec!["x^2+y^2-1"], None),
        ];
        for (names, gens, hint) in cases {
            let i = id(&names, &gens);
            let hint: Option<Vec<QIdeal>> = hint.map(|h| h.iter().map(|g| id(&names, g)).collect());
            let e = check_equality(&SemialgebraicSet::whole(names.len()), &i, hint.as_deref()).unwrap();
            let r = is_real(&i, hint.as_deref()).unwrap();
            assert_eq!(e.verdict == Equality::Equal, r.verdict == Reality::Real, "{gens:?}");
        }
    }
}
