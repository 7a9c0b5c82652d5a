//! Enlarging `I` towards `I(S ∩ V(I))` by rounds of prime repair and
//! CAD-derived extra generators.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::component::{open_search, radical_gap};
use super::coords::permutations;
use super::equality::{check_equality, Equality, EqualityVerdict};
use super::{Coordinates, SemialgebraicSet};
use crate::cad::lift::restrict;
use crate::cad::{variety_cells, CadTree, CellKind, ProjectionLadder};
use crate::error::{Error, Result};
use crate::ideal::decompose::prove_prime;
use crate::ideal::{complexified_split, decompose_scoped, Ideal, QIdeal, SplitResult};
use crate::mpoly::factor::factor;
use crate::mpoly::gcd::lcm;
use crate::mpoly::QPoly;
use crate::numeric::{sign_at, Rational};

/// Repair passes per component before giving up on it.
const REPAIR_CAP: usize = 16;
/// Shears tried once no permutation of the variables works.
const SHEAR_CAP: usize = 32;
/// Permutations tried before shears.
const PERMUTATION_CAP: usize = 720;
/// Rounds of [`augment_to_fixpoint`].
pub const ROUND_CAP: usize = 16;

#[derive(Clone, Debug)]
pub struct Augmentation {
    /// The enlarged ideal.
    pub ideal: QIdeal,
    /// Components of the enlarged ideal, usable as the next round's hint.
    pub components: Vec<QIdeal>,
    /// Components after radical and split repair.
    pub repaired: Vec<QIdeal>,
    /// Failing component of maximal dimension, when one exists.
    pub chosen: Option<usize>,
    /// Extra generator per repaired component (in original coordinates).
    pub extra: Vec<QPoly>,
    pub coordinates: Coordinates,
}

/// One round of augmentation. The result strictly contains `ideal`.
pub fn augment(set: &SemialgebraicSet, ideal: &QIdeal, hint: Option<&[QIdeal]>) -> Result<Augmentation> {
    let n = ideal.nvars();
    let cert = decompose_scoped(ideal, hint)?;
    let repaired = repair(cert.primes())?;
    if repaired.is_empty() {
        return Err(Error::Precondition("the real variety is empty; the unit ideal is the answer".into()));
    }
    let dims: Vec<usize> = repaired.iter().map(|c| c.dimension() as usize).collect();
    let coords = choose_coordinates(&repaired, &dims)?;
    let work: Vec<QIdeal> = repaired.iter().map(|c| coords.forward_ideal(c)).collect::<Result<_>>()?;
    let work_set = coords.forward_set(set)?;
    let mut failing = Vec::new();
    for (t, c) in work.iter().enumerate() {
        if open_search(c, &work_set, dims[t])?.witness().is_none() {
            failing.push(t);
        }
    }
    if failing.is_empty() {
        let inter = intersect_all(&repaired, n);
        if ideal.contains_ideal(&inter) {
            return Err(Error::Precondition("every component already satisfies the vanishing-ideal test".into()));
        }
        return Ok(Augmentation {
            ideal: inter,
            components: repaired.clone(),
            repaired,
            chosen: None,
            extra: Vec::new(),
            coordinates: coords,
        });
    }
    let dmax = failing.iter().map(|&t| dims[t]).max().expect("nonempty");
    let t0 = *failing.iter().find(|&&t| dims[t] == dmax).expect("maximum is attained");
    let mut extra_work = Vec::with_capacity(work.len());
    for (t, c) in work.iter().enumerate() {
        let f = if failing.contains(&t) {
            cell_generator(c, &work_set, dims[t])?
        } else {
            c.basis()
                .iter()
                .find(|g| !work[t0].contains(g))
                .cloned()
                .ok_or_else(|| Error::Internal("component contained in the chosen one".into()))?
        };
        extra_work.push(f);
    }
    let mut components = Vec::new();
    let mut extra = Vec::new();
    for (c, f) in work.iter().zip(&extra_work) {
        let enlarged = coords.backward_ideal(&c.add_gens(core::slice::from_ref(f)))?;
        extra.push(coords.backward(f)?);
        if !enlarged.is_unit() {
            components.push(enlarged);
        }
    }
    let out = intersect_all(&components, n);
    if ideal.contains_ideal(&out) {
        return Err(Error::Internal("augmentation did not enlarge the ideal".into()));
    }
    Ok(Augmentation { ideal: out, components, repaired, chosen: Some(t0), extra, coordinates: coords })
}

fn intersect_all(parts: &[QIdeal], n: usize) -> QIdeal {
    parts.iter().cloned().reduce(|a, b| a.intersect(&b)).unwrap_or_else(|| Ideal::unit(n))
}

/// Replaces each component by a radical, complex-prime one where possible:
/// squarefree parts of basis elements are added, principal components are
/// factored, and split components gain the real and imaginary parts of the
/// witnesses.
fn repair(primes: Vec<QIdeal>) -> Result<Vec<QIdeal>> {
    let mut work = primes;
    let mut done: Vec<QIdeal> = Vec::new();
    while let Some(mut c) = work.pop() {
        let mut settled = false;
        for _ in 0..REPAIR_CAP {
            while let Some(s) = radical_gap(&c) {
                c = c.add_gens(&[s]);
            }
            if c.is_unit() {
                settled = true;
                break;
            }
            if c.basis().len() == 1 && prove_prime(&c)?.is_none() {
                let n = c.nvars();
                for (p, _) in factor(&c.basis()[0])? {
                    work.push(Ideal::with_order(n, alloc::vec![p], c.order()));
                }
                settled = true;
                break;
            }
            match complexified_split(&c)? {
                SplitResult::Split { witnesses } => {
                    let parts: Vec<QPoly> = witnesses
                        .iter()
                        .flat_map(|w| {
                            let (re, im) = w.re_im();
                            [re, im]
                        })
                        .filter(|p| !p.is_zero())
                        .collect();
                    c = c.add_gens(&parts);
                }
                SplitResult::PrimeOverC | SplitResult::Inconclusive(_) => {
                    done.push(c.clone());
                    settled = true;
                    break;
                }
            }
        }
        if !settled {
            return Err(Error::BudgetExceeded(format!("component repair exceeded {REPAIR_CAP} passes")));
        }
    }
    // higher dimensions first, then by rendering; drop components containing others
    done.sort_by_cached_key(|c| (core::cmp::Reverse(c.dimension()), c.to_string_key()));
    let mut keep: Vec<QIdeal> = Vec::new();
    for c in done {
        if keep.iter().any(|k| c.contains_ideal(k)) {
            continue;
        }
        keep.retain(|k| !k.contains_ideal(&c));
        keep.push(c);
    }
    Ok(keep)
}

/// Coordinates in which the first `dims[t]` variables are free for every
/// component: permutations first, then integer shears.
fn choose_coordinates(components: &[QIdeal], dims: &[usize]) -> Result<Coordinates> {
    let n = components[0].nvars();
    let fits = |c: &Coordinates| -> Result<bool> {
        for (comp, &d) in components.iter().zip(dims) {
            let v: Vec<usize> = (0..d).collect();
            if c.forward_ideal(comp)?.rationally_trivial(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for order in permutations(n, PERMUTATION_CAP) {
        let c = Coordinates::Permutation { order };
        if fits(&c)? {
            return Ok(c);
        }
    }
    let mut attempts = 0;
    let mut k: i64 = 1;
    while attempts < SHEAR_CAP {
        for i in 0..n {
            for j in 0..n {
                if i == j || attempts >= SHEAR_CAP {
                    continue;
                }
                attempts += 1;
                let c = Coordinates::shear(n, i, j, Rational::from_integer(k.into()));
                if fits(&c)? {
                    return Ok(c);
                }
            }
        }
        k += 1;
    }
    Err(Error::BudgetExceeded(format!("no coordinate change found in {SHEAR_CAP} shears")))
}

/// Least common multiple of the defining polynomials of the base projections
/// of the cells of `V(I_t) ∩ S`; `1` when there are none.
fn cell_generator(work: &QIdeal, set: &SemialgebraicSet, d: usize) -> Result<QPoly> {
    let n = work.nvars();
    let mut polys = work.basis().to_vec();
    polys.extend(set.polys());
    let ladder = ProjectionLadder::new(&polys, n)?;
    let tree = CadTree::full(ladder)?;
    let mut picks: Vec<QPoly> = Vec::new();
    for cell in variety_cells(&tree, work.basis(), set)? {
        let base = tree.ancestor(cell, d);
        let Some(j) = (1..=d).rev().find(|&j| base.kinds[j - 1] == CellKind::Section) else {
            return Err(Error::Internal("a point over an open base cell was missed".into()));
        };
        let sample = &base.sample[..j];
        let mut best: Option<QPoly> = None;
        for p in &tree.ladder.levels[j - 1] {
            if sign_at(&restrict(p, j), sample)? == 0 {
                let better = best
                    .as_ref()
                    .is_none_or(|b| (p.total_degree(), p.to_string()) < (b.total_degree(), b.to_string()));
                if better {
                    best = Some(p.clone());
                }
            }
        }
        let p = best.ok_or_else(|| Error::Internal("section without a vanishing factor".into()))?;
        if !picks.contains(&p) {
            picks.push(p);
        }
    }
    Ok(picks.iter().fold(QPoly::one(n), |acc, p| lcm(&acc, p)))
}

/// Result of iterating [`augment`] until the vanishing-ideal test passes.
#[derive(Clone, Debug)]
pub struct Fixpoint {
    pub ideal: QIdeal,
    pub components: Option<Vec<QIdeal>>,
    pub rounds: Vec<Augmentation>,
    /// Verdict on the final ideal.
    pub verdict: EqualityVerdict,
}

pub fn augment_to_fixpoint(set: &SemialgebraicSet, ideal: &QIdeal, hint: Option<&[QIdeal]>) -> Result<Fixpoint> {
    let mut cur = ideal.clone();
    let mut parts: Option<Vec<QIdeal>> = hint.map(|h| h.to_vec());
    let mut rounds = Vec::new();
    for _ in 0..=ROUND_CAP {
        let verdict = check_equality(set, &cur, parts.as_deref())?;
        if verdict.verdict != Equality::NotEqual || rounds.len() == ROUND_CAP {
            if verdict.verdict == Equality::NotEqual {
                break;
            }
            return Ok(Fixpoint { ideal: cur, components: parts, rounds, verdict });
        }
        let round = augment(set, &cur, parts.as_deref())?;
        if !round.ideal.contains_ideal(&cur) || cur.contains_ideal(&round.ideal) {
            return Err(Error::Internal("augmentation round is not strictly increasing".into()));
        }
        cur = round.ideal.clone();
        parts = Some(round.components.clone());
        rounds.push(round);
    }
    Err(Error::BudgetExceeded(format!("no fixpoint after {ROUND_CAP} augmentation rounds")))
}

trait SortKey {
    fn to_string_key(&self) -> alloc::string::String;
}

impl SortKey for QIdeal {
    fn to_string_key(&self) -> alloc::string::String {
        self.render(&crate::mpoly::poly::default_names(self.nvars()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::real::{Constraint, Relation};
    use alloc::vec;

    const XYZ: [&str; 3] = ["x", "y", "z"];

    fn id(names: &[&str], gens: &[&str]) -> QIdeal {
        Ideal::new(names.len(), gens.iter().map(|s| poly(s, names).unwrap()).collect())
    }

    fn cylinder() -> SemialgebraicSet {
        SemialgebraicSet::basic(3, vec![Constraint { poly: poly("1-x^2-(z-1)^2", &XYZ).unwrap(), rel: Relation::Ge }])
    }

    #[test]
    fn first_round_on_sphere_and_plane() {
        let i = id(&XYZ, &["(x^2+y^2+z^2)*(z-2)"]);
        let r = augment(&cylinder(), &i, None).unwrap();
        let mut got = r.components.clone();
        got.sort_by_key(|c| c.to_string_key());
        let mut want = vec![id(&XYZ, &["x^2+y^2+z^2", "x^2+y^2"]), id(&XYZ, &["z-2", "x"])];
        want.sort_by_key(|c| c.to_string_key());
        assert_eq!(got, want);
        assert!(r.extra.contains(&poly("x^2+y^2", &XYZ).unwrap()));
        assert!(r.extra.contains(&poly("x", &XYZ).unwrap()));
    }

    #[test]
    fn fixpoint_on_sphere_and_plane() {
        let i = id(&XYZ, &["(x^2+y^2+z^2)*(z-2)"]);
        let f = augment_to_fixpoint(&cylinder(), &i, None).unwrap();
        assert_eq!(f.verdict.verdict, Equality::Equal);
        assert_eq!(f.ideal, id(&XYZ, &["x", "y*(z-2)", "z*(z-2)"]));
        assert_eq!(f.rounds.len(), 2);
        let mut prev = i;
        for r in &f.rounds {
            assert!(r.ideal.contains_ideal(&prev) && !prev.contains_ideal(&r.ideal));
            prev = r.ideal.clone();
        }
        // the second round turns <x^2+y^2, z^2> into the origin
        assert!(f.rounds[1].repaired.contains(&id(&XYZ, &["x", "y", "z"])));
    }

    #[test]
    fn split_witness_parts_are_added() {
        let f = augment_to_fixpoint(&SemialgebraicSet::whole(2), &id(&["x", "y"], &["x^2+y^2"]), None).unwrap();
        assert_eq!(f.ideal, id(&["x", "y"], &["x", "y"]));
        assert_eq!(f.verdict.verdict, Equality::Equal);
    }

    #[test]
    fn tangent_disk_gains_the_origin() {
        let s = SemialgebraicSet::basic(
            2,
            vec![Constraint { poly: poly("1-x^2-(y-1)^2", &["x", "y"]).unwrap(), rel: Relation::Ge }],
        );
        let f = augment_to_fixpoint(&s, &id(&["x", "y"], &["y"]), None).unwrap();
        assert_eq!(f.ideal, id(&["x", "y"], &["x", "y"]));
    }

    #[test]
    fn shears_when_no_permutation_works() {
        let comps = [id(&["x", "y"], &["x"]), id(&["x", "y"], &["y"])];
        let c = choose_coordinates(&comps, &[1, 1]).unwrap();
        assert!(matches!(c, Coordinates::Linear { .. }));
    }
}
