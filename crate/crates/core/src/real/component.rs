//! Per-component search for points of `V(I_t) ∩ S` over the open cells of a
//! `d`-dimensional base, and the helpers shared by the reality and equality
//! tests.

use alloc::vec::Vec;

use super::{Coordinates, SemialgebraicSet};
use crate::cad::{CadTree, Policy, ProjectionLadder};
use crate::error::{Error, Result};
use crate::ideal::QIdeal;
use crate::mpoly::gcd::squarefree_part;
use crate::mpoly::{jacobian, QPoly};
use crate::numeric::algebraic::sort_dedup;
use crate::numeric::{isolate_real_roots, sign_at, AlgebraicNumber, Rational};

/// A lifted point of `V(I_t) ∩ S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedPoint {
    pub point: Vec<AlgebraicNumber>,
    /// Inside the interior of `S`.
    pub interior: bool,
}

#[derive(Clone, Debug)]
pub struct OpenSearch {
    /// Points over open base cells, in working coordinates.
    pub points: Vec<LiftedPoint>,
    /// Real roots of the level-one factors of the full ladder.
    pub base_roots: Vec<AlgebraicNumber>,
    pub tree: CadTree,
}

impl OpenSearch {
    /// Interior points first, then boundary points.
    pub fn witness(&self) -> Option<&LiftedPoint> {
        self.points.iter().find(|p| p.interior).or_else(|| self.points.first())
    }
}

/// Lifts the open cells of the base `R^d` through the sections of the
/// component's own ladder. Coordinates must already put the `d` free
/// variables first.
pub fn open_search(prime: &QIdeal, set: &SemialgebraicSet, d: usize) -> Result<OpenSearch> {
    let n = prime.nvars();
    let basis = prime.basis().to_vec();
    let mut with_set = basis.clone();
    with_set.extend(set.polys());
    let q = ProjectionLadder::new(&with_set, n)?;
    let p = ProjectionLadder::new(&basis, n)?;
    let mut levels = q.levels[..d].to_vec();
    levels.extend_from_slice(&p.levels[d..]);
    let ladder = ProjectionLadder { nvars: n, levels };
    let tree = CadTree::build(ladder, Policy::OpenThenSections(d), n)?;
    let mut points = Vec::new();
    'cells: for c in tree.top() {
        for g in &basis {
            if sign_at(g, &c.sample)? != 0 {
                continue 'cells;
            }
        }
        if set.contains(&c.sample)? {
            points.push(LiftedPoint { interior: set.strictly_contains(&c.sample)?, point: c.sample.clone() });
        }
    }
    let mut base_roots = Vec::new();
    for f in q.levels.first().into_iter().flatten() {
        base_roots.extend(isolate_real_roots(&f.to_univariate(0).expect("level one is univariate"))?);
    }
    sort_dedup(&mut base_roots);
    Ok(OpenSearch { points, base_roots, tree })
}

/// Lexicographically first set of `d` variables on which the ideal has no
/// nonzero polynomial.
pub fn free_variables(prime: &QIdeal, d: usize) -> Option<Vec<usize>> {
    let n = prime.nvars();
    let mut subset: Vec<usize> = (0..d).collect();
    loop {
        if !prime.rationally_trivial(&subset) {
            return Some(subset);
        }
        // next combination
        let i = (0..d).rev().find(|&i| subset[i] < n - d + i)?;
        subset[i] += 1;
        for j in i + 1..d {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

/// Coordinates that put the free variables of `prime` first.
pub fn working_coordinates(prime: &QIdeal) -> Result<(Coordinates, usize)> {
    let d = prime.dimension();
    if d < 0 {
        return Err(Error::Precondition("component is the unit ideal".into()));
    }
    let d = d as usize;
    let vars = free_variables(prime, d)
        .ok_or_else(|| Error::Internal("no free variable set of the ideal's dimension".into()))?;
    Ok((Coordinates::leading(prime.nvars(), &vars), d))
}

/// An element of `√I ∖ I` found among squarefree parts of basis elements.
pub fn radical_gap(ideal: &QIdeal) -> Option<QPoly> {
    ideal.basis().iter().map(squarefree_part).find(|s| !ideal.contains(s))
}

/// Rank of the Jacobian of the reduced basis at a point of `V(I)`.
pub fn rank_at(ideal: &QIdeal, point: &[AlgebraicNumber]) -> Result<usize> {
    let n = ideal.nvars();
    if point.len() != n {
        return Err(Error::VariableMismatch("point dimension differs from the ring".into()));
    }
    for g in ideal.basis() {
        if sign_at(g, point)? != 0 {
            return Err(Error::Precondition("point is not on the variety".into()));
        }
    }
    let vars: Vec<usize> = (0..n).collect();
    let jac = jacobian(ideal.basis(), &vars);
    let rows: Vec<Vec<QPoly>> =
        (0..ideal.basis().len()).map(|i| (0..n).map(|j| jac.get(i, j).clone()).collect()).collect();
    if let Some(r) = point.iter().map(|a| a.as_rational().cloned()).collect::<Option<Vec<Rational>>>() {
        let m: Vec<Vec<Rational>> = rows.iter().map(|row| row.iter().map(|e| e.eval(&r)).collect()).collect();
        return Ok(crate::mpoly::matrix::rank(&m));
    }
    bareiss_rank(rows, point, n)
}

/// Fraction-free elimination on a polynomial matrix, pivoting on entries that
/// are nonzero at the point.
fn bareiss_rank(mut a: Vec<Vec<QPoly>>, point: &[AlgebraicNumber], n: usize) -> Result<usize> {
    let rows = a.len();
    let cols = n;
    let mut prev = QPoly::one(n);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut pivot = None;
        for i in r..rows {
            if !a[i][c].is_zero() && sign_at(&a[i][c], point)? != 0 {
                pivot = Some(i);
                break;
            }
        }
        let Some(p) = pivot else { continue };
        a.swap(p, r);
        for i in r + 1..rows {
            for k in c + 1..cols {
                let num = a[i][k].mul(&a[r][c]).sub(&a[i][c].mul(&a[r][k]));
                a[i][k] = num.exact_div(&prev).ok_or_else(|| Error::Internal("inexact fraction-free step".into()))?;
            }
            a[i][c] = QPoly::zero(n);
        }
        prev = a[r][c].clone();
        r += 1;
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::mpoly::parse::poly;
    use crate::numeric::rational::int;
    use crate::numeric::UniPoly;
    use alloc::vec;

    const V: [&str; 3] = ["x", "y", "z"];

    fn id(gens: &[&str]) -> QIdeal {
        Ideal::new(3, gens.iter().map(|s| poly(s, &V).unwrap()).collect())
    }

    fn pt(v: &[i64]) -> Vec<AlgebraicNumber> {
        v.iter().map(|&k| AlgebraicNumber::from_rational(int(k))).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_at(&id(&["x^2+y^2+z^2"]), &pt(&[0, 0, 0])).unwrap(), 0);
        let j = id(&["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]);
        assert_eq!(rank_at(&j, &pt(&[1, 1, 1])).unwrap(), 2);
        // two independent linear forms: rank 2 = n - dim
        let lin = id(&["x+y-1", "y-z"]);
        assert_eq!(rank_at(&lin, &pt(&[1, 0, 0])).unwrap(), 2);
        assert_eq!(rank_at(&lin, &pt(&[1, 0, 0])).unwrap() as i64, 3 - lin.dimension());
        assert!(rank_at(&lin, &pt(&[0, 0, 0])).is_err());
    }

    #[test]
    fn rank_at_algebraic_point() {
        let r = isolate_real_roots(&UniPoly::from_ints(&[-2, 0, 1])).unwrap()[1].clone();
        let circle = Ideal::new(2, vec![poly("x^2+y^2-4", &["x", "y"]).unwrap()]);
        assert_eq!(rank_at(&circle, &[r.clone(), r.clone()]).unwrap(), 1);
        let cone = Ideal::new(2, vec![poly("x^2-y^2", &["x", "y"]).unwrap()]);
        assert_eq!(rank_at(&cone, &[r.clone(), r]).unwrap(), 1);
    }

    #[test]
    fn free_variable_choice() {
        // the curve's leading terms allow {z}, but x is free as well and comes first
        let j = id(&["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]);
        assert_eq!(free_variables(&j, 1), Some(vec![0]));
        assert_eq!(free_variables(&id(&["x", "y"]), 1), Some(vec![2]));
        assert_eq!(free_variables(&id(&["z-2"]), 2), Some(vec![0, 1]));
    }

    #[test]
    fn radical_gaps() {
        assert_eq!(radical_gap(&id(&["x^2+y^2", "z^2"])), Some(poly("z", &V).unwrap()));
        assert_eq!(radical_gap(&id(&["x", "y"])), None);
    }
}
