//! Deciding whether `I(V(I)) = I`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::component::{open_search, radical_gap, rank_at, working_coordinates};
use super::SemialgebraicSet;
use crate::cad::{variety_cells, CadTree, ProjectionLadder};
use crate::error::{Error, Result};
use crate::ideal::{complexified_split, decompose_scoped, Component, QIdeal, SplitResult};
use crate::mpoly::{GPoly, QPoly};
use crate::numeric::AlgebraicNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reality {
    Real,
    NotReal,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealityCertificate {
    /// A real point where the Jacobian rank is `n - dim`.
    RankDim { point: Vec<AlgebraicNumber>, rank: usize, dim: usize },
    /// A `dim`-dimensional cell of the real variety, cited by a sample.
    TopDim { point: Vec<AlgebraicNumber>, dim: usize },
    /// Factors `g` of the complexification, `I' = ∩ <I', g>∩<I', ḡ>`.
    ComplexSplit { witnesses: Vec<GPoly> },
    /// No real point over any open cell of the base, so the real variety has
    /// dimension below `dim`. `rank` is the largest Jacobian rank seen on it.
    RankDeficit { rank: Option<usize>, dim: usize, nvars: usize },
    /// An element of the radical that is not in the ideal.
    NotRadical { witness: QPoly },
    Unknown(String),
}

impl RealityCertificate {
    pub fn verdict(&self) -> Reality {
        match self {
            RealityCertificate::RankDim { .. } | RealityCertificate::TopDim { .. } => Reality::Real,
            RealityCertificate::Unknown(_) => Reality::Inconclusive,
            _ => Reality::NotReal,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComponentReality {
    pub prime: QIdeal,
    pub certificate: RealityCertificate,
}

#[derive(Clone, Debug)]
pub struct RealityVerdict {
    pub verdict: Reality,
    pub components: Vec<ComponentReality>,
}

/// Reality of `ideal`, componentwise over a (possibly hinted) prime
/// decomposition.
pub fn is_real(ideal: &QIdeal, hint: Option<&[QIdeal]>) -> Result<RealityVerdict> {
    let cert = match decompose_scoped(ideal, hint) {
        Ok(c) => c,
        Err(Error::UnsupportedScope(why)) => return undecomposed(ideal, why),
        Err(e) => return Err(e),
    };
    let mut components = Vec::new();
    if !cert.exact {
        let inter = cert.primes().into_iter().reduce(|a, b| a.intersect(&b)).expect("nonempty");
        let witness = inter.basis().iter().find(|g| !ideal.contains(g)).expect("strictly larger").clone();
        components.push(ComponentReality { prime: inter, certificate: RealityCertificate::NotRadical { witness } });
        return Ok(aggregate(components));
    }
    for c in &cert.components {
        let certificate = component_reality(c).unwrap_or_else(|e| RealityCertificate::Unknown(e.to_string()));
        components.push(ComponentReality { prime: c.prime.clone(), certificate });
    }
    Ok(aggregate(components))
}

/// Certificates that need no decomposition: a squarefree part outside the
/// ideal, or a split of the complexification (`g·ḡ ∈ I'` with `g ∉ I'`).
fn undecomposed(ideal: &QIdeal, why: String) -> Result<RealityVerdict> {
    let certificate = if let Some(witness) = radical_gap(ideal) {
        RealityCertificate::NotRadical { witness }
    } else if let SplitResult::Split { witnesses } = complexified_split(ideal)? {
        RealityCertificate::ComplexSplit { witnesses }
    } else {
        return Err(Error::UnsupportedScope(why));
    };
    Ok(aggregate(alloc::vec![ComponentReality { prime: ideal.clone(), certificate }]))
}

fn aggregate(components: Vec<ComponentReality>) -> RealityVerdict {
    let verdicts: Vec<Reality> = components.iter().map(|c| c.certificate.verdict()).collect();
    let verdict = if verdicts.contains(&Reality::NotReal) {
        Reality::NotReal
    } else if verdicts.contains(&Reality::Inconclusive) {
        Reality::Inconclusive
    } else {
        Reality::Real
    };
    RealityVerdict { verdict, components }
}

fn component_reality(c: &Component) -> Result<RealityCertificate> {
    if !c.is_radical() {
        let witness = c.prime.basis().iter().find(|g| !c.ideal.contains(g)).expect("prime is larger").clone();
        return Ok(RealityCertificate::NotRadical { witness });
    }
    let prime = &c.prime;
    if let Some(witness) = radical_gap(prime) {
        return Ok(RealityCertificate::NotRadical { witness });
    }
    match complexified_split(prime)? {
        SplitResult::Split { witnesses } => return Ok(RealityCertificate::ComplexSplit { witnesses }),
        SplitResult::Inconclusive(why) => return Ok(RealityCertificate::Unknown(why)),
        SplitResult::PrimeOverC => {}
    }
    let n = prime.nvars();
    let (coords, d) = working_coordinates(prime)?;
    let work = coords.forward_ideal(prime)?;
    let whole = SemialgebraicSet::whole(n);
    let search = open_search(&work, &whole, d)?;
    let mut best: Option<(usize, &[AlgebraicNumber])> = None;
    for p in &search.points {
        let r = rank_at(&work, &p.point)?;
        if best.is_none_or(|(b, _)| r > b) {
            best = Some((r, &p.point));
        }
        if r == n - d {
            break;
        }
    }
    let back = |p: &[AlgebraicNumber]| coords.point_back(p).expect("permutation");
    if let Some((rank, point)) = best {
        if rank == n - d {
            return Ok(RealityCertificate::RankDim { point: back(point), rank, dim: d });
        }
        return Ok(RealityCertificate::TopDim { point: back(point), dim: d });
    }
    let rank = max_rank_on_variety(&work).ok().flatten();
    Ok(RealityCertificate::RankDeficit { rank, dim: d, nvars: n })
}

/// Largest Jacobian rank over the sample points of a full decomposition of
/// the real variety.
fn max_rank_on_variety(work: &QIdeal) -> Result<Option<usize>> {
    let ladder = ProjectionLadder::new(work.basis(), work.nvars())?;
    let tree = CadTree::full(ladder)?;
    let whole = SemialgebraicSet::whole(work.nvars());
    let mut best = None;
    for c in variety_cells(&tree, work.basis(), &whole)? {
        let r = rank_at(work, &c.sample)?;
        best = Some(best.map_or(r, |b: usize| b.max(r)));
    }
    Ok(Some(best.unwrap_or(0)))
}
