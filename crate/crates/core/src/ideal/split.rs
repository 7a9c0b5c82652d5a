//! Does the complexification of a real prime ideal stay prime?
//!
//! When it splits, `I' = ⟨I', g_1..g_k⟩ ∩ ⟨I', ḡ_1..ḡ_k⟩` for Gaussian
//! polynomials `g_j = a_j + i b_j` with `a_j² + b_j² ∈ I`. We look for such
//! witnesses by undetermined coefficients: `a` and `b` range over standard
//! monomials of bounded degree, and the conditions become a quadratic system
//! over Q solved by [`rational_point`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed};

use super::solve::{rational_point, Search};
use super::{Ideal, QIdeal};
use crate::error::{Error, Result};
use crate::mpoly::{GPoly, MPoly, Monomial, MonomialOrder, QPoly};
use crate::numeric::{GaussianRational, Rational};

/// Gröbner computations allowed per witness search.
pub const SEARCH_BUDGET: usize = 600;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitResult {
    PrimeOverC,
    /// `I' = ⟨I', g_1..g_k⟩ ∩ ⟨I', ḡ_1..ḡ_k⟩` with the listed `g_j`.
    Split { witnesses: Vec<GPoly> },
    Inconclusive(String),
}

/// Splitting test for an ideal assumed prime over the reals.
pub fn complexified_split(ideal: &QIdeal) -> Result<SplitResult> {
    if ideal.is_unit() {
        return Err(Error::Precondition("splitting test needs a proper ideal".into()));
    }
    if ideal.is_zero() {
        return Ok(SplitResult::PrimeOverC);
    }
    let ideal = if ideal.order() == MonomialOrder::GrevLex { ideal.clone() } else { ideal.reorder(MonomialOrder::GrevLex) };
    let n = ideal.nvars();
    let min_deg = ideal.basis().iter().map(|g| g.total_degree()).min().expect("nonzero ideal") as u32;
    let bound = min_deg.div_ceil(2).max(1);
    let lms = ideal.leading_monomials();
    let mut std: Vec<Monomial> =
        Monomial::all_up_to(n, bound).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).collect();
    std.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
    let std: Vec<QPoly> = std.into_iter().map(|m| MPoly::term(Rational::one(), m)).collect();

    let complex = ideal.complexify();
    // collect compatible witnesses until the search runs dry, so that
    // ⟨I', g_1..g_k⟩ is as close to a prime component as the degree bound
    // allows; then verify the splitting
    let mut witnesses: Vec<(QPoly, QPoly)> = Vec::new();
    let mut last = Found::None;
    while witnesses.len() < n {
        let span = Ideal::new(
            n,
            complex.gens().iter().cloned().chain(witnesses.iter().map(|(a, b)| gaussian(a, b))).collect(),
        );
        match find_witness(&ideal, &std, &witnesses, &span) {
            Found::Witness(a, b) => witnesses.push(simplify(&ideal, &span, a, b)),
            other => {
                last = other;
                break;
            }
        }
    }
    if witnesses.is_empty() {
        return Ok(match last {
            Found::GaveUp => SplitResult::Inconclusive("witness search budget exhausted".into()),
            _ => SplitResult::PrimeOverC,
        });
    }
    if !splits(&complex, &witnesses) {
        return Ok(SplitResult::Inconclusive(format!(
            "{} witnesses found but the conjugate components do not cut out the ideal",
            witnesses.len()
        )));
    }
    let mut gs: Vec<GPoly> = witnesses.iter().map(|(a, b)| gaussian(a, b)).collect();
    if leading_imaginary_sign(&witnesses[0]) < 0 {
        gs = gs.iter().map(|g| g.conj()).collect();
    }
    Ok(SplitResult::Split { witnesses: gs })
}

enum Found {
    Witness(QPoly, QPoly),
    None,
    GaveUp,
}

fn gaussian(a: &QPoly, b: &QPoly) -> GPoly {
    let i = GaussianRational::i();
    a.to_gaussian().add(&b.to_gaussian().scale(&i))
}

/// Sign of the coefficient of `b` at its largest monomial.
fn leading_imaginary_sign((_, b): &(QPoly, QPoly)) -> i32 {
    match b.leading() {
        Some((_, c)) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}

/// `⟨I', g⟩ ∩ ⟨I', ḡ⟩ = I'`.
fn splits(complex: &Ideal<GaussianRational>, w: &[(QPoly, QPoly)]) -> bool {
    let n = complex.nvars();
    let gs: Vec<GPoly> = w.iter().map(|(a, b)| gaussian(a, b)).collect();
    let p = Ideal::new(n, complex.gens().iter().cloned().chain(gs.iter().cloned()).collect());
    if p.is_unit() {
        return false;
    }
    let q = Ideal::new(n, complex.gens().iter().cloned().chain(gs.iter().map(|g| g.conj())).collect());
    p.intersect(&q).same_ideal(complex)
}

/// Replace a witness by its normal form modulo the previous ones when that
/// keeps the witness conditions.
fn simplify(ideal: &QIdeal, span: &Ideal<GaussianRational>, a: QPoly, b: QPoly) -> (QPoly, QPoly) {
    let g = span.normal_form(&gaussian(&a, &b));
    if g.is_zero() {
        return (a, b);
    }
    let g = g.monic();
    let (a2, b2) = g.re_im();
    let ok = !b2.is_zero() && !ideal.contains(&a2) && !ideal.contains(&b2) && ideal.contains(&a2.mul(&a2).add(&b2.mul(&b2)));
    if ok {
        (a2.with_order(MonomialOrder::GrevLex), b2.with_order(MonomialOrder::GrevLex))
    } else {
        (a, b)
    }
}

fn find_witness(ideal: &QIdeal, std: &[QPoly], prev: &[(QPoly, QPoly)], span: &Ideal<GaussianRational>) -> Found {
    let l = std.len();
    let mut gave_up = false;
    // products of standard monomials, reduced once
    let mut nf_sq: Vec<Vec<QPoly>> = vec![vec![MPoly::zero(ideal.nvars()); l]; l];
    for i in 0..l {
        for j in i..l {
            let r = ideal.normal_form(&std[i].mul(&std[j]));
            nf_sq[j][i] = r.clone();
            nf_sq[i][j] = r;
        }
    }
    let nf_prev: Vec<(Vec<QPoly>, Vec<QPoly>)> = prev
        .iter()
        .map(|(a1, b1)| {
            (
                std.iter().map(|s| ideal.normal_form(&s.mul(a1))).collect(),
                std.iter().map(|s| ideal.normal_form(&s.mul(b1))).collect(),
            )
        })
        .collect();
    for m in 0..l {
        let free = l - m - 1;
        let u = 2 * free;
        // coefficient of std[i] in a and b, as polynomials in the unknowns
        let a_co: Vec<QPoly> = (0..l)
            .map(|i| match i.cmp(&m) {
                Ordering::Less => MPoly::zero(u),
                Ordering::Equal => MPoly::one(u),
                Ordering::Greater => MPoly::var(u, i - m - 1),
            })
            .collect();
        let b_co: Vec<QPoly> =
            (0..l).map(|i| if i <= m { MPoly::zero(u) } else { MPoly::var(u, free + i - m - 1) }).collect();
        let mut eqs = Collector::default();
        for i in 0..l {
            for j in 0..l {
                let c = a_co[i].mul(&a_co[j]).add(&b_co[i].mul(&b_co[j]));
                eqs.add(&c, &nf_sq[i][j]);
            }
        }
        let mut system = eqs.finish();
        for (na, nb) in &nf_prev {
            // a·a1 + b·b1 and b·a1 − a·b1
            let mut re = Collector::default();
            let mut im = Collector::default();
            for i in 0..l {
                re.add(&a_co[i], &na[i]);
                re.add(&b_co[i], &nb[i]);
                im.add(&b_co[i], &na[i]);
                im.add(&a_co[i].neg(), &nb[i]);
            }
            system.extend(re.finish());
            system.extend(im.finish());
        }
        if system.iter().any(|e| e.is_constant()) {
            continue;
        }
        let build = |pt: &[Rational]| -> (QPoly, QPoly) {
            let a = (0..l).fold(MPoly::zero(ideal.nvars()), |acc, i| acc.add(&std[i].scale(&a_co[i].eval(pt))));
            let b = (0..l).fold(MPoly::zero(ideal.nvars()), |acc, i| acc.add(&std[i].scale(&b_co[i].eval(pt))));
            (a, b)
        };
        let accept = |pt: &[Rational]| {
            let (a, b) = build(pt);
            !b.is_zero() && (prev.is_empty() || !span.contains(&gaussian(&a, &b)))
        };
        match rational_point(&system, u, SEARCH_BUDGET, accept) {
            Search::Found(pt) => {
                let (a, b) = build(&pt);
                return Found::Witness(a, b);
            }
            Search::Infeasible => {}
            Search::GaveUp => gave_up = true,
        }
    }
    if gave_up {
        Found::GaveUp
    } else {
        Found::None
    }
}

/// Collects `Σ c_k · p_k` coefficientwise over the `x`-monomials of `p_k`.
#[derive(Default)]
struct Collector {
    rows: Vec<(Monomial, QPoly)>,
}

impl Collector {
    fn add(&mut self, c: &QPoly, p: &QPoly) {
        if c.is_zero() {
            return;
        }
        for (m, k) in p.terms() {
            let t = c.scale(k);
            match self.rows.iter_mut().find(|(mm, _)| mm == m) {
                Some((_, acc)) => *acc = acc.add(&t),
                None => self.rows.push((m.clone(), t)),
            }
        }
    }

    fn finish(self) -> Vec<QPoly> {
        self.rows.into_iter().map(|(_, p)| p).filter(|p| !p.is_zero()).collect()
    }
}
