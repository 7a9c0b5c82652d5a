//! Relaxation values per order, with the no-gap guarantee when the vanishing
//! ideal of the feasible set is certified.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use super::instance::build_primal;
use super::pop::Pop;
use super::solver::{solve, SolveStatus, SolverOptions};
use crate::error::Result;
use crate::numeric::AlgebraicNumber;
use crate::real::{rank_at, ComponentOutcome, Equality, EqualityVerdict};

#[derive(Clone, Debug, PartialEq)]
pub enum Guarantee {
    None,
    /// `I(K) = I` was certified, so the two values agree at every order.
    VanishingIdeal,
    /// `I` is prime and has a feasible interior point where the Jacobian of
    /// its generators has rank `n − dim I`.
    RankWitness { point: Vec<AlgebraicNumber>, rank: usize, dim: usize },
}

impl Guarantee {
    pub fn is_set(&self) -> bool {
        *self != Guarantee::None
    }

    pub fn describe(&self) -> String {
        match self {
            Guarantee::None => "none".to_string(),
            Guarantee::VanishingIdeal => "no duality gap: the vanishing ideal of the feasible set equals I".to_string(),
            Guarantee::RankWitness { point, rank, dim } => {
                let coords: Vec<String> = point.iter().map(|c| format!("{:.6}", c.to_f64())).collect();
                format!(
                    "no duality gap: I is prime, interior feasible point ({}) has Jacobian rank {rank} = n - dim I (dim {dim})",
                    coords.join(", ")
                )
            }
        }
    }
}

/// The guarantee supported by an equality verdict. The rank witness is cited
/// when the ideal is a single proven prime and the accepted point is interior.
pub fn guarantee(verdict: Option<&EqualityVerdict>) -> Result<Guarantee> {
    let Some(v) = verdict else { return Ok(Guarantee::None) };
    if v.verdict != Equality::Equal {
        return Ok(Guarantee::None);
    }
    if let [c] = v.components.as_slice() {
        if let ComponentOutcome::Accepted { point, interior: true } = &c.outcome {
            if c.primality.is_some_and(|p| p.is_proved()) {
                let n = c.prime.nvars();
                let dim = c.prime.dimension().max(0) as usize;
                let rank = rank_at(&c.prime, point)?;
                if rank + dim == n {
                    return Ok(Guarantee::RankWitness { point: point.clone(), rank, dim });
                }
            }
        }
    }
    Ok(Guarantee::VanishingIdeal)
}

#[derive(Clone, Debug, PartialEq)]
pub enum OrderOutcome {
    Solved { primal: f64, dual: f64, status: SolveStatus, iterations: usize },
    Failed(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrderRecord {
    pub k: u32,
    pub outcome: OrderOutcome,
}

impl OrderRecord {
    /// `primal − dual`, zero when both are the same infinity.
    pub fn gap(&self) -> Option<f64> {
        match self.outcome {
            OrderOutcome::Solved { primal, dual, .. } if primal == dual => Some(0.0),
            OrderOutcome::Solved { primal, dual, .. } => Some(primal - dual),
            OrderOutcome::Failed(_) => None,
        }
    }
}

/// Builds and solves the relaxation of order `k`; failures are recorded.
pub fn solve_order(pop: &Pop, k: u32, opts: &SolverOptions) -> OrderRecord {
    let outcome = match build_primal(pop, k).and_then(|inst| solve(&inst, opts)) {
        Ok(s) => OrderOutcome::Solved { primal: s.primal, dual: s.dual, status: s.status, iterations: s.iterations },
        Err(e) => OrderOutcome::Failed(e.to_string()),
    };
    OrderRecord { k, outcome }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport {
    pub k0: u32,
    pub records: Vec<OrderRecord>,
    pub guarantee: Guarantee,
}

pub fn gap_report(
    pop: &Pop,
    orders: core::ops::RangeInclusive<u32>,
    verdict: Option<&EqualityVerdict>,
    opts: &SolverOptions,
) -> Result<GapReport> {
    let records = orders.map(|k| solve_order(pop, k, opts)).collect();
    Ok(GapReport { k0: pop.min_order(), records, guarantee: guarantee(verdict)? })
}

impl GapReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "minimal order: {}", self.k0);
        let _ = writeln!(s, "guarantee: {}", self.guarantee.describe());
        s.push_str(&self.render_table());
        s
    }

    /// The per-order table alone.
    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:>3}  {:>20}  {:>20}  {:>10}  {:<20}  {:>5}", "k", "primal", "dual", "gap", "status", "iter");
        for r in &self.records {
            match &r.outcome {
                OrderOutcome::Solved { primal, dual, status, iterations } => {
                    let _ = writeln!(
                        s,
                        "{:>3}  {:>20.12e}  {:>20.12e}  {:>10.2e}  {:<20}  {:>5}",
                        r.k,
                        primal,
                        dual,
                        r.gap().unwrap_or(f64::NAN),
                        status.label(),
                        iterations
                    );
                }
                OrderOutcome::Failed(e) => {
                    let _ = writeln!(s, "{:>3}  failed: {e}", r.k);
                }
            }
        }
        s
    }

    /// Tab-separated table with a header row.
    pub fn render_tsv(&self) -> String {
        let mut s = String::from("k\tprimal\tdual\tgap\tstatus\titerations\tguarantee\n");
        let flag = if self.guarantee.is_set() { "yes" } else { "no" };
        for r in &self.records {
            match &r.outcome {
                OrderOutcome::Solved { primal, dual, status, iterations } => {
                    let _ = writeln!(
                        s,
                        "{}\t{:.12e}\t{:.12e}\t{:.3e}\t{}\t{}\t{flag}",
                        r.k,
                        primal,
                        dual,
                        r.gap().unwrap_or(f64::NAN),
                        status.label(),
                        iterations
                    );
                }
                OrderOutcome::Failed(e) => {
                    let _ = writeln!(s, "{}\t\t\t\tfailed: {e}\t\t{flag}", r.k);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::mpoly::parse::poly;
    use crate::real::{check_equality, Constraint, Relation, SemialgebraicSet};
    use alloc::vec;

    const XY: [&str; 2] = ["x", "y"];

    fn q(s: &str) -> crate::mpoly::QPoly {
        poly(s, &XY).unwrap()
    }

    fn disk_and_line(line: &str) -> (Pop, SemialgebraicSet, crate::ideal::QIdeal) {
        let g = q("1-x^2-y^2");
        let pop = Pop { nvars: 2, objective: q("x^2-y"), inequalities: vec![g.clone()], equalities: vec![q(line)] };
        let set = SemialgebraicSet::basic(2, vec![Constraint { poly: g, rel: Relation::Ge }]);
        (pop, set, Ideal::new(2, vec![q(line)]))
    }

    #[test]
    fn linear_equality_gets_the_rank_witness() {
        let (pop, set, ideal) = disk_and_line("x-y");
        let v = check_equality(&set, &ideal, None).unwrap();
        let r = gap_report(&pop, 2..=4, Some(&v), &SolverOptions::default()).unwrap();
        assert!(matches!(r.guarantee, Guarantee::RankWitness { rank: 1, dim: 1, .. }), "{:?}", r.guarantee);
        for rec in &r.records {
            assert!(rec.gap().unwrap().abs() < 1e-5, "{rec:?}");
        }
        let text = r.render_text();
        assert!(text.contains("Jacobian rank 1"));
        assert_eq!(r.render_tsv().lines().count(), 4);
    }

    #[test]
    fn tangent_line_has_no_guarantee() {
        let (pop, set, ideal) = disk_and_line("y-1");
        let v = check_equality(&set, &ideal, None).unwrap();
        assert_eq!(v.verdict, Equality::NotEqual);
        let r = gap_report(&pop, 2..=2, Some(&v), &SolverOptions::default()).unwrap();
        assert_eq!(r.guarantee, Guarantee::None);
        assert_eq!(r.records.len(), 1);
        assert!(r.render_text().contains("guarantee: none"));
    }

    #[test]
    fn orders_below_the_minimum_are_recorded() {
        let (pop, _, _) = disk_and_line("x-y");
        let r = gap_report(&pop, 1..=2, None, &SolverOptions::default()).unwrap();
        assert!(matches!(r.records[0].outcome, OrderOutcome::Failed(_)));
        assert!(matches!(r.records[1].outcome, OrderOutcome::Solved { .. }));
    }
}
