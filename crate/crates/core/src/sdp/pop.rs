//! Polynomial optimization problems and their truncation data.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mpoly::{Monomial, QPoly};

/// `minimize f subject to g_i ≥ 0, h_j = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pop {
    pub nvars: usize,
    pub objective: QPoly,
    pub inequalities: Vec<QPoly>,
    pub equalities: Vec<QPoly>,
}

fn degree(p: &QPoly) -> u32 {
    p.total_degree().max(0) as u32
}

impl Pop {
    /// Smallest admissible relaxation order.
    pub fn min_order(&self) -> u32 {
        let half = |p: &QPoly| degree(p).div_ceil(2);
        let g = self.inequalities.iter().map(half).max().unwrap_or(0);
        let h = self.equalities.iter().map(half).max().unwrap_or(0);
        g.max(h).max(degree(&self.objective))
    }

    pub fn truncation(&self, k: u32) -> Result<TruncationData> {
        let k0 = self.min_order();
        if k < k0 {
            return Err(Error::OrderTooLow { k, k0 });
        }
        let n = self.nvars;
        let mut localizing = alloc::vec![Some(k / 2)];
        for g in &self.inequalities {
            localizing.push(k.checked_sub(degree(g)).map(|r| r / 2));
        }
        let multipliers: Vec<Option<u32>> = self.equalities.iter().map(|h| k.checked_sub(degree(h))).collect();
        let moments = Monomial::all_up_to(n, k);
        Ok(TruncationData { k, k0, localizing, multipliers, moments })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationData {
    pub k: u32,
    pub k0: u32,
    /// Half-degrees of the sums of squares: entry 0 for the constraint `1 ≥ 0`,
    /// then one per inequality, `max{d : 2d + deg g ≤ k}`. `None` when
    /// `deg g > k`, so the inequality cannot enter at this order.
    pub localizing: Vec<Option<u32>>,
    /// Degrees of the equality multipliers, `k − deg h` (`None` when negative).
    pub multipliers: Vec<Option<u32>>,
    /// Monomials of degree at most `k`, graded lex.
    pub moments: Vec<Monomial>,
}

impl TruncationData {
    /// Graded-lex monomials of degree at most `d`.
    pub fn basis(&self, nvars: usize, d: u32) -> Vec<Monomial> {
        Monomial::all_up_to(nvars, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;

    fn q(s: &str) -> QPoly {
        poly(s, &["x", "y"]).unwrap()
    }

    #[test]
    fn truncation_degrees() {
        let pop = Pop { nvars: 2, objective: q("x^2+y"), inequalities: vec![q("1-x^2-y^2")], equalities: vec![q("x+y-1")] };
        assert_eq!(pop.min_order(), 2);
        let t = pop.truncation(4).unwrap();
        assert_eq!(t.localizing, vec![Some(2), Some(1)]);
        assert_eq!(t.multipliers, vec![Some(3)]);
        let t = pop.truncation(3).unwrap();
        assert_eq!(t.localizing, vec![Some(1), Some(0)]);
        // f linear, g quadratic: the minimal order is too small for g
        let lin = Pop { nvars: 2, objective: q("x"), inequalities: vec![q("1-x^2-(y-1)^2")], equalities: vec![q("y")] };
        assert_eq!(lin.min_order(), 1);
        assert_eq!(lin.truncation(1).unwrap().localizing, vec![Some(0), None]);
        assert_eq!(t.basis(2, 2).len(), 6);
        assert!(matches!(pop.truncation(1), Err(Error::OrderTooLow { k: 1, k0: 2 })));
    }
}
