//! Semialgebraic sets given as finite unions of basic sets.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Result;
use crate::mpoly::QPoly;
use crate::numeric::{sign_at, AlgebraicNumber};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Gt,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(self, sign: i32) -> bool {
        match self {
            Relation::Gt => sign > 0,
            Relation::Ge => sign >= 0,
            Relation::Eq => sign == 0,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub poly: QPoly,
    pub rel: Relation,
}

/// `⋃_i ⋂_j {g_ij rel_ij 0}`. An empty list of conjuncts is the empty set;
/// a conjunct with no constraints is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemialgebraicSet {
    pub nvars: usize,
    pub conjuncts: Vec<Vec<Constraint>>,
}

impl SemialgebraicSet {
    pub fn whole(nvars: usize) -> Self {
        Self { nvars, conjuncts: alloc::vec![Vec::new()] }
    }

    /// A single conjunct.
    pub fn basic(nvars: usize, constraints: Vec<Constraint>) -> Self {
        Self { nvars, conjuncts: alloc::vec![constraints] }
    }

    pub fn is_whole(&self) -> bool {
        self.conjuncts.iter().any(|c| c.is_empty())
    }

    /// Every polynomial mentioned, in order of appearance.
    pub fn polys(&self) -> Vec<QPoly> {
        let mut out: Vec<QPoly> = Vec::new();
        for c in self.conjuncts.iter().flatten() {
            if !out.contains(&c.poly) {
                out.push(c.poly.clone());
            }
        }
        out
    }

    pub fn contains(&self, point: &[AlgebraicNumber]) -> Result<bool> {
        for conj in &self.conjuncts {
            let mut ok = true;
            for c in conj {
                if !c.rel.holds(sign_at(&c.poly, point)?) {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Sufficient test for an interior point: some conjunct without equations
    /// holds with every inequality strict.
    pub fn strictly_contains(&self, point: &[AlgebraicNumber]) -> Result<bool> {
        for conj in &self.conjuncts {
            if conj.iter().any(|c| c.rel == Relation::Eq) {
                continue;
            }
            let mut ok = true;
            for c in conj {
                if sign_at(&c.poly, point)? <= 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Maps every polynomial through `f` (coordinate changes).
    pub fn map_polys(&self, mut f: impl FnMut(&QPoly) -> QPoly) -> Self {
        Self {
            nvars: self.nvars,
            conjuncts: self
                .conjuncts
                .iter()
                .map(|conj| conj.iter().map(|c| Constraint { poly: f(&c.poly), rel: c.rel }).collect())
                .collect(),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .conjuncts
            .iter()
            .map(|conj| {
                if conj.is_empty() {
                    return String::from("true");
                }
                let cs: Vec<String> =
                    conj.iter().map(|c| alloc::format!("{} {} 0", c.poly.render(names), c.rel.symbol())).collect();
                cs.join(" and ")
            })
            .collect();
        if parts.is_empty() {
            return String::from("false");
        }
        parts.join(" or ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::rational::int;

    #[test]
    fn membership() {
        let g = poly("1-x^2-y^2", &["x", "y"]).unwrap();
        let s = SemialgebraicSet::basic(2, alloc::vec![Constraint { poly: g, rel: Relation::Ge }]);
        let pt = |a: i64, b: i64| [AlgebraicNumber::from_rational(int(a)), AlgebraicNumber::from_rational(int(b))];
        assert!(s.contains(&pt(0, 0)).unwrap());
        assert!(s.strictly_contains(&pt(0, 0)).unwrap());
        assert!(s.contains(&pt(1, 0)).unwrap());
        assert!(!s.strictly_contains(&pt(1, 0)).unwrap());
        assert!(!s.contains(&pt(1, 1)).unwrap());
        assert!(SemialgebraicSet::whole(2).contains(&pt(5, 5)).unwrap());
    }
}
