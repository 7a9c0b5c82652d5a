//! Cylindrical algebraic decomposition: Collins projection, a rational-sample
//! base line, and lifting through algebraic fibres.
//!
//! Cells carry a sample point and the signs of their level's polynomials at
//! it. Sector samples are always rational; section coordinates are real
//! algebraic numbers.

pub mod lift;
pub mod project;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

pub use lift::{fibre_roots, stack};
pub use project::{normalize, project, ProjectionLadder};

use crate::error::{Error, Result};
use crate::mpoly::QPoly;
use crate::numeric::{sign_at, AlgebraicNumber};
use crate::real::SemialgebraicSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Sector,
    Section,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Position within its level.
    pub id: usize,
    pub parent: Option<usize>,
    /// One entry per coordinate.
    pub kinds: Vec<CellKind>,
    pub sample: Vec<AlgebraicNumber>,
    /// Bounds of the last coordinate of a sector (`None` is infinite).
    pub lower: Option<AlgebraicNumber>,
    pub upper: Option<AlgebraicNumber>,
    /// Signs of the level's polynomials at the sample.
    pub signs: Vec<i32>,
}

impl Cell {
    pub fn level(&self) -> usize {
        self.sample.len()
    }

    pub fn dimension(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == CellKind::Sector).count()
    }

    pub fn is_open(&self) -> bool {
        self.kinds.iter().all(|&k| k == CellKind::Sector)
    }

    fn all_rational(&self) -> bool {
        self.sample.iter().all(|a| a.is_rational())
    }
}

/// Which cells to keep while lifting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// Every cell.
    Full,
    /// Sectors up to the given level, sections above it.
    OpenThenSections(usize),
}

impl Policy {
    fn keeps(self, level: usize, kind: CellKind) -> bool {
        match self {
            Policy::Full => true,
            Policy::OpenThenSections(d) => (level <= d) == (kind == CellKind::Sector),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CadTree {
    pub ladder: ProjectionLadder,
    /// `cells[j]` are the cells in `R^{j+1}`.
    pub cells: Vec<Vec<Cell>>,
    pub policy: Policy,
}

impl CadTree {
    /// Lifts up to `max_level` coordinates (at most the ladder's dimension).
    pub fn build(ladder: ProjectionLadder, policy: Policy, max_level: usize) -> Result<Self> {
        let top = max_level.min(ladder.nvars);
        let mut cells: Vec<Vec<Cell>> = Vec::with_capacity(top);
        let root = Cell {
            id: 0,
            parent: None,
            kinds: Vec::new(),
            sample: Vec::new(),
            lower: None,
            upper: None,
            signs: Vec::new(),
        };
        for k in 0..top {
            let polys = &ladder.levels[k];
            let parents: Vec<Cell> = if k == 0 { alloc::vec![root.clone()] } else { cells[k - 1].clone() };
            let mut level: Vec<Cell> = Vec::new();
            for parent in &parents {
                for mut c in lift_cell(parent, polys, k)? {
                    if policy.keeps(k + 1, c.kinds[k]) {
                        c.id = level.len();
                        c.parent = (k > 0).then_some(parent.id);
                        level.push(c);
                    }
                }
            }
            cells.push(level);
        }
        Ok(Self { ladder, cells, policy })
    }

    pub fn full(ladder: ProjectionLadder) -> Result<Self> {
        let n = ladder.nvars;
        Self::build(ladder, Policy::Full, n)
    }

    pub fn top(&self) -> &[Cell] {
        self.cells.last().map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Ancestor of a cell at the given level (1-based).
    pub fn ancestor<'a>(&'a self, mut cell: &'a Cell, level: usize) -> &'a Cell {
        while cell.level() > level {
            let p = cell.parent.expect("cells above the base have parents");
            cell = &self.cells[cell.level() - 2][p];
        }
        cell
    }

    /// Structured text report: factor lists per level and the cell table.
    pub fn dump(&self, names: &[String]) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "variables: {}", names.join(", "));
        for (k, polys) in self.ladder.levels.iter().enumerate() {
            let fs: Vec<String> = polys.iter().map(|p| p.render(names)).collect();
            let _ = writeln!(s, "level {} factors: [{}]", k + 1, fs.join(", "));
        }
        for (k, level) in self.cells.iter().enumerate() {
            let _ = writeln!(s, "level {} cells: {}", k + 1, level.len());
            for c in level {
                let kinds: String = c.kinds.iter().map(|k| if *k == CellKind::Sector { 'o' } else { '*' }).collect();
                let approx: Vec<String> = c.sample.iter().map(|a| a.approx(6)).collect();
                let exact: Vec<String> = c.sample.iter().map(|a| a.describe()).collect();
                let signs: String = c.signs.iter().map(|&x| if x > 0 { '+' } else if x < 0 { '-' } else { '0' }).collect();
                let parent = c.parent.map(|p| format!("{p}")).unwrap_or_else(|| "-".into());
                let _ = writeln!(
                    s,
                    "  #{} parent {} kind {} dim {} sample ({}) signs [{}] exact ({})",
                    c.id,
                    parent,
                    kinds,
                    c.dimension(),
                    approx.join(", "),
                    signs,
                    exact.join("; ")
                );
            }
        }
        s
    }
}

/// Stack over `parent` cut out by `polys` (main variable `k`).
fn lift_cell(parent: &Cell, polys: &[QPoly], k: usize) -> Result<Vec<Cell>> {
    // A point cell has a single fibre, so a polynomial vanishing on it is harmless.
    let point_parent = parent.dimension() == 0;
    let mut roots = Vec::new();
    for p in polys {
        roots.extend(fibre_roots(p, &parent.sample, point_parent)?);
    }
    let entries = stack(roots);
    if k > 0 && parent.kinds[k - 1] == CellKind::Sector && parent.all_rational() {
        check_probes(parent, polys, entries.iter().filter(|e| e.section).count())?;
    }
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let mut sample = parent.sample.clone();
        sample.push(e.value);
        let mut signs = Vec::with_capacity(polys.len());
        for p in polys {
            signs.push(sign_at(&lift::restrict(p, k + 1), &sample)?);
        }
        let mut kinds = parent.kinds.clone();
        kinds.push(if e.section { CellKind::Section } else { CellKind::Sector });
        out.push(Cell { id: 0, parent: None, kinds, sample, lower: e.lower, upper: e.upper, signs });
    }
    Ok(out)
}

/// Root counts at two more points of the parent sector must match.
fn check_probes(parent: &Cell, polys: &[QPoly], expected: usize) -> Result<()> {
    let last = parent.sample.len() - 1;
    let s = parent.sample[last].as_rational().expect("rational sample").clone();
    for t in lift::probes(&s, parent.lower.as_ref(), parent.upper.as_ref()) {
        let mut pt = parent.sample.clone();
        pt[last] = AlgebraicNumber::from_rational(t.clone());
        let mut roots = Vec::new();
        for p in polys {
            roots.extend(fibre_roots(p, &pt, false)?);
        }
        crate::numeric::algebraic::sort_dedup(&mut roots);
        if roots.len() != expected {
            return Err(Error::DelineabilityMismatch(format!(
                "{} roots at coordinate {} versus {} at the sample {}",
                roots.len(),
                t,
                expected,
                s
            )));
        }
    }
    Ok(())
}

/// Top-level cells whose sample lies on `V(gens)` and in `set`. Exact for
/// sign-invariant cells, which holds when the ladder was built from `gens`
/// together with the polynomials of `set`.
pub fn variety_cells<'a>(tree: &'a CadTree, gens: &[QPoly], set: &SemialgebraicSet) -> Result<Vec<&'a Cell>> {
    let mut out = Vec::new();
    'cells: for c in tree.top() {
        for g in gens {
            if sign_at(g, &c.sample)? != 0 {
                continue 'cells;
            }
        }
        if set.contains(&c.sample)? {
            out.push(c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::rational::int;
    use crate::real::{Constraint, Relation};
    use alloc::vec;

    const V: [&str; 3] = ["x", "y", "z"];

    fn q(s: &str) -> QPoly {
        poly(s, &V).unwrap()
    }

    fn names() -> Vec<String> {
        V.iter().map(|s| String::from(*s)).collect()
    }

    fn cylinder() -> SemialgebraicSet {
        SemialgebraicSet::basic(3, vec![Constraint { poly: q("1-x^2-(z-1)^2"), rel: Relation::Ge }])
    }

    #[test]
    fn base_cells_of_the_cylinder_example() {
        let ladder = ProjectionLadder::new(&[q("x^2+y^2+z^2"), q("1-x^2-(z-1)^2")], 3).unwrap();
        let tree = CadTree::build(ladder, Policy::Full, 1).unwrap();
        let samples: Vec<_> = tree.cells[0].iter().map(|c| c.sample[0].as_rational().unwrap().clone()).collect();
        use crate::numeric::rational::rat;
        assert_eq!(samples, vec![int(-2), int(-1), rat(-1, 2), int(0), rat(1, 2), int(1), int(2)]);
        let kinds: Vec<_> = tree.cells[0].iter().map(|c| c.kinds[0]).collect();
        assert_eq!(kinds[0], CellKind::Sector);
        assert_eq!(kinds[1], CellKind::Section);
    }

    #[test]
    fn surviving_cells_sphere_component() {
        let gens = [q("x^2+y^2+z^2")];
        let ladder = ProjectionLadder::new(&[gens[0].clone(), q("1-x^2-(z-1)^2")], 3).unwrap();
        let tree = CadTree::full(ladder).unwrap();
        let cells = variety_cells(&tree, &gens, &cylinder()).unwrap();
        assert_eq!(cells.len(), 1);
        assert!(cells[0].sample.iter().all(|a| a.as_rational() == Some(&int(0))));
    }

    #[test]
    fn surviving_cells_plane_component() {
        let gens = [q("z-2")];
        let ladder = ProjectionLadder::new(&[gens[0].clone(), q("1-x^2-(z-1)^2")], 3).unwrap();
        let tree = CadTree::full(ladder).unwrap();
        let cells = variety_cells(&tree, &gens, &cylinder()).unwrap();
        assert!(!cells.is_empty());
        for c in &cells {
            assert_eq!(c.sample[0].as_rational(), Some(&int(0)));
            assert_eq!(c.sample[2].as_rational(), Some(&int(2)));
        }
        // the segment {x = 0, z = 2} is a line in y: sectors and sections
        assert!(cells.iter().any(|c| c.dimension() == 1));
    }

    #[test]
    fn sections_zero_their_polynomials() {
        let polys = [q("x^2+y^2-1"), q("y-x")];
        let tree = CadTree::full(ProjectionLadder::new(&polys, 2).unwrap()).unwrap();
        let r = tree.ladder.levels[0].len();
        assert_eq!(tree.cells[0].len() % 2, 1);
        for c in tree.top() {
            if c.kinds[1] == CellKind::Section {
                let hits = tree.ladder.levels[1]
                    .iter()
                    .filter(|p| sign_at(&lift::restrict(p, 2), &c.sample).unwrap() == 0)
                    .count();
                assert!(hits > 0);
            }
        }
        assert!(r > 0);
        // cells of each stack are ordered along the fibre
        for pair in tree.top().windows(2) {
            if pair[0].parent == pair[1].parent {
                assert!(pair[0].sample[1] < pair[1].sample[1]);
            }
        }
    }

    #[test]
    fn open_then_sections_policy() {
        let polys = [q("x^2+y^2-1")];
        let ladder = ProjectionLadder::new(&polys, 2).unwrap();
        let tree = CadTree::build(ladder, Policy::OpenThenSections(1), 2).unwrap();
        assert_eq!(tree.cells[0].len(), 3);
        // only the middle sector (-1, 1) meets the circle, twice
        assert_eq!(tree.top().len(), 2);
        assert!(tree.top().iter().all(|c| c.dimension() == 1));
    }

    #[test]
    fn constant_fibre_is_a_single_sector() {
        let ladder = ProjectionLadder { nvars: 2, levels: vec![vec![q("x")], vec![]] };
        let tree = CadTree::full(ladder).unwrap();
        assert_eq!(tree.top().len(), 3);
        assert!(tree.top().iter().all(|c| c.kinds[1] == CellKind::Sector));
        let text = tree.dump(&names()[..2]);
        assert!(text.contains("level 2 cells: 3"));
    }
}
