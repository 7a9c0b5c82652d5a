//! Moment and sums-of-squares relaxations as block-diagonal SDP data.
//!
//! Instances use the SDPA primal form
//!
//! ```text
//! minimize  c·x + offset   subject to   Σ x_i F_i − F_0 ⪰ 0
//! ```
//!
//! whose dual is `maximize F_0•Y + offset` subject to `F_i•Y = c_i`, `Y ⪰ 0`.
//! For a relaxation the variables are the moments `L(x^α)`, `α ≠ 0`, and the
//! offset is the constant term of the objective.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::pop::{Pop, TruncationData};
use crate::error::Result;
use crate::mpoly::{Monomial, QPoly};
use crate::numeric::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockRole {
    /// Moment matrix, the constraint `1 ≥ 0`.
    Moment,
    /// Localizing matrix of inequality `i` (0-based).
    Localizing(usize),
    /// Pairs of diagonal entries `±(row)` forcing the linear moment equations.
    Equalities,
    /// Imported from a file.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub size: usize,
    pub diagonal: bool,
    pub role: BlockRole,
}

/// Key of a matrix entry: `(matrix, block, row, col)`, 0-based, `row ≤ col`.
/// Matrix 0 is `F_0`.
pub type EntryKey = (usize, usize, usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SdpInstance {
    pub nvars: usize,
    pub blocks: Vec<Block>,
    pub objective: Vec<Rational>,
    pub entries: BTreeMap<EntryKey, Rational>,
    pub offset: Rational,
    /// Moment of each variable; empty for imported instances.
    pub labels: Vec<Monomial>,
}

impl SdpInstance {
    /// Coefficient matrix `mat` restricted to `block`, as sorted entries.
    pub fn block_entries(&self, mat: usize, block: usize) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.entries
            .range((mat, block, 0, 0)..(mat, block + 1, 0, 0))
            .map(|(&(_, _, i, j), v)| (i, j, v))
    }

    /// Same SDP data (labels aside).
    pub fn same_data(&self, other: &SdpInstance) -> bool {
        let shape = |b: &Block| (b.size, b.diagonal);
        self.nvars == other.nvars
            && self.blocks.iter().map(shape).eq(other.blocks.iter().map(shape))
            && self.objective == other.objective
            && self.entries == other.entries
            && self.offset == other.offset
    }

    /// Every stored entry is upper triangular, inside its block and on the
    /// diagonal for diagonal blocks.
    pub fn is_well_formed(&self) -> bool {
        self.objective.len() == self.nvars
            && self.entries.iter().all(|(&(m, b, i, j), v)| {
                m <= self.nvars
                    && b < self.blocks.len()
                    && i <= j
                    && j < self.blocks[b].size
                    && (!self.blocks[b].diagonal || i == j)
                    && !v.is_zero()
            })
    }
}

/// One Gram or multiplier block of the relaxation before variables are fixed.
struct Layout {
    blocks: Vec<Block>,
    /// Gram basis and multiplied polynomial of each square block.
    gram: Vec<(Vec<Monomial>, QPoly)>,
    /// `(x^β, h_j)` per equality row.
    rows: Vec<(Monomial, QPoly)>,
}

fn layout(pop: &Pop, t: &TruncationData) -> Layout {
    let n = pop.nvars;
    let mut blocks = Vec::new();
    let mut gram = Vec::new();
    let one = QPoly::one(n);
    let gs = core::iter::once(&one).chain(pop.inequalities.iter());
    for (i, (g, d)) in gs.zip(&t.localizing).enumerate() {
        let Some(d) = d else { continue };
        let basis = Monomial::all_up_to(n, *d);
        let role = if i == 0 { BlockRole::Moment } else { BlockRole::Localizing(i - 1) };
        blocks.push(Block { size: basis.len(), diagonal: false, role });
        gram.push((basis, g.clone()));
    }
    let mut rows = Vec::new();
    for (h, e) in pop.equalities.iter().zip(&t.multipliers) {
        let Some(e) = e else { continue };
        for beta in Monomial::all_up_to(n, *e) {
            rows.push((beta, h.clone()));
        }
    }
    if !rows.is_empty() {
        blocks.push(Block { size: 2 * rows.len(), diagonal: true, role: BlockRole::Equalities });
    }
    Layout { blocks, gram, rows }
}

/// Scattered coefficients: moment -> entries of its coefficient matrix.
type Scatter = BTreeMap<Monomial, BTreeMap<(usize, usize, usize), Rational>>;

fn add_to(s: &mut Scatter, alpha: Monomial, key: (usize, usize, usize), c: Rational) {
    let slot = s.entry(alpha).or_default().entry(key).or_insert_with(Rational::zero);
    *slot += c;
}

/// Fixes the variable order (graded lex over the moments that occur) and
/// assembles the instance. `F_0` is minus the constant-moment matrix.
fn assemble(pop: &Pop, t: &TruncationData, blocks: Vec<Block>, mut scatter: Scatter) -> SdpInstance {
    let n = pop.nvars;
    let zero = Monomial::one(n);
    let labels: Vec<Monomial> = t
        .moments
        .iter()
        .filter(|a| !a.is_one())
        .filter(|a| {
            scatter.get(*a).is_some_and(|m| m.values().any(|v| !v.is_zero())) || !pop.objective.coeff_of(a).is_zero()
        })
        .cloned()
        .collect();
    let mut entries = BTreeMap::new();
    if let Some(c0) = scatter.remove(&zero) {
        for ((b, i, j), v) in c0 {
            if !v.is_zero() {
                entries.insert((0, b, i, j), -v);
            }
        }
    }
    for (k, alpha) in labels.iter().enumerate() {
        for ((b, i, j), v) in scatter.remove(alpha).unwrap_or_default() {
            if !v.is_zero() {
                entries.insert((k + 1, b, i, j), v);
            }
        }
    }
    let objective = labels.iter().map(|a| pop.objective.coeff_of(a)).collect();
    SdpInstance {
        nvars: labels.len(),
        blocks,
        objective,
        entries,
        offset: pop.objective.coeff_of(&zero),
        labels,
    }
}

/// Moment side: localizing matrices `[L(x^{u_a + u_b} g)]_{a,b}` and the
/// moment equations `L(x^β h) = 0`, read off entry by entry.
pub fn build_primal(pop: &Pop, k: u32) -> Result<SdpInstance> {
    let t = pop.truncation(k)?;
    let lay = layout(pop, &t);
    let mut scatter = Scatter::new();
    for (b, (basis, g)) in lay.gram.iter().enumerate() {
        for (a, ua) in basis.iter().enumerate() {
            for (c, uc) in basis.iter().enumerate().skip(a) {
                let shift = ua.mul(uc);
                // entry (a, c) is Σ_γ g_γ y_{shift + γ}
                for (gamma, coeff) in g.terms() {
                    add_to(&mut scatter, shift.mul(gamma), (b, a, c), coeff.clone());
                }
            }
        }
    }
    if let Some(b) = lay.blocks.iter().position(|bl| bl.role == BlockRole::Equalities) {
        for (r, (beta, h)) in lay.rows.iter().enumerate() {
            for (gamma, coeff) in h.terms() {
                let alpha = beta.mul(gamma);
                add_to(&mut scatter, alpha.clone(), (b, 2 * r, 2 * r), coeff.clone());
                add_to(&mut scatter, alpha, (b, 2 * r + 1, 2 * r + 1), -coeff.clone());
            }
        }
    }
    Ok(assemble(pop, &t, lay.blocks, scatter))
}

/// Sums-of-squares side: `f − q = Σ_i (u^T Y_i u) g_i + Σ_j r_j h_j` with
/// `r_j = Σ_β (u⁺ − u⁻)_β x^β`, matched coefficientwise. Each constraint
/// `F_α•Y = f_α` collects the coefficient of `x^α` in the Gram products.
pub fn build_dual(pop: &Pop, k: u32) -> Result<SdpInstance> {
    let t = pop.truncation(k)?;
    let lay = layout(pop, &t);
    let n = pop.nvars;
    let mut scatter = Scatter::new();
    for (b, (basis, g)) in lay.gram.iter().enumerate() {
        for a in 0..basis.len() {
            for c in a..basis.len() {
                let product = QPoly::term(Rational::one(), basis[a].mul(&basis[c])).mul(g);
                for (alpha, coeff) in product.terms() {
                    add_to(&mut scatter, alpha.clone(), (b, a, c), coeff.clone());
                }
            }
        }
    }
    if let Some(b) = lay.blocks.iter().position(|bl| bl.role == BlockRole::Equalities) {
        for (r, (beta, h)) in lay.rows.iter().enumerate() {
            let plus = QPoly::term(Rational::one(), beta.clone()).mul(h);
            let minus = plus.neg();
            for (row, p) in [(2 * r, &plus), (2 * r + 1, &minus)] {
                for (alpha, coeff) in p.terms() {
                    add_to(&mut scatter, alpha.clone(), (b, row, row), coeff.clone());
                }
            }
        }
    }
    debug_assert!(scatter.keys().all(|m| m.nvars() == n));
    Ok(assemble(pop, &t, lay.blocks, scatter))
}

/// Largest coefficient of `Σ σ_i g_i + Σ r_j h_j + q − f`, where the Gram
/// matrices `Y` (one per block, dense row-major) and the value `q` come from
/// a solver. Multipliers are read from the equality block as `u⁺ − u⁻`.
pub fn dual_residual(pop: &Pop, k: u32, gram: &[Vec<Vec<f64>>], q: f64) -> Result<f64> {
    let t = pop.truncation(k)?;
    let lay = layout(pop, &t);
    let mut acc: BTreeMap<Monomial, f64> = BTreeMap::new();
    let to_f = crate::numeric::rational::to_f64;
    let mut add = |m: Monomial, v: f64| *acc.entry(m).or_insert(0.0) += v;
    for (b, (basis, g)) in lay.gram.iter().enumerate() {
        let y = &gram[b];
        for a in 0..basis.len() {
            for c in 0..basis.len() {
                let shift = basis[a].mul(&basis[c]);
                for (gamma, coeff) in g.terms() {
                    add(shift.mul(gamma), y[a][c] * to_f(coeff));
                }
            }
        }
    }
    if let Some(b) = lay.blocks.iter().position(|bl| bl.role == BlockRole::Equalities) {
        let y = &gram[b];
        for (r, (beta, h)) in lay.rows.iter().enumerate() {
            let mult = y[2 * r][2 * r] - y[2 * r + 1][2 * r + 1];
            for (gamma, coeff) in h.terms() {
                add(beta.mul(gamma), mult * to_f(coeff));
            }
        }
    }
    add(Monomial::one(pop.nvars), q);
    for (m, c) in pop.objective.terms() {
        add(m.clone(), -to_f(c));
    }
    Ok(acc.values().fold(0.0, |worst, v| worst.max(v.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::numeric::rational::{int, rat};
    use alloc::vec;

    fn q2(s: &str) -> QPoly {
        poly(s, &["x", "y"]).unwrap()
    }

    fn pop2(f: &str, g: &[&str], h: &[&str]) -> Pop {
        Pop {
            nvars: 2,
            objective: q2(f),
            inequalities: g.iter().map(|s| q2(s)).collect(),
            equalities: h.iter().map(|s| q2(s)).collect(),
        }
    }

    #[test]
    fn unconstrained_moment_block() {
        let pop = pop2("x^2+y^2", &[], &[]);
        let inst = build_primal(&pop, 2).unwrap();
        assert_eq!(inst.blocks, vec![Block { size: 3, diagonal: false, role: BlockRole::Moment }]);
        // every moment of degree ≤ 2 except 1 is a variable
        assert_eq!(inst.nvars, 5);
        assert_eq!(inst.labels, Monomial::all_up_to(2, 2)[1..].to_vec());
        // F_0 = -e_11, the L(1) = 1 entry
        assert_eq!(inst.block_entries(0, 0).collect::<Vec<_>>(), vec![(0, 0, &int(-1))]);
        // x*y sits at (x, y) of the matrix indexed by 1, x, y
        let xy = inst.labels.iter().position(|m| m.0 == vec![1, 1]).unwrap();
        assert_eq!(inst.block_entries(xy + 1, 0).collect::<Vec<_>>(), vec![(1, 2, &int(1))]);
        assert_eq!(inst.objective.iter().filter(|c| c.is_one()).count(), 2);
        assert!(inst.is_well_formed());
    }

    #[test]
    fn equality_rows_on_the_line() {
        let pop = pop2("x^2+y^2", &[], &["x+y-1"]);
        let inst = build_primal(&pop, 2).unwrap();
        assert_eq!(inst.blocks.len(), 2);
        assert_eq!(inst.blocks[1], Block { size: 6, diagonal: true, role: BlockRole::Equalities });
        // rows h, x*h, y*h; row 0 reads L(x) + L(y) - L(1) with its negation
        assert_eq!(inst.entries.get(&(0, 1, 0, 0)), Some(&int(1)));
        assert_eq!(inst.entries.get(&(0, 1, 1, 1)), Some(&int(-1)));
        let x = inst.labels.iter().position(|m| m.0 == vec![1, 0]).unwrap() + 1;
        assert_eq!(inst.entries.get(&(x, 1, 0, 0)), Some(&int(1)));
        assert_eq!(inst.entries.get(&(x, 1, 1, 1)), Some(&int(-1)));
        // x*h = x^2 + x*y - x
        assert_eq!(inst.entries.get(&(x, 1, 2, 2)), Some(&int(-1)));
    }

    #[test]
    fn primal_and_dual_constructions_agree() {
        let pops = [
            pop2("x^2+y^2", &[], &["x+y-1"]),
            pop2("x", &["1-x^2-(y-1)^2"], &["y"]),
            pop2("x^4+x*y-y^3", &["1-x^2-y^2", "x"], &["x*y-1/3"]),
            pop2("x^3-2*x*y^2", &["1/2-x^2", "3-y"], &[]),
        ];
        for pop in &pops {
            for k in pop.min_order()..pop.min_order() + 3 {
                let p = build_primal(pop, k).unwrap();
                let d = build_dual(pop, k).unwrap();
                assert_eq!(p, d, "k = {k}");
                assert!(p.is_well_formed());
            }
        }
    }

    #[test]
    fn block_count_is_inequalities_plus_two() {
        let pop = pop2("x^2+y", &["1-x^2-y^2", "x+2", "y"], &["x-y"]);
        for k in 2..5 {
            assert_eq!(build_primal(&pop, k).unwrap().blocks.len(), pop.inequalities.len() + 2);
        }
    }

    #[test]
    fn hand_certificate_has_zero_residual() {
        // x^2 + y^2 - 1/2 = (x - y)^2 / 2 + ((x + y + 1) / 2)(x + y - 1)
        let pop = pop2("x^2+y^2", &[], &["x+y-1"]);
        let gram = vec![
            vec![vec![0.0; 3], vec![0.0, 0.5, -0.5], vec![0.0, -0.5, 0.5]],
            // multipliers of h, x*h, y*h: 1/2, 1/2, 1/2 as u+ - u-
            (0..6).map(|i| (0..6).map(|j| if i == j && i % 2 == 0 { 0.5 } else { 0.0 }).collect()).collect(),
        ];
        assert_eq!(dual_residual(&pop, 2, &gram, 0.5).unwrap(), 0.0);
        assert!(dual_residual(&pop, 2, &gram, 0.25).unwrap() > 0.2);
        // the same certificate, exactly, as a feasible point of F_i•Y = c_i
        let inst = build_dual(&pop, 2).unwrap();
        let y = |b: usize, i: usize, j: usize| -> Rational {
            match b {
                0 if i > 0 && j > 0 => {
                    if i == j {
                        rat(1, 2)
                    } else {
                        rat(-1, 2)
                    }
                }
                1 if i == j && i.is_multiple_of(2) => rat(1, 2),
                _ => Rational::zero(),
            }
        };
        let dot = |m: usize| -> Rational {
            inst.entries
                .range((m, 0, 0, 0)..(m + 1, 0, 0, 0))
                .map(|(&(_, b, i, j), v)| v * y(b, i, j) * if i == j { int(1) } else { int(2) })
                .sum()
        };
        for i in 1..=inst.nvars {
            assert_eq!(dot(i), inst.objective[i - 1]);
        }
        assert_eq!(dot(0) + &inst.offset, rat(1, 2));
    }
}
