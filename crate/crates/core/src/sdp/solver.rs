//! Dense primal-dual interior-point solver for small block SDPs.
//!
//! Consecutive diagonal rows that are exact negatives of each other encode a
//! linear equation on the variables; they are eliminated exactly before the
//! iteration, so the remaining problem can have an interior. The iteration is
//! an infeasible path-following method with the HKM search direction and
//! Mehrotra's predictor-corrector, started from scaled identities.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{Cholesky, DMatrix, DVector, SymmetricEigen};
use num_traits::{One, Zero};

use super::instance::SdpInstance;
use crate::error::{Error, Result};
use crate::numeric::rational::to_f64;
use crate::numeric::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Optimal,
    InfeasibleSuspected,
    /// Iteration cap reached or progress stalled; values are from the most
    /// accurate iterate seen.
    MaxIter,
}

impl SolveStatus {
    pub fn label(self) -> &'static str {
        match self {
            SolveStatus::Optimal => "optimal",
            SolveStatus::InfeasibleSuspected => "infeasible-suspected",
            SolveStatus::MaxIter => "max-iter",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { tol: 1e-8, max_iter: 200 }
    }
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub status: SolveStatus,
    /// `c·x + offset`; `-inf` when the moment side is unbounded.
    pub primal: f64,
    /// `F_0•Y + offset`; `-inf` when the dual is infeasible.
    pub dual: f64,
    pub x: Vec<f64>,
    /// Dual matrix `Y`, one dense block per instance block.
    pub gram: Vec<Vec<Vec<f64>>>,
    pub iterations: usize,
}

type Blocks = Vec<DMatrix<f64>>;

/// `min C•X s.t. A_i•X = b_i, X ⪰ 0` and its dual
/// `max b·y s.t. Σ y_i A_i + Z = C, Z ⪰ 0`.
struct Standard {
    sizes: Vec<usize>,
    c: Blocks,
    a: Vec<Blocks>,
    b: Vec<f64>,
}

/// Equations `Σ_i row_i x_i = rhs` found in diagonal blocks, with their
/// location `(block, row)` of the `+` copy.
struct Equations {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    at: Vec<(usize, usize)>,
}

fn detect_equations(inst: &SdpInstance) -> Equations {
    let mut eq = Equations { rows: Vec::new(), rhs: Vec::new(), at: Vec::new() };
    let value = |m: usize, b: usize, t: usize| inst.entries.get(&(m, b, t, t)).cloned().unwrap_or_else(Rational::zero);
    for (b, block) in inst.blocks.iter().enumerate() {
        if !block.diagonal {
            continue;
        }
        let mut t = 0;
        while t + 1 < block.size {
            let paired = (0..=inst.nvars).all(|m| value(m, b, t) == -value(m, b, t + 1))
                && (1..=inst.nvars).any(|m| !value(m, b, t).is_zero());
            if paired {
                eq.rows.push((1..=inst.nvars).map(|m| value(m, b, t)).collect());
                eq.rhs.push(value(0, b, t));
                eq.at.push((b, t));
                t += 2;
            } else {
                t += 1;
            }
        }
    }
    eq
}

/// Reduced row echelon form: `x_{pivot_r} = rhs_r − Σ_j coef_{r,j} x_j` over
/// the non-pivot columns `j`. `None` when the system is inconsistent.
struct Elimination {
    pivots: Vec<usize>,
    coef: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

fn eliminate(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>, nvars: usize) -> Option<Elimination> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..nvars {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        rhs.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        rhs[r] *= &inv;
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in 0..nvars {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
                let d = &f * &rhs[r];
                rhs[i] -= d;
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rhs[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    rows.truncate(r);
    rhs.truncate(r);
    Some(Elimination { pivots, coef: rows, rhs })
}

type QMat = Vec<Vec<Rational>>;

/// Where each block of the standard problem comes from: the kept rows of an
/// instance block, and a basis `W` (columns) of the subspace the block is
/// restricted to.
struct Kept {
    block: usize,
    rows: Vec<usize>,
    w: QMat,
}

/// Rows of an echelon basis of the span of the rows of `mats`. When every
/// matrix kills a common subspace `N`, this spans `N^⊥` and `W^T F W` keeps
/// all information of `F`.
fn row_space(mats: &[QMat], size: usize) -> QMat {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    for row in mats.iter().flatten() {
        if basis.len() == size {
            break;
        }
        let mut v = row.clone();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else { continue };
        let inv = Rational::one() / &v[p];
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, b) in basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
            }
        }
        basis.push((p, v));
    }
    basis.sort_by_key(|(p, _)| *p);
    basis.into_iter().map(|(_, v)| v).collect()
}

/// `W^T F W` with `W` given by its columns as rows of `w`.
fn congruence(f: &QMat, w: &QMat) -> QMat {
    let fw: QMat = w
        .iter()
        .map(|col| (0..f.len()).map(|i| f[i].iter().zip(col).map(|(a, b)| a * b).sum()).collect())
        .collect();
    w.iter()
        .map(|ci| fw.iter().map(|fcj| ci.iter().zip(fcj).map(|(a, b)| a * b).sum()).collect())
        .collect()
}

/// Upper triangle, row by row; off-diagonal entries count twice in `•`.
fn upper(f: &QMat) -> Vec<Rational> {
    let mut out = Vec::new();
    for (i, row) in f.iter().enumerate() {
        out.extend(row[i..].iter().cloned());
    }
    out
}

fn to_dense(f: &QMat) -> DMatrix<f64> {
    let n = f.len();
    DMatrix::from_fn(n, n, |i, j| to_f64(&f[i][j]))
}

fn add_scaled(y: &mut [QMat], c: &Rational, x: &[QMat]) {
    for (yb, xb) in y.iter_mut().zip(x) {
        for (yr, xr) in yb.iter_mut().zip(xb) {
            for (a, b) in yr.iter_mut().zip(xr) {
                if !b.is_zero() {
                    *a += c * b;
                }
            }
        }
    }
}

pub fn solve(inst: &SdpInstance, opts: &SolverOptions) -> Result<Solution> {
    if !inst.is_well_formed() {
        return Err(Error::InvalidInput("SDP data is not stored as symmetric upper-triangular blocks".into()));
    }
    let m = inst.nvars;
    let eqs = detect_equations(inst);
    let give_up = |primal: f64| Solution {
        status: SolveStatus::InfeasibleSuspected,
        primal,
        dual: primal,
        x: vec![f64::NAN; m],
        gram: inst.blocks.iter().map(|b| vec![vec![0.0; b.size]; b.size]).collect(),
        iterations: 0,
    };
    let Some(elim) = eliminate(eqs.rows.clone(), eqs.rhs.clone(), m) else {
        // no moment vector satisfies the equations; the multipliers are unbounded
        return Ok(give_up(f64::INFINITY));
    };
    let free: Vec<usize> = (0..m).filter(|j| !elim.pivots.contains(j)).collect();

    let paired: Vec<(usize, usize)> = eqs.at.iter().flat_map(|&(b, t)| [(b, t), (b, t + 1)]).collect();
    let rows_of: Vec<(usize, Vec<usize>)> = inst
        .blocks
        .iter()
        .enumerate()
        .map(|(b, block)| (b, (0..block.size).filter(|&t| !paired.contains(&(b, t))).collect::<Vec<_>>()))
        .filter(|(_, rows)| !rows.is_empty())
        .collect();

    // exact matrices on the kept rows, mats 0..=m
    let exact = |mat: usize| -> Vec<QMat> {
        rows_of
            .iter()
            .map(|(b, rows)| {
                let mut out = vec![vec![Rational::zero(); rows.len()]; rows.len()];
                let pos = |t: usize| rows.iter().position(|&r| r == t);
                for (i, j, v) in inst.block_entries(mat, *b) {
                    if let (Some(a), Some(c)) = (pos(i), pos(j)) {
                        out[a][c] = v.clone();
                        out[c][a] = v.clone();
                    }
                }
                out
            })
            .collect()
    };
    let f: Vec<Vec<QMat>> = (0..=m).map(exact).collect();

    // substitute the pivots: Σ x_i F_i − F_0 = Σ_free x_j F'_j − F'_0
    let mut f0 = f[0].clone();
    let mut constant = Rational::zero();
    for (r, &p) in elim.pivots.iter().enumerate() {
        add_scaled(&mut f0, &-elim.rhs[r].clone(), &f[p + 1]);
        constant += &inst.objective[p] * &elim.rhs[r];
    }
    let mut reduced = Vec::new();
    for &j in &free {
        let mut fj = f[j + 1].clone();
        let mut cj = inst.objective[j].clone();
        for (r, &p) in elim.pivots.iter().enumerate() {
            let coef = &elim.coef[r][j];
            if !coef.is_zero() {
                add_scaled(&mut fj, &-coef.clone(), &f[p + 1]);
                cj -= coef * &inst.objective[p];
            }
        }
        let zero = fj.iter().all(|blk| blk.iter().flatten().all(|v| v.is_zero()));
        if zero {
            if !cj.is_zero() {
                // a moment that no constraint sees: the objective is unbounded below
                return Ok(give_up(f64::NEG_INFINITY));
            }
            continue;
        }
        reduced.push((j, fj, cj));
    }

    // restrict each block to the complement of the kernel shared by all its matrices
    let mut kept = Vec::new();
    for (k, (b, rows)) in rows_of.iter().enumerate() {
        let mats: Vec<QMat> = core::iter::once(f0[k].clone()).chain(reduced.iter().map(|(_, fj, _)| fj[k].clone())).collect();
        let w = row_space(&mats, rows.len());
        if !w.is_empty() {
            kept.push((k, Kept { block: *b, rows: rows.clone(), w }));
        }
    }
    let restrict = |mats: &[QMat]| -> Vec<QMat> {
        kept.iter()
            .map(|(k, kb)| if kb.w.len() == kb.rows.len() { mats[*k].clone() } else { congruence(&mats[*k], &kb.w) })
            .collect()
    };
    let c_exact = restrict(&f0);
    let a_exact: Vec<Vec<QMat>> = reduced.iter().map(|(_, fj, _)| restrict(fj)).collect();
    // drop moments whose matrix depends on earlier ones; a dependent matrix with a
    // different objective coefficient is a direction of unbounded descent
    let mut independent = Vec::new();
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (idx, blocks) in a_exact.iter().enumerate() {
        let mut v: Vec<Rational> = blocks.iter().flat_map(upper).collect();
        v.push(reduced[idx].2.clone());
        let last = v.len() - 1;
        for (p, bv) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(bv) {
                    *x -= &f * y;
                }
            }
        }
        match v[..last].iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = Rational::one() / &v[p];
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                basis.push((p, v));
                independent.push(idx);
            }
            None if !v[last].is_zero() => return Ok(give_up(f64::NEG_INFINITY)),
            None => {}
        }
    }
    let dense = |mats: &[QMat]| -> Blocks { mats.iter().map(to_dense).collect() };
    let std_problem = Standard {
        sizes: kept.iter().map(|(_, kb)| kb.w.len()).collect(),
        c: dense(&c_exact).iter().map(|blk| -blk).collect(),
        a: independent.iter().map(|&i| dense(&a_exact[i])).collect(),
        b: independent.iter().map(|&i| to_f64(&reduced[i].2)).collect(),
    };
    let it = interior_point(&std_problem, opts);

    // primal variables in the original numbering
    let mut x = vec![0.0; m];
    for (k, &i) in independent.iter().enumerate() {
        x[reduced[i].0] = -it.y[k];
    }
    for (r, &p) in elim.pivots.iter().enumerate() {
        let mut v = to_f64(&elim.rhs[r]);
        for &j in &free {
            v -= to_f64(&elim.coef[r][j]) * x[j];
        }
        x[p] = v;
    }
    let offset = to_f64(&inst.offset);
    let cf: Vec<f64> = inst.objective.iter().map(to_f64).collect();
    let primal = cf.iter().zip(&x).map(|(c, v)| c * v).sum::<f64>() + offset;
    let dual = -inner(&std_problem.c, &it.x) + to_f64(&constant) + offset;

    // dual matrix on the original blocks, Y = W X W^T on the kept rows
    let mut gram: Vec<Vec<Vec<f64>>> = inst.blocks.iter().map(|bl| vec![vec![0.0; bl.size]; bl.size]).collect();
    for (idx, (_, kb)) in kept.iter().enumerate() {
        let w = DMatrix::from_fn(kb.rows.len(), kb.w.len(), |i, j| to_f64(&kb.w[j][i]));
        let y = &w * &it.x[idx] * w.transpose();
        for (a, &i) in kb.rows.iter().enumerate() {
            for (c, &j) in kb.rows.iter().enumerate() {
                gram[kb.block][i][j] = y[(a, c)];
            }
        }
    }
    // multipliers of the equations from a least-squares fit of F_i•Y = c_i
    if !eqs.at.is_empty() {
        let dense_y: Vec<DMatrix<f64>> = rows_of
            .iter()
            .map(|(b, rows)| DMatrix::from_fn(rows.len(), rows.len(), |i, j| gram[*b][rows[i]][rows[j]]))
            .collect();
        let resid = DVector::from_iterator(
            m,
            (0..m).map(|i| cf[i] - f[i + 1].iter().zip(&dense_y).map(|(fi, y)| to_dense(fi).dot(y)).sum::<f64>()),
        );
        let e = DMatrix::from_fn(m, eqs.at.len(), |i, r| to_f64(&eqs.rows[r][i]));
        let r = e.svd(true, true).solve(&resid, 1e-12).map_err(|s| Error::Internal(s.into()))?;
        for (q, &(blk, t)) in eqs.at.iter().enumerate() {
            gram[blk][t][t] = r[q].max(0.0);
            gram[blk][t + 1][t + 1] = (-r[q]).max(0.0);
        }
    }
    let (primal, dual) = match it.status {
        SolveStatus::InfeasibleSuspected if it.moment_unbounded => (f64::NEG_INFINITY, f64::NEG_INFINITY),
        SolveStatus::InfeasibleSuspected if it.sos_unbounded => (f64::INFINITY, f64::INFINITY),
        _ => (primal, dual),
    };
    Ok(Solution { status: it.status, primal, dual, x, gram, iterations: it.iterations })
}

fn axpy(y: &mut Blocks, alpha: f64, x: &Blocks) {
    for (yb, xb) in y.iter_mut().zip(x) {
        *yb += xb * alpha;
    }
}

fn inner(a: &Blocks, b: &Blocks) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.dot(y)).sum()
}

fn norm(a: &Blocks) -> f64 {
    libm::sqrt(inner(a, a))
}

fn scaled_identity(sizes: &[usize], s: &[f64]) -> Blocks {
    sizes.iter().zip(s).map(|(&n, &v)| DMatrix::identity(n, n) * v).collect()
}

fn symmetrize(a: &Blocks) -> Blocks {
    a.iter().map(|m| (m + m.transpose()) * 0.5).collect()
}

/// Largest `α` with `X + α·dX ⪰ 0`, infinite if every step is feasible.
fn max_step(x: &Blocks, dx: &Blocks) -> f64 {
    let mut best = f64::INFINITY;
    for (xb, db) in x.iter().zip(dx) {
        let Some(ch) = Cholesky::new(xb.clone()) else { return 0.0 };
        let l = ch.l();
        let n = l.nrows();
        let linv = l.solve_lower_triangular(&DMatrix::identity(n, n)).expect("nonsingular factor");
        let s = &linv * db * linv.transpose();
        let s = (&s + s.transpose()) * 0.5;
        let lmin = SymmetricEigen::new(s).eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
        if lmin < 0.0 {
            best = best.min(-1.0 / lmin);
        }
    }
    best
}

fn inverse(x: &Blocks) -> Option<Blocks> {
    x.iter().map(|b| Cholesky::new(b.clone()).map(|c| c.inverse())).collect()
}

struct Iterate {
    x: Blocks,
    y: Vec<f64>,
    status: SolveStatus,
    iterations: usize,
    /// `F_0•Y` grows without bound: the moment side is infeasible.
    sos_unbounded: bool,
    /// `c·x` decreases without bound: the sums of squares are infeasible.
    moment_unbounded: bool,
}

fn interior_point(p: &Standard, opts: &SolverOptions) -> Iterate {
    let m = p.b.len();
    let nb = p.sizes.len();
    let n_total: usize = p.sizes.iter().sum();
    let block_norm = |mat: &DMatrix<f64>| libm::sqrt(mat.dot(mat));
    let mut xi = Vec::new();
    let mut eta = Vec::new();
    for k in 0..nb {
        let s = p.sizes[k] as f64;
        let root = libm::sqrt(s);
        let mut ratio: f64 = 0.0;
        let mut a_max: f64 = 0.0;
        for i in 0..m {
            let na = block_norm(&p.a[i][k]);
            ratio = ratio.max((1.0 + p.b[i].abs()) / (1.0 + na));
            a_max = a_max.max(na);
        }
        xi.push(10f64.max(root).max(root * ratio));
        eta.push(10f64.max(root).max(a_max).max(block_norm(&p.c[k])));
    }
    let mut x = scaled_identity(&p.sizes, &xi);
    let mut z = scaled_identity(&p.sizes, &eta);
    let mut y = vec![0.0; m];
    let b_norm = 1.0 + libm::sqrt(p.b.iter().map(|v| v * v).sum());
    let c_norm = 1.0 + norm(&p.c);

    let apply = |x: &Blocks| -> Vec<f64> { p.a.iter().map(|ai| inner(ai, x)).collect() };
    let adjoint = |y: &[f64]| -> Blocks {
        let mut out: Blocks = p.sizes.iter().map(|&n| DMatrix::zeros(n, n)).collect();
        for (ai, yi) in p.a.iter().zip(y) {
            axpy(&mut out, *yi, ai);
        }
        out
    };

    let result = |x: Blocks, y: Vec<f64>, status, iterations, sos: bool, moment: bool| Iterate {
        x,
        y,
        status,
        iterations,
        sos_unbounded: sos,
        moment_unbounded: moment,
    };
    let mut stalls = 0;
    let mut best: Option<(f64, usize, Blocks, Vec<f64>)> = None;
    let mut iterations = opts.max_iter;
    for iter in 0..opts.max_iter {
        iterations = iter;
        let ax = apply(&x);
        let rp: Vec<f64> = p.b.iter().zip(&ax).map(|(b, a)| b - a).collect();
        let aty = adjoint(&y);
        let rd: Blocks = (0..nb).map(|k| &p.c[k] - &z[k] - &aty[k]).collect();
        let pobj = inner(&p.c, &x);
        let dobj: f64 = p.b.iter().zip(&y).map(|(b, v)| b * v).sum();
        let gap = inner(&x, &z);
        let rel_gap = gap.max((pobj - dobj).abs()) / (1.0 + pobj.abs() + dobj.abs());
        let pinf = libm::sqrt(rp.iter().map(|v| v * v).sum()) / b_norm;
        let dinf = norm(&rd) / c_norm;
        if rel_gap < opts.tol && pinf < opts.tol && dinf < opts.tol {
            return result(x, y, SolveStatus::Optimal, iter, false, false);
        }
        // certificates of infeasibility along diverging iterates
        let atyz = norm(&(0..nb).map(|k| &aty[k] + &z[k]).collect::<Blocks>());
        if dobj > 0.0 && atyz / dobj < opts.tol && pinf > libm::sqrt(opts.tol) {
            return result(x, y, SolveStatus::InfeasibleSuspected, iter, false, true);
        }
        let ax_norm = libm::sqrt(ax.iter().map(|v| v * v).sum());
        if pobj < 0.0 && ax_norm / -pobj < opts.tol && dinf > libm::sqrt(opts.tol) {
            return result(x, y, SolveStatus::InfeasibleSuspected, iter, true, false);
        }
        let measure = rel_gap.max(pinf).max(dinf);
        if best.as_ref().is_none_or(|(b, ..)| measure < *b) {
            best = Some((measure, iter, x.clone(), y.clone()));
        }
        let (best_measure, best_iter) = best.as_ref().map(|(b, i, ..)| (*b, *i)).expect("set above");
        // diverging iterates or lost accuracy without a certificate
        if norm(&x) > 1e13 || norm(&z) > 1e13 || (measure > 1e3 * best_measure && iter > best_iter + 5) {
            break;
        }

        let mu = gap / n_total as f64;
        let Some(zinv) = inverse(&z) else { break };
        // Schur complement M_ij = A_i • (X A_j Z^{-1})
        let w: Vec<Blocks> = p.a.iter().map(|aj| (0..nb).map(|k| &x[k] * &aj[k] * &zinv[k]).collect()).collect();
        let mut schur = DMatrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                schur[(i, j)] = inner(&p.a[i], &w[j]);
            }
        }
        let schur = (&schur + schur.transpose()) * 0.5;
        let trace = schur.trace().abs().max(1.0);
        let factor = Cholesky::new(schur.clone())
            .or_else(|| Cholesky::new(&schur + DMatrix::identity(m, m) * (1e-13 * trace)));
        let lu = schur.clone().lu();
        let solve_once = |rhs: &DVector<f64>| -> Option<DVector<f64>> {
            match &factor {
                Some(c) => Some(c.solve(rhs)),
                None => lu.solve(rhs),
            }
        };
        // one step of iterative refinement against the unperturbed matrix
        let solve_m = |rhs: DVector<f64>| -> Option<DVector<f64>> {
            let mut v = solve_once(&rhs)?;
            let r = &rhs - &schur * &v;
            v += solve_once(&r)?;
            Some(v)
        };
        let xrdz: Blocks = (0..nb).map(|k| &x[k] * &rd[k] * &zinv[k]).collect();
        // direction for target T = (σμI − corrector)·Z^{-1}
        let direction = |target: &Blocks| -> Option<(Blocks, Vec<f64>, Blocks)> {
            let rhs = DVector::from_iterator(
                m,
                (0..m).map(|i| p.b[i] - inner(&p.a[i], target) + inner(&p.a[i], &xrdz)),
            );
            let dy = solve_m(rhs)?;
            let dy: Vec<f64> = dy.iter().copied().collect();
            let atdy = adjoint(&dy);
            let dz: Blocks = (0..nb).map(|k| &rd[k] - &atdy[k]).collect();
            let dx_raw: Blocks = (0..nb).map(|k| &target[k] - &x[k] - &x[k] * &dz[k] * &zinv[k]).collect();
            Some((symmetrize(&dx_raw), dy, dz))
        };
        // predictor
        let zeros: Blocks = p.sizes.iter().map(|&n| DMatrix::zeros(n, n)).collect();
        let Some((dx_a, _, dz_a)) = direction(&zeros) else { break };
        let ap = (0.95 * max_step(&x, &dx_a)).min(1.0);
        let ad = (0.95 * max_step(&z, &dz_a)).min(1.0);
        let mut xa = x.clone();
        axpy(&mut xa, ap, &dx_a);
        let mut za = z.clone();
        axpy(&mut za, ad, &dz_a);
        let mu_aff = inner(&xa, &za) / n_total as f64;
        let ratio = (mu_aff / mu).clamp(0.0, 1.0);
        let sigma = ratio * ratio * ratio;
        // corrector
        let target: Blocks = (0..nb)
            .map(|k| {
                let n = p.sizes[k];
                (DMatrix::identity(n, n) * (sigma * mu) - &dx_a[k] * &dz_a[k]) * &zinv[k]
            })
            .collect();
        let Some((dx, dy, dz)) = direction(&target) else { break };
        let gamma = 0.9 + 0.09 * (1.0 - ratio);
        let ap = (gamma * max_step(&x, &dx)).min(1.0);
        let ad = (gamma * max_step(&z, &dz)).min(1.0);
        if ap < 1e-10 && ad < 1e-10 {
            stalls += 1;
            if stalls > 3 {
                break;
            }
        }
        axpy(&mut x, ap, &dx);
        axpy(&mut z, ad, &dz);
        for (v, d) in y.iter_mut().zip(&dy) {
            *v += ad * d;
        }
        x = symmetrize(&x);
        z = symmetrize(&z);
    }
    // the cap was hit or progress stopped: report the most accurate iterate
    match best {
        Some((_, _, bx, by)) => result(bx, by, SolveStatus::MaxIter, iterations, false, false),
        None => result(x, y, SolveStatus::MaxIter, iterations, false, false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::parse::poly;
    use crate::sdp::instance::{build_dual, dual_residual};
    use crate::sdp::{build_primal, Pop};

    fn pop(names: &[&str], f: &str, g: &[&str], h: &[&str]) -> Pop {
        let q = |s: &str| poly(s, names).unwrap();
        Pop {
            nvars: names.len(),
            objective: q(f),
            inequalities: g.iter().map(|s| q(s)).collect(),
            equalities: h.iter().map(|s| q(s)).collect(),
        }
    }

    fn run(p: &Pop, k: u32) -> Solution {
        solve(&build_primal(p, k).unwrap(), &SolverOptions::default()).unwrap()
    }

    #[test]
    fn minimize_a_square() {
        let s = run(&pop(&["x"], "x^2", &[], &[]), 2);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!(s.primal.abs() < 1e-6 && s.dual.abs() < 1e-6, "{s:?}");
    }

    #[test]
    fn closest_point_on_a_line() {
        let p = pop(&["x", "y"], "x^2+y^2", &[], &["x+y-1"]);
        let s = run(&p, 2);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.primal - 0.5).abs() < 1e-6, "{s:?}");
        assert!((s.dual - 0.5).abs() < 1e-6, "{s:?}");
        assert!(dual_residual(&p, 2, &s.gram, s.dual).unwrap() < 1e-6);
        let s2 = solve(&build_dual(&p, 2).unwrap(), &SolverOptions::default()).unwrap();
        assert!((s2.primal - s.primal).abs() < 1e-9);
    }

    #[test]
    fn shifted_objective_and_inequality() {
        // min (x-1)^2 + 3 on 2 - x ≥ 0 and x ≥ 0: 3 at x = 1
        let p = pop(&["x"], "(x-1)^2+3", &["2-x", "x"], &[]);
        let s = run(&p, 2);
        assert_eq!(s.status, SolveStatus::Optimal);
        assert!((s.primal - 3.0).abs() < 1e-6 && (s.dual - 3.0).abs() < 1e-6, "{s:?}");
        assert!(dual_residual(&p, 2, &s.gram, s.dual).unwrap() < 1e-6);
    }

    #[test]
    fn unbounded_moment_side() {
        // min x on the line y = 0 with the disk unusable at order one
        let s = run(&pop(&["x", "y"], "x", &["1-x^2-(y-1)^2"], &["y"]), 1);
        assert_eq!(s.status, SolveStatus::InfeasibleSuspected);
        assert_eq!(s.primal, f64::NEG_INFINITY);
    }

    #[test]
    fn inconsistent_moment_equations() {
        // x = 0 and x = 1 at once
        let s = run(&pop(&["x"], "x^2", &[], &["x", "x-1"]), 2);
        assert_eq!(s.status, SolveStatus::InfeasibleSuspected);
        assert_eq!(s.primal, f64::INFINITY);
    }

    #[test]
    fn tangent_disk_on_a_line() {
        // the feasible set is the origin; the sums of squares never attain 0
        let p = pop(&["x", "y"], "x", &["1-x^2-(y-1)^2"], &["y"]);
        for k in 2..4 {
            let s = run(&p, k);
            assert!(s.primal.abs() < 1e-5 && s.dual.abs() < 1e-5, "{s:?}");
            assert!(s.dual <= s.primal + 1e-8);
        }
    }

    #[test]
    fn dependent_moments_are_presolved() {
        // odd order with a cubic objective: cubic moments only meet the equations
        let p = pop(&["x", "y", "z"], "x^2*y+z", &["1-x^2-y^2-z^2"], &["x+y+z-1/2"]);
        let s = run(&p, 3);
        assert_eq!((s.status, s.primal), (SolveStatus::InfeasibleSuspected, f64::NEG_INFINITY));
        let s4 = run(&p, 4);
        let s5 = run(&p, 5);
        assert_eq!((s4.status, s5.status), (SolveStatus::Optimal, SolveStatus::Optimal));
        assert!((s4.primal - s5.primal).abs() < 1e-6 && (s5.primal - s5.dual).abs() < 1e-6);
    }

    #[test]
    fn malformed_data_is_rejected() {
        let mut inst = build_primal(&pop(&["x"], "x^2", &[], &[]), 2).unwrap();
        inst.entries.insert((1, 0, 1, 0), Rational::one());
        assert!(matches!(solve(&inst, &SolverOptions::default()), Err(Error::InvalidInput(_))));
    }
}
