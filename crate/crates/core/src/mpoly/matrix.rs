use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::poly::MPoly;
use crate::numeric::{Field, Rational};

/// Rectangular matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix<F> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<MPoly<F>>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn new(entries: Vec<Vec<MPoly<F>>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly<F> {
        &self.entries[i][j]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
                .collect(),
        )
    }

    pub fn eval(&self, point: &[F]) -> Vec<Vec<F>> {
        self.entries.iter().map(|r| r.iter().map(|p| p.eval(point)).collect()).collect()
    }

    /// Determinant of a square matrix by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> MPoly<F> {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let nv = self.entries.first().and_then(|r| r.first()).map_or(0, |p| p.nvars());
        if n == 0 {
            return MPoly::one(nv);
        }
        let mut a = self.entries.clone();
        let mut sign = false;
        let mut prev = MPoly::one(nv);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return MPoly::zero(nv);
                };
                a.swap(k, r);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                    a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
                }
                a[i][k] = MPoly::zero(nv);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }
}

/// Jacobian `∂gens_i/∂x_{vars_j}`.
pub fn jacobian<F: Field>(gens: &[MPoly<F>], vars: &[usize]) -> PolyMatrix<F> {
    PolyMatrix::new(gens.iter().map(|g| vars.iter().map(|&v| g.derivative(v)).collect()).collect())
}

/// Sylvester matrix of `p`, `q` with respect to `var`; rows are the shifted
/// coefficient vectors of `p` (deg q of them) then of `q` (deg p of them),
/// highest power first.
pub fn sylvester<F: Field>(p: &MPoly<F>, q: &MPoly<F>, var: usize) -> PolyMatrix<F> {
    let n = p.nvars();
    let a = p.coeffs_in(var);
    let b = q.coeffs_in(var);
    let (dp, dq) = (a.len() - 1, b.len() - 1);
    let size = dp + dq;
    let mut rows = Vec::with_capacity(size);
    for (coeffs, deg, shifts) in [(&a, dp, dq), (&b, dq, dp)] {
        for s in 0..shifts {
            let mut row = vec![MPoly::zero(n); size];
            for k in 0..=deg {
                row[s + deg - k] = coeffs[k].clone();
            }
            rows.push(row);
        }
    }
    PolyMatrix::new(rows)
}

/// Exact determinant of a rational matrix.
pub fn rational_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut det = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

/// Exact rank of a matrix over a field.
pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let inv = a[r][c].inv();
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].times(&inv);
            for k in c..cols {
                let t = f.times(&a[r][k]);
                a[i][k] = a[i][k].minus(&t);
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
