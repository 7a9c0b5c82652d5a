//! Invertible coordinate changes applied to ideals and semialgebraic sets.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::SemialgebraicSet;
use crate::error::Result;
use crate::ideal::{Ideal, QIdeal};
use crate::mpoly::QPoly;
use crate::numeric::{AlgebraicNumber, Rational};

/// New coordinates `y` of a point with old coordinates `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coordinates {
    /// `y_j = x_{order[j]}`.
    Permutation { order: Vec<usize> },
    /// `x = T y`, stored with its inverse.
    Linear { t: Vec<Vec<Rational>>, t_inv: Vec<Vec<Rational>> },
}

impl Coordinates {
    pub fn identity(n: usize) -> Self {
        Coordinates::Permutation { order: (0..n).collect() }
    }

    /// Variables in `first` come first, the rest follow in increasing order.
    pub fn leading(n: usize, first: &[usize]) -> Self {
        let mut order = first.to_vec();
        order.extend((0..n).filter(|v| !first.contains(v)));
        Coordinates::Permutation { order }
    }

    /// `x_i = y_i + c·y_j`.
    pub fn shear(n: usize, i: usize, j: usize, c: Rational) -> Self {
        let mut t = unit(n);
        let mut t_inv = unit(n);
        t[i][j] = c.clone();
        t_inv[i][j] = -c;
        Coordinates::Linear { t, t_inv }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Coordinates::Permutation { order } => order.iter().enumerate().all(|(j, &v)| j == v),
            Coordinates::Linear { t, .. } => *t == unit(t.len()),
        }
    }

    /// A polynomial in old coordinates rewritten in new ones.
    pub fn forward(&self, p: &QPoly) -> Result<QPoly> {
        match self {
            Coordinates::Permutation { order } => Ok(p.remap(p.nvars(), &inverse(order))),
            Coordinates::Linear { t, .. } => p.linear_change(t),
        }
    }

    pub fn backward(&self, p: &QPoly) -> Result<QPoly> {
        match self {
            Coordinates::Permutation { order } => Ok(p.remap(p.nvars(), order)),
            Coordinates::Linear { t_inv, .. } => p.linear_change(t_inv),
        }
    }

    pub fn forward_ideal(&self, i: &QIdeal) -> Result<QIdeal> {
        let gens = i.basis().iter().map(|g| self.forward(g)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::with_order(i.nvars(), gens, i.order()))
    }

    pub fn backward_ideal(&self, i: &QIdeal) -> Result<QIdeal> {
        let gens = i.basis().iter().map(|g| self.backward(g)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::with_order(i.nvars(), gens, i.order()))
    }

    pub fn forward_set(&self, s: &SemialgebraicSet) -> Result<SemialgebraicSet> {
        let mut err = None;
        let out = s.map_polys(|p| match self.forward(p) {
            Ok(q) => q,
            Err(e) => {
                err = Some(e);
                p.clone()
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// Old coordinates of a point given in new ones, when the change is a
    /// permutation.
    pub fn point_back(&self, y: &[AlgebraicNumber]) -> Option<Vec<AlgebraicNumber>> {
        match self {
            Coordinates::Permutation { order } => {
                let mut x = y.to_vec();
                for (j, &v) in order.iter().enumerate() {
                    x[v] = y[j].clone();
                }
                Some(x)
            }
            Coordinates::Linear { .. } => None,
        }
    }
}

fn unit(n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut inv = alloc::vec![0; order.len()];
    for (j, &v) in order.iter().enumerate() {
        inv[v] = j;
    }
    inv
}

/// The first `cap` permutations of `0..n` in lexicographic order, identity
/// first.
pub fn permutations(n: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    while out.len() < cap {
        out.push(cur.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}
