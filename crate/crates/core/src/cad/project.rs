//! Collins projection and the per-level factor sets it produces.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mpoly::factor::factor;
use crate::mpoly::gcd::squarefree_decomposition;
use crate::mpoly::{subresultant_chain, QPoly};

/// Projection of `polys` along `var`: leading coefficients, principal
/// subresultant coefficients of each polynomial with its derivative and of
/// each pair. Polynomials free of `var` pass through. The result is
/// normalized by [`normalize`].
pub fn project(polys: &[QPoly], var: usize) -> Result<Vec<QPoly>> {
    let mut out: Vec<QPoly> = Vec::new();
    let involved: Vec<&QPoly> = polys.iter().filter(|p| p.involves(var)).collect();
    for p in polys.iter().filter(|p| !p.involves(var)) {
        out.push(p.clone());
    }
    for p in &involved {
        out.push(p.lc_in(var));
        let dp = p.derivative(var);
        let chain = subresultant_chain(p, &dp, var);
        let top = dp.degree_in(var).max(0) as usize;
        out.extend(chain.into_iter().take(top));
    }
    for (i, p) in involved.iter().enumerate() {
        for q in &involved[i + 1..] {
            let (a, b) = if p.degree_in(var) >= q.degree_in(var) { (p, q) } else { (q, p) };
            let top = b.degree_in(var) as usize;
            out.extend(subresultant_chain(a, b, var).into_iter().take(top));
        }
    }
    normalize(out)
}

/// Irreducible factors (primitive, positive leading coefficient, constants
/// dropped, duplicates removed) in a deterministic order. Polynomials beyond
/// the factorization cap contribute their squarefree parts instead.
pub fn normalize(polys: impl IntoIterator<Item = QPoly>) -> Result<Vec<QPoly>> {
    let mut out: Vec<QPoly> = Vec::new();
    for p in polys {
        if p.is_zero() || p.is_constant() {
            continue;
        }
        let pieces: Vec<QPoly> = match factor(&p) {
            Ok(fs) => fs.into_iter().map(|(f, _)| f).collect(),
            Err(Error::UnsupportedScope(_)) => squarefree_decomposition(&p).into_iter().map(|(f, _)| f).collect(),
            Err(e) => return Err(e),
        };
        for f in pieces {
            if f.is_constant() {
                continue;
            }
            let f = f.primitive();
            if !out.contains(&f) {
                out.push(f);
            }
        }
    }
    sort_canonical(&mut out);
    Ok(out)
}

/// Main variable, then total degree, then rendering.
pub fn sort_canonical(polys: &mut [QPoly]) {
    polys.sort_by_cached_key(|p| (p.main_var(), p.total_degree(), p.to_string()));
}

/// Factor sets by level: `levels[k]` holds the polynomials whose main
/// variable is `k` (so they live on `R^{k+1}`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionLadder {
    pub nvars: usize,
    pub levels: Vec<Vec<QPoly>>,
}

impl ProjectionLadder {
    /// Projects `polys` down to the first variable.
    pub fn new(polys: &[QPoly], nvars: usize) -> Result<Self> {
        let mut levels: Vec<Vec<QPoly>> = alloc::vec![Vec::new(); nvars];
        let place = |levels: &mut Vec<Vec<QPoly>>, ps: Vec<QPoly>| {
            for p in ps {
                let k = p.main_var().expect("constants are dropped");
                if !levels[k].contains(&p) {
                    levels[k].push(p);
                }
            }
        };
        place(&mut levels, normalize(polys.iter().cloned())?);
        for var in (1..nvars).rev() {
            let here = levels[var].clone();
            if here.is_empty() {
                continue;
            }
            let below = project(&here, var)?;
            place(&mut levels, below);
        }
        for l in &mut levels {
            sort_canonical(l);
        }
        Ok(Self { nvars, levels })
    }

    /// Polynomials on `R^k`, i.e. with main variable below `k`.
    pub fn up_to(&self, k: usize) -> Vec<QPoly> {
        self.levels[..k].iter().flatten().cloned().collect()
    }
}
