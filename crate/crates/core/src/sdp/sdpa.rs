//! SDPA sparse text format.
//!
//! ```text
//! "title                         comment lines start with " or *
//! * offset 1/2                   optional, constant added to both objectives
//! 3                              number of variables m
//! 2                              number of blocks
//! 3 -4                           block sizes, negative for diagonal blocks
//! 1.0e0 0.0e0 2.5e-1             objective vector c
//! 0 1 1 1 -1.0e0                 matrix block row col value (1-based, row ≤ col)
//! ```
//!
//! Matrix 0 is `F_0`. Values are written with 17 significant digits.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Zero;

use super::instance::{Block, BlockRole, SdpInstance};
use crate::error::{Error, Result};
use crate::mpoly::poly::render_monomial;
use crate::numeric::rational::{parse_decimal, to_f64};
use crate::numeric::{Integer, Rational};

fn number(q: &Rational) -> String {
    format!("{:.16e}", to_f64(q))
}

/// Renders `inst`. Variables with a moment label get a comment line naming it.
pub fn write_sdpa(inst: &SdpInstance, names: &[String]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\"realgap SDP instance");
    if !inst.offset.is_zero() {
        let _ = writeln!(s, "* offset {}", inst.offset);
    }
    for (i, m) in inst.labels.iter().enumerate() {
        let _ = writeln!(s, "* x{} = L({})", i + 1, render_monomial(m, names));
    }
    let _ = writeln!(s, "{}", inst.nvars);
    let _ = writeln!(s, "{}", inst.blocks.len());
    let sizes: Vec<String> = inst
        .blocks
        .iter()
        .map(|b| if b.diagonal { format!("-{}", b.size) } else { format!("{}", b.size) })
        .collect();
    let _ = writeln!(s, "{}", sizes.join(" "));
    let c: Vec<String> = inst.objective.iter().map(number).collect();
    let _ = writeln!(s, "{}", c.join(" "));
    for (&(m, b, i, j), v) in &inst.entries {
        let _ = writeln!(s, "{} {} {} {} {}", m, b + 1, i + 1, j + 1, number(v));
    }
    s
}

/// Parses a decimal literal with optional sign and exponent, exactly.
pub fn parse_exact(tok: &str) -> Option<Rational> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (mant, exp) = match body.find(['e', 'E']) {
        Some(p) => (&body[..p], body[p + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let mant = if let Some(rest) = mant.strip_suffix('.') { rest } else { mant };
    let mut q = parse_decimal(mant)?;
    let ten = Rational::from_integer(Integer::from(10));
    let scale = num_traits::pow(ten, exp.unsigned_abs() as usize);
    if exp >= 0 {
        q *= scale;
    } else {
        q /= scale;
    }
    Some(if neg { -q } else { q })
}

/// Reads an instance; block roles and labels are not recorded in the format.
pub fn read_sdpa(text: &str) -> Result<SdpInstance> {
    let mut offset = Rational::zero();
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let t = line.trim_start();
        if t.starts_with('"') || t.starts_with('*') {
            if let Some(v) = t.strip_prefix('*').and_then(|r| r.trim().strip_prefix("offset ")) {
                offset = parse_fraction(v.trim()).ok_or_else(|| bad(ln, "malformed offset"))?;
            }
            continue;
        }
        tokens.extend(t.split(|c: char| c.is_whitespace() || ",{}()".contains(c)).filter(|w| !w.is_empty()).map(|w| (ln, w)));
    }
    let mut it = tokens.into_iter();
    let mut next = |what: &str| it.next().ok_or_else(|| Error::Parse { column: 0, message: format!("missing {what}") });
    let int = |(ln, w): (usize, &str)| w.parse::<i64>().map_err(|_| bad(ln, "expected an integer"));
    let m = int(next("variable count")?)?;
    let nb = int(next("block count")?)?;
    if m < 0 || nb <= 0 {
        return Err(bad(0, "counts must be positive"));
    }
    let (m, nb) = (m as usize, nb as usize);
    let mut blocks = Vec::new();
    for _ in 0..nb {
        let s = int(next("block size")?)?;
        if s == 0 {
            return Err(bad(0, "empty block"));
        }
        blocks.push(Block { size: s.unsigned_abs() as usize, diagonal: s < 0, role: BlockRole::Unknown });
    }
    let mut objective = Vec::new();
    for _ in 0..m {
        let (ln, w) = next("objective coefficient")?;
        objective.push(parse_exact(w).ok_or_else(|| bad(ln, "malformed number"))?);
    }
    let mut entries = BTreeMap::new();
    while let Ok(first) = next("entry") {
        let ln = first.0;
        let mat = int(first)?;
        let b = int(next("block index")?)?;
        let i = int(next("row index")?)?;
        let j = int(next("column index")?)?;
        let (vl, vw) = next("entry value")?;
        let v = parse_exact(vw).ok_or_else(|| bad(vl, "malformed number"))?;
        if mat < 0 || mat as usize > m || b < 1 || b as usize > nb || i < 1 || j < 1 {
            return Err(bad(ln, "entry index out of range"));
        }
        let (b, i, j) = (b as usize - 1, i as usize - 1, j as usize - 1);
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        if j >= blocks[b].size || (blocks[b].diagonal && i != j) {
            return Err(bad(ln, "entry outside its block"));
        }
        if v.is_zero() {
            entries.remove(&(mat as usize, b, i, j));
        } else {
            entries.insert((mat as usize, b, i, j), v);
        }
    }
    Ok(SdpInstance { nvars: m, blocks, objective, entries, offset, labels: Vec::new() })
}

fn parse_fraction(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Integer = n.trim().parse().ok()?;
            let d: Integer = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => parse_exact(s),
    }
}

fn bad(line: usize, message: &str) -> Error {
    Error::Parse { column: 0, message: format!("line {}: {message}", line + 1) }
}

/// Entrywise agreement after conversion to `f64`, which is what the text
/// format preserves. The offset is written exactly.
pub fn same_as_floats(a: &SdpInstance, b: &SdpInstance) -> bool {
    let f = |q: &Rational| to_f64(q);
    let shape = |bl: &Block| (bl.size, bl.diagonal);
    a.nvars == b.nvars
        && a.blocks.iter().map(shape).eq(b.blocks.iter().map(shape))
        && a.objective.iter().map(f).eq(b.objective.iter().map(f))
        && a.entries.len() == b.entries.len()
        && a.entries.iter().zip(&b.entries).all(|((ka, va), (kb, vb))| ka == kb && f(va) == f(vb))
        && a.offset == b.offset
}
