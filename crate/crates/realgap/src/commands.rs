//! The pipeline behind each subcommand. Every command returns its report as
//! text plus an exit code; errors carry the name of the stage that failed.

use std::fmt::Write;
use std::fs;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use realgap_core::cad::{CadTree, ProjectionLadder};
use realgap_core::ideal::{Primality, QIdeal};
use realgap_core::mpoly::factor::factor;
use realgap_core::numeric::rational::int;
use realgap_core::real::{
    augment_to_fixpoint, check_equality, is_real, ComponentOutcome, Equality, EqualityVerdict, Reality,
    RealityCertificate,
};
use realgap_core::sdp::{build_primal, guarantee, solve_order, write_sdpa, GapReport, Guarantee, OrderRecord, Pop, SolverOptions};
use realgap_core::{AlgebraicNumber, QPoly};

use crate::problem::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckReal,
    CheckIk,
    Augment,
    Relax,
    Solve,
    Report,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub tol: f64,
    pub max_order: Option<u32>,
    pub dump_cad: bool,
    /// Directory for SDPA files, one per order.
    pub sdpa: Option<PathBuf>,
    /// Tab-separated table instead of the text report.
    pub tsv: bool,
    /// Stem for exported file names.
    pub name: String,
}

impl Default for Options {
    fn default() -> Self {
        Options { tol: SolverOptions::default().tol, max_order: None, dump_cad: false, sdpa: None, tsv: false, name: "problem".into() }
    }
}

pub const EXIT_DEFINITE: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {message}")]
pub struct StageError {
    pub stage: &'static str,
    pub message: String,
}

fn stage<E: ToString>(stage: &'static str) -> impl FnOnce(E) -> StageError {
    move |e| StageError { stage, message: e.to_string() }
}

pub fn run(cmd: Command, p: &Problem, opts: &Options) -> Result<Output, StageError> {
    match cmd {
        Command::CheckReal => check_real(p, opts),
        Command::CheckIk => check_ik(p, opts),
        Command::Augment => augment(p, opts),
        Command::Relax => relax(p, opts),
        Command::Solve => solve(p, opts),
        Command::Report => report(p, opts),
    }
}

fn check_real(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let v = is_real(&p.ideal(), p.hint().as_deref()).map_err(stage("reality check"))?;
    let mut s = String::new();
    let _ = writeln!(s, "ideal: {}", p.ideal().render(&p.vars));
    let _ = writeln!(s, "verdict: {:?}", v.verdict);
    for (i, c) in v.components.iter().enumerate() {
        let _ = writeln!(s, "component {}: {}", i + 1, c.prime.render(&p.vars));
        let _ = writeln!(s, "  certificate: {}", certificate(&c.certificate, &p.vars));
    }
    dump_cad(&mut s, p, opts)?;
    let code = if v.verdict == Reality::Inconclusive { EXIT_INCONCLUSIVE } else { EXIT_DEFINITE };
    Ok(Output { text: s, code })
}

fn check_ik(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let v = check_equality(&p.set(), &p.ideal(), p.hint().as_deref()).map_err(stage("equality check"))?;
    let mut s = String::new();
    let _ = writeln!(s, "set: {}", p.set().render(&p.vars));
    let _ = writeln!(s, "ideal: {}", p.ideal().render(&p.vars));
    let _ = writeln!(s, "verdict: {}", equality_label(v.verdict));
    write_components(&mut s, &v, &p.vars);
    dump_cad(&mut s, p, opts)?;
    Ok(Output { text: s, code: equality_code(v.verdict) })
}

fn augment(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let fix = augment_to_fixpoint(&p.set(), &p.ideal(), p.hint().as_deref()).map_err(stage("augmentation"))?;
    let mut s = String::new();
    let _ = writeln!(s, "ideal: {}", p.ideal().render(&p.vars));
    for (r, round) in fix.rounds.iter().enumerate() {
        let extra: Vec<String> = round.extra.iter().map(|g| factored(g, &p.vars)).collect();
        let added = if extra.is_empty() { "no generator, components repaired".to_string() } else { extra.join(", ") };
        let _ = writeln!(s, "round {}: added {added}; ideal {}", r + 1, round.ideal.render(&p.vars));
    }
    let _ = writeln!(s, "rounds: {}", fix.rounds.len());
    let _ = writeln!(s, "verdict: {}", equality_label(fix.verdict.verdict));
    let _ = writeln!(s, "generators:");
    for g in generators(&fix.ideal) {
        let _ = writeln!(s, "  {}", factored(&g, &p.vars));
    }
    write_components(&mut s, &fix.verdict, &p.vars);
    dump_cad(&mut s, p, opts)?;
    let code = if fix.verdict.verdict == Equality::Equal { EXIT_DEFINITE } else { EXIT_INCONCLUSIVE };
    Ok(Output { text: s, code })
}

fn relax(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let pop = p.pop().map_err(stage("relaxation"))?;
    let mut s = String::new();
    for k in orders(p, &pop, opts)? {
        match build_primal(&pop, k) {
            Ok(inst) => {
                let sizes: Vec<String> = inst
                    .blocks
                    .iter()
                    .map(|b| if b.diagonal { format!("-{}", b.size) } else { b.size.to_string() })
                    .collect();
                let _ = writeln!(
                    s,
                    "k={k}: {} moment variables, blocks [{}], {} nonzeros",
                    inst.nvars,
                    sizes.join(" "),
                    inst.entries.len()
                );
            }
            Err(e) => {
                let _ = writeln!(s, "k={k}: {e}");
            }
        }
    }
    export(&mut s, p, &pop, opts)?;
    Ok(Output { text: s, code: EXIT_DEFINITE })
}

fn solve(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let pop = p.pop().map_err(stage("relaxation"))?;
    let records = solve_orders(&pop, orders(p, &pop, opts)?, opts);
    let r = GapReport { k0: pop.min_order(), records, guarantee: Guarantee::None };
    let mut s = String::new();
    if opts.tsv {
        s += &r.render_tsv();
    } else {
        let _ = writeln!(s, "minimal order: {}", r.k0);
        s += &r.render_table();
    }
    export(&mut s, p, &pop, opts)?;
    Ok(Output { text: s, code: EXIT_DEFINITE })
}

/// Equality check, augmentation when it fails, then the relaxations of the
/// (possibly augmented) problem with the guarantee attached.
fn report(p: &Problem, opts: &Options) -> Result<Output, StageError> {
    let mut pop = p.pop().map_err(stage("relaxation"))?;
    let mut notes = String::new();
    let mut verdict: Option<EqualityVerdict> = None;
    match check_equality(&p.set(), &p.ideal(), p.hint().as_deref()) {
        Ok(v) if v.verdict == Equality::NotEqual => {
            let _ = writeln!(notes, "equality check: {}", equality_label(v.verdict));
            match augment_to_fixpoint(&p.set(), &p.ideal(), p.hint().as_deref()) {
                Ok(fix) if fix.verdict.verdict == Equality::Equal => {
                    let gens = generators(&fix.ideal);
                    let shown: Vec<String> = gens.iter().map(|g| factored(g, &p.vars)).collect();
                    let _ = writeln!(notes, "augmented ideal: <{}> after {} round(s)", shown.join(", "), fix.rounds.len());
                    let _ = writeln!(notes, "equality check after augmentation: {}", equality_label(fix.verdict.verdict));
                    pop.equalities = gens;
                    verdict = Some(fix.verdict);
                }
                Ok(fix) => {
                    let _ = writeln!(notes, "augmentation ended at: {}", equality_label(fix.verdict.verdict));
                    verdict = Some(v);
                }
                Err(e) => {
                    let _ = writeln!(notes, "augmentation failed: {e}");
                    verdict = Some(v);
                }
            }
        }
        Ok(v) => {
            let _ = writeln!(notes, "equality check: {}", equality_label(v.verdict));
            verdict = Some(v);
        }
        Err(e) => {
            let _ = writeln!(notes, "equality check failed: {e}");
        }
    }
    let g = guarantee(verdict.as_ref()).map_err(stage("guarantee"))?;
    let records = solve_orders(&pop, orders(p, &pop, opts)?, opts);
    let r = GapReport { k0: pop.min_order(), records, guarantee: g };
    let mut s = String::new();
    if opts.tsv {
        s += &r.render_tsv();
    } else {
        s += &notes;
        s += &r.render_text();
    }
    export(&mut s, p, &pop, opts)?;
    let code = match verdict.map(|v| v.verdict) {
        Some(Equality::Equal | Equality::NotEqual) => EXIT_DEFINITE,
        _ => EXIT_INCONCLUSIVE,
    };
    Ok(Output { text: s, code })
}

/// `order a..b;` from the file, else `k0..k0+2`; `--max-order` replaces the
/// upper end.
fn orders(p: &Problem, pop: &Pop, opts: &Options) -> Result<RangeInclusive<u32>, StageError> {
    let k0 = pop.min_order();
    let (lo, hi) = p.orders.unwrap_or((k0, k0 + 2));
    let hi = opts.max_order.unwrap_or(hi);
    if hi < lo {
        return Err(StageError { stage: "relaxation", message: format!("maximal order {hi} is below the first order {lo}") });
    }
    Ok(lo..=hi)
}

/// Each order is solved on its own thread; records come back in order.
fn solve_orders(pop: &Pop, ks: RangeInclusive<u32>, opts: &Options) -> Vec<OrderRecord> {
    let so = SolverOptions { tol: opts.tol, ..SolverOptions::default() };
    std::thread::scope(|scope| {
        let handles: Vec<_> = ks.map(|k| scope.spawn(move || solve_order(pop, k, &so))).collect();
        handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
    })
}

fn export(s: &mut String, p: &Problem, pop: &Pop, opts: &Options) -> Result<(), StageError> {
    let Some(dir) = &opts.sdpa else { return Ok(()) };
    fs::create_dir_all(dir).map_err(stage("sdpa export"))?;
    for k in orders(p, pop, opts)? {
        let Ok(inst) = build_primal(pop, k) else { continue };
        let path = dir.join(format!("{}_k{k}.dat-s", opts.name));
        fs::write(&path, write_sdpa(&inst, &p.vars)).map_err(stage("sdpa export"))?;
        let _ = writeln!(s, "wrote {}", path.display());
    }
    Ok(())
}

fn dump_cad(s: &mut String, p: &Problem, opts: &Options) -> Result<(), StageError> {
    if !opts.dump_cad {
        return Ok(());
    }
    let mut polys: Vec<QPoly> = p.equations.clone();
    for q in p.set().polys() {
        if !polys.contains(&q) {
            polys.push(q);
        }
    }
    let ladder = ProjectionLadder::new(&polys, p.nvars()).map_err(stage("cad"))?;
    let tree = CadTree::full(ladder).map_err(stage("cad"))?;
    let _ = writeln!(s, "cad:");
    s.push_str(&tree.dump(&p.vars));
    Ok(())
}

fn equality_label(v: Equality) -> &'static str {
    match v {
        Equality::Equal => "Equal (I(K)=I)",
        Equality::NotEqual => "NotEqual (I(K)!=I)",
        Equality::Inconclusive => "Inconclusive",
    }
}

fn equality_code(v: Equality) -> i32 {
    if v == Equality::Inconclusive {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_DEFINITE
    }
}

fn primality(p: Option<Primality>) -> &'static str {
    match p {
        Some(Primality::PrincipalIrreducible) => "prime (irreducible generator)",
        Some(Primality::ShapePosition) => "prime (shape position)",
        Some(Primality::Linear) => "prime (linear)",
        Some(Primality::Trusted) => "prime (trusted from hint)",
        None => "not radical",
    }
}

fn point(pt: &[AlgebraicNumber], names: &[String]) -> String {
    let coords: Vec<String> = names.iter().zip(pt).map(|(n, a)| format!("{n} = {}", a.approx(6))).collect();
    format!("({})", coords.join(", "))
}

fn write_components(s: &mut String, v: &EqualityVerdict, names: &[String]) {
    for (i, c) in v.components.iter().enumerate() {
        let _ = writeln!(s, "component {}: {} {}", i + 1, c.prime.render(names), primality(c.primality));
        match &c.outcome {
            ComponentOutcome::Accepted { point: pt, interior } => {
                let place = if *interior { "interior" } else { "boundary" };
                let _ = writeln!(s, "  witness point ({place}): {}", point(pt, names));
                let exact: Vec<String> = pt.iter().map(|a| a.describe()).collect();
                let _ = writeln!(s, "  exact: {}", exact.join("; "));
            }
            ComponentOutcome::NotRadical { witness } => {
                let _ = writeln!(s, "  not radical: {} is in the radical but not in the ideal", witness.render(names));
            }
            ComponentOutcome::ComplexSplit { witnesses } => {
                let ws: Vec<String> = witnesses.iter().map(|w| w.render(names)).collect();
                let _ = writeln!(s, "  splits over C: {}", ws.join(", "));
            }
            ComponentOutcome::NoPointInSet => {
                let _ = writeln!(s, "  no point of the variety over an open cell lies in the set");
            }
            ComponentOutcome::Unknown(why) => {
                let _ = writeln!(s, "  undecided: {why}");
            }
        }
        if !c.free.is_empty() {
            let free: Vec<&str> = c.free.iter().map(|&v| names[v].as_str()).collect();
            let _ = writeln!(s, "  free variables: {}", free.join(", "));
        }
        if !c.base_roots.is_empty() {
            let roots: Vec<String> = c.base_roots.iter().map(|r| r.approx(6)).collect();
            let _ = writeln!(s, "  base roots: {}", roots.join(", "));
        }
    }
}

fn certificate(c: &RealityCertificate, names: &[String]) -> String {
    match c {
        RealityCertificate::RankDim { point: pt, rank, dim } => {
            format!("Jacobian rank {rank} = n - dim (dim {dim}) at {}", point(pt, names))
        }
        RealityCertificate::TopDim { point: pt, dim } => format!("real cell of dimension {dim} at {}", point(pt, names)),
        RealityCertificate::ComplexSplit { witnesses } => {
            let ws: Vec<String> = witnesses.iter().map(|w| w.render(names)).collect();
            format!("splits over C: {}", ws.join(", "))
        }
        RealityCertificate::RankDeficit { rank, dim, nvars } => {
            let r = rank.map(|r| r.to_string()).unwrap_or_else(|| "none".into());
            format!("real variety has dimension below {dim}; largest Jacobian rank {r} < {}", nvars - dim)
        }
        RealityCertificate::NotRadical { witness } => {
            format!("{} is in the radical but not in the ideal", witness.render(names))
        }
        RealityCertificate::Unknown(why) => format!("undecided: {why}"),
    }
}

/// Reduced Gröbner basis, largest leading term first.
fn generators(ideal: &QIdeal) -> Vec<QPoly> {
    ideal.basis().iter().rev().cloned().collect()
}

/// `g` as a product of irreducible factors, or expanded when it is
/// irreducible or cannot be factored.
pub fn factored(g: &QPoly, names: &[String]) -> String {
    let Ok(fs) = factor(g) else { return g.render(names) };
    if fs.len() < 2 && fs.iter().all(|(_, e)| *e == 1) {
        return g.render(names);
    }
    let mut prod = QPoly::constant(g.nvars(), int(1));
    for (f, e) in &fs {
        prod = prod.mul(&f.pow(*e));
    }
    let Some(unit) = g.exact_div(&prod).and_then(|u| u.constant_value()) else { return g.render(names) };
    let mut parts: Vec<String> = Vec::new();
    for (f, e) in &fs {
        let body = f.render(names);
        let body = if f.terms().len() > 1 { format!("({body})") } else { body };
        parts.push(if *e > 1 { format!("{body}^{e}") } else { body });
    }
    let joined = parts.join("*");
    match unit {
        u if u == int(1) => joined,
        u if u == int(-1) => format!("-{joined}"),
        u => format!("{u}*{joined}"),
    }
}
