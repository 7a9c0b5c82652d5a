//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use realgap_core::cad::{project, variety_cells, CadTree, CellKind, Policy, ProjectionLadder};
use realgap_core::ideal::{is_groebner, Ideal, QIdeal};
use realgap_core::mpoly::parse::poly;
use realgap_core::numeric::rational::{int, rat};
use realgap_core::real::{
    augment_to_fixpoint, check_equality, is_real, Constraint, Equality, Reality, RealityCertificate,
    Relation, SemialgebraicSet,
};
use realgap_core::sdp::{build_primal, solve, Pop, SolverOptions};
use realgap_core::QPoly;

/// Tolerances and time limits.
const ROOT_TOL: f64 = 1e-4;
const GAP_TOL: f64 = 1e-5;
const HAND_TOL: f64 = 1e-6;
const REALITY_LIMIT: Duration = Duration::from_secs(10);
const EQUALITY_LIMIT: Duration = Duration::from_secs(60);
const SDP_LIMIT: Duration = Duration::from_secs(30);

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn q(s: &str, vars: &[&str]) -> QPoly {
    poly(s, vars).unwrap()
}

fn id(vars: &[&str], gens: &[&str]) -> QIdeal {
    Ideal::new(vars.len(), gens.iter().map(|g| q(g, vars)).collect())
}

fn ge(vars: &[&str], g: &str) -> SemialgebraicSet {
    SemialgebraicSet::basic(vars.len(), vec![Constraint { poly: q(g, vars), rel: Relation::Ge }])
}

const XYZ: [&str; 3] = ["x", "y", "z"];
const CYLINDER: &str = "1-x^2-(z-1)^2";

fn ac1() -> Verdict {
    let xy = ["x", "y"];
    let xyzw = ["x", "y", "z", "w"];
    let j = ["y^2-x*z", "x^3-y*z", "x^2*y-z^2"];
    type Kind = fn(&RealityCertificate) -> bool;
    let split: Kind = |c| matches!(c, RealityCertificate::ComplexSplit { .. });
    let low_rank: Kind = |c| matches!(c, RealityCertificate::RankDeficit { .. });
    let witness: Kind = |c| matches!(c, RealityCertificate::RankDim { .. });
    let cases: Vec<(&str, QIdeal, Option<Vec<QIdeal>>, Reality, Kind)> = vec![
        ("<x^2+y^2>", id(&xy, &["x^2+y^2"]), None, Reality::NotReal, split),
        ("<x^2+y^2+z^2>", id(&XYZ, &["x^2+y^2+z^2"]), None, Reality::NotReal, low_rank),
        (
            "<x^2+y^2, z^2+w^2, xz+yw, xw-yz>",
            id(&xyzw, &["x^2+y^2", "z^2+w^2", "x*z+y*w", "x*w-y*z"]),
            None,
            Reality::NotReal,
            split,
        ),
        ("<xy>", id(&xy, &["x*y"]), Some(vec![id(&xy, &["x"]), id(&xy, &["y"])]), Reality::Real, witness),
        (
            "<y^2-xz, x^3-yz>",
            id(&XYZ, &["y^2-x*z", "x^3-y*z"]),
            Some(vec![id(&XYZ, &j), id(&XYZ, &["x", "y"])]),
            Reality::Real,
            witness,
        ),
    ];
    let mut worst = Duration::ZERO;
    for (name, ideal, hint, want, kind) in cases {
        let t = Instant::now();
        let v = is_real(&ideal, hint.as_deref()).map_err(|e| format!("{name}: {e}"))?;
        let dt = t.elapsed();
        worst = worst.max(dt);
        ensure(v.verdict == want, format!("{name}: {:?}, expected {want:?}", v.verdict))?;
        ensure(v.components.iter().any(|c| kind(&c.certificate)), format!("{name}: unexpected certificate kinds"))?;
        ensure(dt < REALITY_LIMIT, format!("{name}: took {dt:?}"))?;
    }
    Ok(format!("5 ideals, certificate kinds match, slowest {worst:.2?}"))
}

fn ac2() -> Verdict {
    let t = Instant::now();
    let ball = ge(&XYZ, "1-(x-1)^2-(y-1)^2-(z-1)^2");
    let curve = id(&XYZ, &["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]);
    let v = check_equality(&ball, &curve, Some(std::slice::from_ref(&curve))).map_err(|e| e.to_string())?;
    let dt1 = t.elapsed();
    ensure(v.verdict == Equality::Equal, format!("twisted cubic: {:?}", v.verdict))?;
    let roots: Vec<f64> = v.components[0].base_roots.iter().map(|r| r.to_f64()).collect();
    for target in [0.522613, 1.39169] {
        ensure(roots.iter().any(|r| (r - target).abs() < ROOT_TOL), format!("root {target} missing"))?;
    }
    let t = Instant::now();
    let xy = ["x", "y"];
    let v = check_equality(&ge(&xy, "1-x^2-(y-1)^2"), &id(&xy, &["y"]), None).map_err(|e| e.to_string())?;
    let dt2 = t.elapsed();
    ensure(v.verdict == Equality::NotEqual, format!("tangent disk: {:?}", v.verdict))?;
    ensure(dt1 < EQUALITY_LIMIT && dt2 < EQUALITY_LIMIT, format!("took {dt1:?} / {dt2:?}"))?;
    Ok(format!("Equal with roots 0.522613, 1.39169 within {ROOT_TOL:e} ({dt1:.2?}); NotEqual on the tangent disk ({dt2:.2?})"))
}

fn ac3() -> Verdict {
    let t = Instant::now();
    let start = id(&XYZ, &["(x^2+y^2+z^2)*(z-2)"]);
    let f = augment_to_fixpoint(&ge(&XYZ, CYLINDER), &start, None).map_err(|e| e.to_string())?;
    let dt = t.elapsed();
    let want = id(&XYZ, &["x", "y*(z-2)", "z*(z-2)"]);
    ensure(f.ideal.contains_ideal(&want) && want.contains_ideal(&f.ideal), "final ideal differs")?;
    ensure(f.verdict.verdict == Equality::Equal, "final verdict is not Equal")?;
    let mut prev = start;
    for (r, round) in f.rounds.iter().enumerate() {
        ensure(
            round.ideal.contains_ideal(&prev) && !prev.contains_ideal(&round.ideal),
            format!("round {} is not strictly larger", r + 1),
        )?;
        prev = round.ideal.clone();
    }
    ensure(dt < EQUALITY_LIMIT, format!("took {dt:?}"))?;
    Ok(format!("<x, y(z-2), z(z-2)> after {} strictly increasing rounds ({dt:.2?})", f.rounds.len()))
}

fn product(ps: &[QPoly]) -> QPoly {
    ps.iter().fold(QPoly::one(3), |a, p| a.mul(p)).primitive()
}

fn ac4() -> Verdict {
    let v = |s: &str| q(s, &XYZ);
    let cyl = ge(&XYZ, CYLINDER);
    // sphere component: eliminating z, then y
    let q2 = project(&[v("x^2+y^2+z^2"), v(CYLINDER)], 2).map_err(|e| e.to_string())?;
    let want2 = product(&[v("x+1"), v("x-1"), v("x^2+y^2"), v("4*x^2+4*y^2+y^4")]);
    ensure(product(&q2) == want2, "sphere projection factors")?;
    let ladder = ProjectionLadder::new(&[v("x^2+y^2+z^2"), v(CYLINDER)], 3).map_err(|e| e.to_string())?;
    ensure(product(&ladder.levels[0]) == product(&[v("x"), v("x+1"), v("x-1")]), "sphere base factors")?;
    let tree = CadTree::full(ladder.clone()).map_err(|e| e.to_string())?;
    let base = &tree.cells[0];
    let kinds: Vec<CellKind> = base.iter().map(|c| c.kinds[0]).collect();
    let (o, s) = (CellKind::Sector, CellKind::Section);
    ensure(kinds == [o, s, o, s, o, s, o], "base cell kinds")?;
    let sections: Vec<_> = base.iter().filter(|c| c.kinds[0] == s).map(|c| c.sample[0].as_rational().cloned()).collect();
    ensure(sections == [Some(int(-1)), Some(int(0)), Some(int(1))], "base section points")?;
    let first = CadTree::build(ladder, Policy::Full, 1).map_err(|e| e.to_string())?;
    let samples: Vec<_> = first.cells[0].iter().map(|c| c.sample[0].as_rational().cloned()).collect();
    ensure(
        samples == [Some(int(-2)), Some(int(-1)), Some(rat(-1, 2)), Some(int(0)), Some(rat(1, 2)), Some(int(1)), Some(int(2))],
        "base samples",
    )?;
    let cells = variety_cells(&tree, &[v("x^2+y^2+z^2")], &cyl).map_err(|e| e.to_string())?;
    ensure(cells.len() == 1 && cells[0].sample.iter().all(|a| a.as_rational() == Some(&int(0))), "sphere survivors")?;
    // plane component
    let q2 = project(&[v("z-2"), v(CYLINDER)], 2).map_err(|e| e.to_string())?;
    ensure(product(&q2) == product(&[v("x"), v("x+1"), v("x-1")]), "plane projection factors")?;
    let ladder = ProjectionLadder::new(&[v("z-2"), v(CYLINDER)], 3).map_err(|e| e.to_string())?;
    ensure(product(&ladder.levels[0]) == product(&[v("x"), v("x+1"), v("x-1")]), "plane base factors")?;
    let tree = CadTree::full(ladder).map_err(|e| e.to_string())?;
    let cells = variety_cells(&tree, &[v("z-2")], &cyl).map_err(|e| e.to_string())?;
    ensure(!cells.is_empty(), "plane has no survivors")?;
    ensure(
        cells.iter().all(|c| c.sample[0].as_rational() == Some(&int(0)) && c.sample[2].as_rational() == Some(&int(2))),
        "plane survivors leave {x = 0, z = 2}",
    )?;
    Ok(format!("7 base cells, factor products match, survivors: origin and {} cell(s) on {{x=0, z=2}}", cells.len()))
}

/// Products of pool elements, so lcm and cofactor are known from exponents.
fn ac5() -> Verdict {
    const POOL: [&str; 10] =
        ["x", "y", "z", "x+y-1", "x-2*z+3", "y+z+2", "x^2+y^2+1", "x*y-z", "x^2-2", "y^2+z^2+x"];
    let v = |s: &str| q(s, &XYZ);
    let prod = |es: &[(usize, u32)]| es.iter().fold(QPoly::one(3), |a, &(i, e)| a.mul(&v(POOL[i]).pow(e)));
    let gb = |i: &QIdeal| ensure(is_groebner(i.basis()), "S-pair does not reduce to zero");
    let named = [
        (id(&XYZ, &["x"]).intersect(&id(&XYZ, &["y"])), id(&XYZ, &["x*y"])),
        (id(&XYZ, &["x", "y", "z"]).intersect(&id(&XYZ, &["x", "z-2"])), id(&XYZ, &["x", "y*(z-2)", "z*(z-2)"])),
        (id(&XYZ, &["x*y"]).quotient(&v("x")), id(&XYZ, &["y"])),
        (id(&XYZ, &["x"]).quotient(&v("1")), id(&XYZ, &["x"])),
        (id(&XYZ, &["x^2"]).quotient(&v("x")), id(&XYZ, &["x"])),
    ];
    for (got, want) in &named {
        ensure(got == want, "named identity")?;
        gb(got)?;
    }
    ensure(id(&XYZ, &["1"]).dimension() == -1, "dim <1>")?;
    ensure(id(&XYZ, &["x", "y"]).dimension() == 1, "dim <x, y>")?;
    ensure(id(&XYZ, &["y^2-x*z", "x^3-y*z", "x^2*y-z^2"]).dimension() == 1, "dim of the twisted cubic")?;
    let strategy = proptest::sample::subsequence((0..POOL.len()).collect::<Vec<_>>(), 1..=3).prop_flat_map(|idx| {
        let n = idx.len();
        (proptest::strategy::Just(idx), proptest::collection::vec((0u32..=2, 0u32..=2), n))
    });
    let mut runner = TestRunner::new_with_rng(Config::default(), TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    for case in 0..100 {
        let (idx, es) = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        let pick = |f: &dyn Fn(u32, u32) -> u32| idx.iter().zip(&es).map(|(&i, &(a, b))| (i, f(a, b))).collect::<Vec<_>>();
        let (f, g) = (prod(&pick(&|a, _| a)), prod(&pick(&|_, b| b)));
        let lcm = prod(&pick(&|a, b| a.max(b)));
        let cofactor = prod(&pick(&|a, b| a - a.min(b)));
        let (fi, gi) = (Ideal::new(3, vec![f.clone()]), Ideal::new(3, vec![g.clone()]));
        let inter = fi.intersect(&gi);
        let quot = fi.quotient(&g);
        ensure(inter == Ideal::new(3, vec![lcm]), format!("case {case}: intersection is not the lcm"))?;
        ensure(quot == Ideal::new(3, vec![cofactor]), format!("case {case}: quotient is not f/gcd"))?;
        ensure(fi.dimension() == if f.is_constant() { -1 } else { 2 }, format!("case {case}: dimension"))?;
        for i in [&fi, &gi, &inter, &quot] {
            gb(i)?;
        }
    }
    Ok("named identities and 100 seeded principal cases agree with lcm/gcd; every basis passes the S-pair check".into())
}

struct SdpCase {
    vars: &'static [&'static str],
    f: &'static str,
    g: &'static [&'static str],
    h: &'static [&'static str],
}

const BATTERY: [SdpCase; 10] = [
    SdpCase { vars: &["x", "y"], f: "x^2+y^2", g: &[], h: &["x+y-1"] },
    SdpCase { vars: &["x"], f: "(x-1)^2+3", g: &["2-x", "x"], h: &[] },
    SdpCase { vars: &["x", "y"], f: "x^2-y", g: &["1-x^2-y^2"], h: &["x-y"] },
    SdpCase { vars: &["x", "y"], f: "x^4-3*x^2+y^2", g: &[], h: &[] },
    SdpCase { vars: &["x", "y"], f: "-x-y", g: &["1-x^2-y^2"], h: &[] },
    SdpCase { vars: &["x", "y"], f: "x*y", g: &["1-x^2", "1-y^2"], h: &[] },
    SdpCase { vars: &["x", "y"], f: "2*x^2-x*y+y^2", g: &[], h: &["x^2+y^2-1"] },
    SdpCase { vars: &["x", "y", "z"], f: "z+y^2", g: &[CYLINDER], h: &["x", "y*(z-2)", "z*(z-2)"] },
    SdpCase { vars: &["x", "y"], f: "x^2+x", g: &["1-x^2-(y-1)^2"], h: &["y"] },
    SdpCase { vars: &["x", "y", "z"], f: "x^2+y^2+z^2-x", g: &["x", "y", "z", "1-x-y-z"], h: &[] },
];

fn ac6() -> Verdict {
    let opts = SolverOptions::default();
    let mut equal_cases = 0;
    for (n, c) in BATTERY.iter().enumerate() {
        let t = Instant::now();
        let p = Pop {
            nvars: c.vars.len(),
            objective: q(c.f, c.vars),
            inequalities: c.g.iter().map(|g| q(g, c.vars)).collect(),
            equalities: c.h.iter().map(|h| q(h, c.vars)).collect(),
        };
        let set = SemialgebraicSet::basic(
            p.nvars,
            p.inequalities.iter().map(|g| Constraint { poly: g.clone(), rel: Relation::Ge }).collect(),
        );
        let equal = check_equality(&set, &Ideal::new(p.nvars, p.equalities.clone()), None)
            .is_ok_and(|v| v.verdict == Equality::Equal);
        equal_cases += usize::from(equal);
        let k0 = p.min_order();
        let mut last = f64::NEG_INFINITY;
        for k in k0..=k0 + 2 {
            let s = solve(&build_primal(&p, k).map_err(|e| e.to_string())?, &opts).map_err(|e| e.to_string())?;
            let gap = if s.primal == s.dual { 0.0 } else { s.primal - s.dual };
            ensure(gap >= -GAP_TOL, format!("problem {n} k={k}: weak duality fails ({gap:e})"))?;
            ensure(s.primal >= last - GAP_TOL, format!("problem {n} k={k}: not monotone"))?;
            ensure(!equal || gap.abs() <= GAP_TOL, format!("problem {n} k={k}: gap {gap:e} although I(K) = I"))?;
            last = s.primal;
        }
        ensure(t.elapsed() < SDP_LIMIT, format!("problem {n} took {:?}", t.elapsed()))?;
    }
    let hand = &BATTERY[0];
    let p = Pop {
        nvars: 2,
        objective: q(hand.f, hand.vars),
        inequalities: vec![],
        equalities: vec![q(hand.h[0], hand.vars)],
    };
    let s = solve(&build_primal(&p, 2).map_err(|e| e.to_string())?, &opts).map_err(|e| e.to_string())?;
    ensure((s.primal - 0.5).abs() <= HAND_TOL && (s.dual - 0.5).abs() <= HAND_TOL, format!("hand certificate: {s:?}"))?;
    Ok(format!(
        "10 problems: weak duality and monotonicity within {GAP_TOL:e}; {equal_cases} with I(K) = I have |gap| <= {GAP_TOL:e} for k0..k0+2; x^2+y^2 on x+y=1 gives {:.9} / {:.9}",
        s.primal, s.dual
    ))
}

fn problems_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../problems")
}

fn pipeline() -> Result<Vec<u8>, String> {
    let runs: [(&str, &str); 8] = [
        ("check-real", "circle.pop"),
        ("check-ik", "twisted_cubic_ball.pop"),
        ("check-ik", "cusp_union.pop"),
        ("augment", "cone_and_plane.pop"),
        ("report", "linear.pop"),
        ("report", "cone_and_plane.pop"),
        ("report", "tangent_disk.pop"),
        ("solve", "closest_point.pop"),
    ];
    let mut all = Vec::new();
    for (cmd, file) in runs {
        let out = Command::new(env!("CARGO_BIN_EXE_realgap"))
            .arg(cmd)
            .arg(problems_dir().join(file))
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), format!("{cmd} {file} exited with {:?}", out.status.code()))?;
        all.extend(out.stdout);
    }
    Ok(all)
}

fn ac7() -> Verdict {
    let a = pipeline()?;
    let b = pipeline()?;
    ensure(a == b, "reports differ between runs")?;
    Ok(format!("two runs of 8 commands produced identical reports ({} bytes)", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 7] =
        [("AC1", ac1), ("AC2", ac2), ("AC3", ac3), ("AC4", ac4), ("AC5", ac5), ("AC6", ac6), ("AC7", ac7)];
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("{name} PASS  {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("{name} FAIL  {why}");
            }
            Err(_) => {
                failed += 1;
                println!("{name} FAIL  panicked");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
