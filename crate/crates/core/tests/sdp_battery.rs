//! Relaxation properties on a fixed battery of small problems: weak duality,
//! monotonicity in the order, Gram consistency of the returned certificates
//! and the vanishing gap wherever the equality check succeeds.

use proptest::prelude::*;
use realgap_core::ideal::Ideal;
use realgap_core::mpoly::parse::poly;
use realgap_core::real::{check_equality, Constraint, Equality, Relation, SemialgebraicSet};
use realgap_core::sdp::sdpa::same_as_floats;
use realgap_core::sdp::{build_primal, dual_residual, read_sdpa, solve, write_sdpa, Pop, SolveStatus, SolverOptions};
use realgap_core::QPoly;

const TOL: f64 = 1e-5;

struct Case {
    name: &'static str,
    vars: &'static [&'static str],
    objective: &'static str,
    inequalities: &'static [&'static str],
    equalities: &'static [&'static str],
    /// Known optimum, reached by the highest order tested.
    optimum: Option<f64>,
}

fn battery() -> Vec<Case> {
    vec![
        Case { name: "closest point on a line", vars: &["x", "y"], objective: "x^2+y^2", inequalities: &[], equalities: &["x+y-1"], optimum: Some(0.5) },
        Case { name: "shifted parabola on an interval", vars: &["x"], objective: "(x-1)^2+3", inequalities: &["2-x", "x"], equalities: &[], optimum: Some(3.0) },
        Case { name: "diagonal of the disk", vars: &["x", "y"], objective: "x^2-y", inequalities: &["1-x^2-y^2"], equalities: &["x-y"], optimum: Some(-0.25) },
        Case { name: "double well", vars: &["x", "y"], objective: "x^4-3*x^2+y^2", inequalities: &[], equalities: &[], optimum: Some(-2.25) },
        Case { name: "linear objective on the disk", vars: &["x", "y"], objective: "-x-y", inequalities: &["1-x^2-y^2"], equalities: &[], optimum: Some(-std::f64::consts::SQRT_2) },
        Case { name: "bilinear on the box", vars: &["x", "y"], objective: "x*y", inequalities: &["1-x^2", "1-y^2"], equalities: &[], optimum: None },
        Case { name: "quadratic form on the circle", vars: &["x", "y"], objective: "2*x^2-x*y+y^2", inequalities: &[], equalities: &["x^2+y^2-1"], optimum: Some(1.5 - std::f64::consts::FRAC_1_SQRT_2) },
        Case { name: "augmented cone and plane", vars: &["x", "y", "z"], objective: "z+y^2", inequalities: &["1-x^2-(z-1)^2"], equalities: &["x", "y*(z-2)", "z*(z-2)"], optimum: Some(0.0) },
        Case { name: "tangent disk", vars: &["x", "y"], objective: "x^2+x", inequalities: &["1-x^2-(y-1)^2"], equalities: &["y"], optimum: None },
        Case { name: "simplex", vars: &["x", "y", "z"], objective: "x^2+y^2+z^2-x", inequalities: &["x", "y", "z", "1-x-y-z"], equalities: &[], optimum: Some(-0.25) },
    ]
}

fn pop(c: &Case) -> Pop {
    let q = |s: &&str| poly(s, c.vars).unwrap();
    Pop {
        nvars: c.vars.len(),
        objective: q(&c.objective),
        inequalities: c.inequalities.iter().map(q).collect(),
        equalities: c.equalities.iter().map(q).collect(),
    }
}

fn equality_holds(c: &Case, p: &Pop) -> bool {
    let set = SemialgebraicSet::basic(
        p.nvars,
        p.inequalities.iter().map(|g| Constraint { poly: g.clone(), rel: Relation::Ge }).collect(),
    );
    let ideal = Ideal::new(p.nvars, p.equalities.clone());
    match check_equality(&set, &ideal, None) {
        Ok(v) => v.verdict == Equality::Equal,
        Err(e) => {
            eprintln!("{}: equality check not decided: {e}", c.name);
            false
        }
    }
}

#[test]
fn battery_properties() {
    let opts = SolverOptions::default();
    for c in battery() {
        let p = pop(&c);
        let k0 = p.min_order();
        let equal = equality_holds(&c, &p);
        let mut last = f64::NEG_INFINITY;
        for k in k0..=k0 + 2 {
            let s = solve(&build_primal(&p, k).unwrap(), &opts).unwrap();
            let (f, q) = (s.primal, s.dual);
            // equal infinities count as no gap
            let gap = if f == q { 0.0 } else { f - q };
            assert!(gap >= -TOL, "{} k={k}: weak duality {q} > {f}", c.name);
            assert!(f >= last - TOL, "{} k={k}: {f} below the previous order's {last}", c.name);
            last = f;
            if s.status == SolveStatus::Optimal {
                let r = dual_residual(&p, k, &s.gram, q).unwrap();
                assert!(r < 1e-6, "{} k={k}: certificate residual {r}", c.name);
            }
            if equal {
                assert!(gap.abs() <= TOL, "{} k={k}: gap {gap} with I(K) = I", c.name);
            }
            if let (Some(opt), true) = (c.optimum, k == k0 + 2) {
                assert!((f - opt).abs() < TOL && (q - opt).abs() < TOL, "{} k={k}: {f} / {q} vs {opt}", c.name);
            }
        }
    }
}

#[test]
fn hand_certificate_problem() {
    let c = &battery()[0];
    let s = solve(&build_primal(&pop(c), 2).unwrap(), &SolverOptions::default()).unwrap();
    assert!((s.primal - 0.5).abs() <= 1e-6 && (s.dual - 0.5).abs() <= 1e-6, "{s:?}");
}

fn small_poly(nvars: usize) -> impl Strategy<Value = QPoly> {
    let names: Vec<String> = ["x", "y", "z"][..nvars].iter().map(|s| s.to_string()).collect();
    proptest::collection::vec((-3i64..=3, 0u32..=2, 0u32..=2), 1..4).prop_map(move |terms| {
        let text: Vec<String> = terms
            .iter()
            .map(|(c, a, b)| format!("({c})*{}^{a}*{}^{b}", names[0], names[nvars - 1]))
            .collect();
        realgap_core::mpoly::parse_poly(&text.join("+"), &names).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sdpa_round_trip(f in small_poly(2), g in small_poly(2), h in small_poly(2), k in 2u32..=4) {
        let p = Pop { nvars: 2, objective: f, inequalities: vec![g], equalities: vec![h] };
        prop_assume!(p.min_order() <= k);
        let inst = build_primal(&p, k).unwrap();
        let names = vec!["x".to_string(), "y".to_string()];
        let text = write_sdpa(&inst, &names);
        let back = read_sdpa(&text).unwrap();
        prop_assert!(same_as_floats(&inst, &back));
    }
}
