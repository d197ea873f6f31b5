//! Acceptance criteria, one line each: `cargo test --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nonassoc::algebra::{parse_alg_as, Algebra};
use nonassoc::budget::Budget;
use nonassoc::checks::{self, SuiteReport};
use nonassoc::classes::{member, projectors, ClassExpr, ClassPredicate};
use nonassoc::error::Result;
use nonassoc::exactfield::{Field, PrimeField, Rationals};
use nonassoc::linalg::{span, Subspace};

const XYZ: &str = include_str!("../examples/xyz.alg");

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn xyz_over<F: Field>(field: &F) -> Algebra<F> {
    let header = format!("field {}", field.spec());
    parse_alg_as(&XYZ.replace("field GF 2", &header), field).unwrap()
}

/// Subspace spanned by integer vectors.
fn sp<F: Field>(field: &F, vs: &[[i64; 3]]) -> Subspace<F> {
    let vs: Vec<Vec<F::Elem>> = vs.iter().map(|v| v.iter().map(|&x| field.from_i64(x)).collect()).collect();
    span(field, &vs, 3).unwrap()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn from_reports(reports: Vec<SuiteReport>) -> Outcome {
    let pass = reports.iter().all(SuiteReport::passed);
    let mut detail: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    for r in &reports {
        for f in r.failures.iter().take(3) {
            detail.push(format!("  {}: {}", r.name, f.description));
        }
    }
    Outcome { pass, detail: detail.join("; ") }
}

/// Literal values for the three-dimensional example over one field.
fn xyz_values<F: Field>(field: &F, enumerate: bool, problems: &mut Vec<String>) {
    let b = Budget::default();
    let a = xyz_over(field);
    let (yz, z, y) = (sp(field, &[[0, 1, 0], [0, 0, 1]]), sp(field, &[[0, 0, 1]]), sp(field, &[[0, 1, 0]]));
    let mut check = |ok: bool, what: &str| {
        if !ok {
            problems.push(format!("{}: {what}", field.spec()));
        }
    };
    let d = a.derived_series();
    check(d.dims() == [3, 2, 1, 0], "derived dims");
    check(d.terms[1] == yz && d.terms[2] == z && d.terms[3].is_zero(), "derived terms");
    check(a.solvability_index() == Some(4), "solvability index");
    check(a.power_series().stable_term() == &yz && a.nilpotency_index().is_none(), "power series");
    check(!a.is_ideal(&z).unwrap(), "third derived term is an ideal");
    check(a.is_ideal(&yz).unwrap() && !a.multiply_subspaces(&yz, &yz).unwrap().is_zero(), "span{y,z} ideal, not abelian");
    if !enumerate {
        return;
    }
    let ideals = a.ideals(&b).unwrap();
    let minimal = ideals.iter().filter(|i| !i.is_zero() && i.dim() < yz.dim()).count() == 0 && ideals.contains(&yz);
    check(minimal, "span{y,z} minimal ideal");
    if field.order() == Some(2) {
        let proper: Vec<_> = a.subalgebras(&b).unwrap().into_iter().filter(|s| !s.is_zero() && !s.is_full()).collect();
        check(proper.len() == 3 && [&y, &z, &yz].iter().all(|s| proper.contains(s)), "proper subalgebras");
    }
    check(a.frattini_ideal(&b).unwrap() == yz, "Frattini ideal");
    check(projectors(&ClassPredicate::Nilpotent, &a, &b).unwrap().projectors.is_empty(), "nilpotent projectors");
}

fn c1() -> Result<Outcome> {
    let mut problems = Vec::new();
    xyz_values(&gf(2), true, &mut problems);
    xyz_values(&gf(3), true, &mut problems);
    xyz_values(&Rationals, false, &mut problems);
    Ok(Outcome { pass: problems.is_empty(), detail: if problems.is_empty() { "GF(2), GF(3), Q".into() } else { problems.join("; ") } })
}

fn c10() -> Result<Outcome> {
    let b = Budget::default();
    let mut problems = Vec::new();
    for p in [2, 3] {
        let a = xyz_over(&gf(p));
        let ephi = member(&ClassExpr::parse("EPhi(nilpotent)")?, &a, None, &b)?;
        let nil = member(&ClassExpr::parse("nilpotent")?, &a, None, &b)?;
        if !ephi.holds || nil.holds {
            problems.push(format!("GF({p}): EPhi(nilpotent) {}, nilpotent {}", ephi.holds, nil.holds));
        }
    }
    Ok(Outcome { pass: problems.is_empty(), detail: problems.join("; ") })
}

fn both(f: impl Fn(&PrimeField) -> Result<SuiteReport>) -> Result<Outcome> {
    Ok(from_reports(vec![f(&gf(2))?, f(&gf(3))?]))
}

fn main() -> ExitCode {
    let b = Budget::default();
    type Run<'a> = Box<dyn Fn() -> Result<Outcome> + 'a>;
    let criteria: Vec<(&str, u64, Run)> = vec![
        ("1 xyz example reproduction", 1, Box::new(c1)),
        ("2 closure laws, GF(2)", 60, Box::new(|| Ok(from_reports(vec![checks::closure_laws(&gf(2), 2, &b)?])))),
        ("2 closure laws, GF(3)", 60, Box::new(|| Ok(from_reports(vec![checks::closure_laws(&gf(3), 2, &b)?])))),
        ("3 pullback kernels", 60, Box::new(|| both(|f| checks::pullback_kernel(f, 2, &b)))),
        ("4 subdirect embeddings and R0", 120, Box::new(|| both(|f| checks::subdirect(f, 2, &b)))),
        ("5 residuals", 60, Box::new(|| both(|f| checks::residuals(f, 2, &b)))),
        ("6 projector lemmas", 120, Box::new(|| both(|f| checks::projector_lemmas(f, 2, &b)))),
        ("7 split formations", 60, Box::new(|| both(|f| checks::split_formation(f, 2, &b)))),
        ("8 product-class closure", 60, Box::new(|| both(|f| checks::product_closure(f, 2, &b)))),
        ("9 subideal criterion", 120, Box::new(|| Ok(from_reports(vec![checks::subideal_criterion(&gf(2), 2, 1000, &b)?])))),
        ("10 nilpotent is not EPhi-closed", 1, Box::new(c10)),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let (pass, detail) = match result {
            Ok(o) => (o.pass && in_time, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        failed += usize::from(!pass);
        let verdict = if pass { "PASS" } else { "FAIL" };
        let late = if in_time { "" } else { " OVER TIME LIMIT" };
        println!("criterion {name}: {verdict} [{:.2}s / {limit}s{late}] {detail}", took.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
