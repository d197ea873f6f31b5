//! Command-line front end. Exit codes: 0 success or property holds,
//! 1 property fails or not a member, 2 usage error, 3 unsupported request.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{parse_alg, Algebra, AnyAlgebra};
use crate::budget::Budget;
use crate::checks::{self, SUITES};
use crate::classes::{self, ClassExpr, Evaluator, ProjectorTable, Universe};
use crate::corpus::{enumerate_exhaustive, named_examples, sample, Mode};
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec, PrimeField, Rationals};
use crate::opcalc::{self, OpExpr, Rel};

/// Runs `$body` with `$a` bound to the algebra in `$path`, whatever its field.
macro_rules! on_algebra {
    ($path:expr, |$a:ident| $body:expr) => {{
        let text = std::fs::read_to_string($path)?;
        match parse_alg(&text)? {
            AnyAlgebra::Prime($a) => {
                let $a = &$a;
                $body
            }
            AnyAlgebra::Rational($a) => {
                let $a = &$a;
                $body
            }
        }
    }};
}

#[derive(Parser, Debug)]
#[command(name = "nonassoc", version, about = "Exact computations with finite-dimensional non-associative algebras")]
pub struct Cli {
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct BudgetArgs {
    /// Enumerate subspaces of GF(q)^n only while n·log2(q) is at most this.
    #[arg(long, global = true)]
    pub max_enum_bits: Option<u32>,
    /// Enumerate subspaces only up to this ambient dimension (converted to
    /// bits for the field at hand).
    #[arg(long, global = true)]
    pub max_enum_dim: Option<usize>,
    /// Largest dimension for the brute-force isomorphism search.
    #[arg(long, global = true)]
    pub iso_cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Invariants of an algebra: series, indices, ideals, Frattini ideal.
    Analyze { file: PathBuf },
    /// Decides membership in a class expression and prints a witness.
    Member {
        #[arg(long)]
        class: String,
        file: PathBuf,
        /// Dimension bound of the exhaustive universe used for S, Sn, Q and members(..).
        #[arg(long)]
        universe: Option<usize>,
    },
    /// The class residual: least ideal with quotient in the class.
    Residual {
        #[arg(long)]
        class: String,
        file: PathBuf,
        #[arg(long)]
        universe: Option<usize>,
    },
    /// Projectors of the algebra for a class.
    Projectors {
        #[arg(long)]
        class: String,
        file: PathBuf,
        #[arg(long)]
        universe: Option<usize>,
    },
    /// Frattini subalgebra and Frattini ideal.
    Frattini { file: PathBuf },
    /// Power and derived series.
    Series { file: PathBuf },
    /// Runs property suites over exhaustive and sampled corpora.
    Check {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        suite: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Directory for `.alg` dumps of counterexamples.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// The closure-operation calculus.
    Ops {
        /// Prove `EXPR <= EXPR` (or `=`) from the fact base.
        #[arg(long, group = "query")]
        derive: Option<String>,
        /// Prove that EXPR is a closure operation.
        #[arg(long, group = "query")]
        closure: Option<String>,
        /// Search bounded universes for a counterexample to `EXPR <= EXPR`.
        #[arg(long, group = "query")]
        falsify: Option<String>,
        /// Print the seeded facts.
        #[arg(long, group = "query")]
        facts: bool,
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
    /// Writes a corpus file.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long, default_value = "exhaustive")]
        mode: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of samples in sampled mode.
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

/// Parses arguments, runs, and maps errors to exit codes.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = String::new();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            print!("{out}");
            eprintln!("error: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    print!("{out}");
    ExitCode::from(code)
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Unknown { .. } | Error::Io(_) | Error::InvalidModulus(_) => 2,
        Error::InfiniteField
        | Error::UniverseRequired(_)
        | Error::BudgetExceeded(_)
        | Error::CapExceeded { .. }
        | Error::NotEvaluable(_) => 3,
        _ => 1,
    }
}

/// Runs a parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut String) -> Result<u8> {
    let base = Budget::from_env()?;
    let budget = |spec: FieldSpec| budget_for(base, &cli.budget, spec);
    match &cli.command {
        Command::Analyze { file } => on_algebra!(file, |a| analyze(a, &budget(a.field().spec()), out)),
        Command::Series { file } => on_algebra!(file, |a| {
            series(a, out);
            Ok(0)
        }),
        Command::Frattini { file } => on_algebra!(file, |a| frattini(a, &budget(a.field().spec()), out)),
        Command::Member { class, file, universe } => {
            let expr = ClassExpr::parse(class)?;
            on_algebra!(file, |a| member(&expr, a, *universe, &budget(a.field().spec()), out))
        }
        Command::Residual { class, file, universe } => {
            let expr = ClassExpr::parse(class)?;
            on_algebra!(file, |a| residual(&expr, a, *universe, &budget(a.field().spec()), out))
        }
        Command::Projectors { class, file, universe } => {
            let expr = ClassExpr::parse(class)?;
            on_algebra!(file, |a| projectors(&expr, a, *universe, &budget(a.field().spec()), out))
        }
        Command::Check { suite, all, field, dim, dump } => {
            let field = prime_field(field)?;
            let names: Vec<&str> = if *all { SUITES.to_vec() } else { vec![suite.as_deref().unwrap_or_default()] };
            check(&names, &field, *dim, &budget(field.spec()), dump.as_deref(), out)
        }
        Command::Ops { derive, closure, falsify, facts, field, dim } => {
            let fb = opcalc::seed_facts();
            if let Some(claim) = derive {
                let (l, rel, r) = opcalc::parse_claim(claim)?;
                let mut ok = true;
                let mut pairs = vec![(&l, &r)];
                if rel == Rel::Eq {
                    pairs.push((&r, &l));
                }
                for (x, y) in pairs {
                    let d = opcalc::derive_leq(x, y, &fb);
                    ok &= d.provable();
                    write!(out, "{x} <= {y}: {d}").unwrap();
                }
                Ok(if ok { 0 } else { 1 })
            } else if let Some(e) = closure {
                let d = opcalc::derive_closure(&OpExpr::parse(e)?, &fb);
                write!(out, "{e} is a closure operation: {d}").unwrap();
                Ok(if d.provable() { 0 } else { 1 })
            } else if let Some(claim) = falsify {
                let field = prime_field(field)?;
                falsify_claim(claim, &field, *dim, &budget(field.spec()), out)
            } else if *facts {
                for f in fb.facts() {
                    writeln!(out, "{f}").unwrap();
                }
                Ok(0)
            } else {
                Err(Error::parse(0, "ops needs one of --derive, --closure, --falsify, --facts"))
            }
        }
        Command::Enumerate { dim, field, mode, out: path, seed, count } => {
            let mode: Mode = mode.parse()?;
            let text = match parse_field(field)? {
                FieldSpec::Rationals if mode == Mode::Named => named_examples(&Rationals).to_text(),
                FieldSpec::Rationals => return Err(Error::InfiniteField),
                FieldSpec::Prime(p) => {
                    let f = PrimeField::new(p as u64)?;
                    match mode {
                        Mode::Exhaustive => enumerate_exhaustive(&f, *dim, &budget(f.spec()))?.to_text(),
                        Mode::Sampled => sample(&f, *dim, *count, *seed)?.to_text(),
                        Mode::Named => named_examples(&f).to_text(),
                    }
                }
            };
            match path {
                Some(p) => {
                    std::fs::write(p, &text)?;
                    writeln!(out, "wrote {}", p.display()).unwrap();
                }
                None => out.push_str(&text),
            }
            Ok(0)
        }
    }
}

fn budget_for(base: Budget, args: &BudgetArgs, spec: FieldSpec) -> Budget {
    let mut b = base;
    if let (Some(d), Some(q)) = (args.max_enum_dim, spec.order()) {
        b.max_enum_bits = (d as f64 * (q as f64).log2()).ceil() as u32;
    }
    if let Some(bits) = args.max_enum_bits {
        b.max_enum_bits = bits;
    }
    if let Some(cap) = args.iso_cap {
        b.iso_cap = cap;
    }
    b
}

/// `2`, `GF2`, `GF(2)` or `Q`.
pub fn parse_field(text: &str) -> Result<FieldSpec> {
    let t = text.trim();
    if t == "Q" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t.trim_start_matches("GF").trim_start_matches('(').trim_end_matches(')');
    let p: u64 = digits.parse().map_err(|_| Error::parse(0, format!("unknown field `{text}`")))?;
    FieldSpec::prime(p)
}

fn prime_field(text: &str) -> Result<PrimeField> {
    match parse_field(text)? {
        FieldSpec::Prime(p) => PrimeField::new(p as u64),
        FieldSpec::Rationals => Err(Error::InfiniteField),
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Enumeration-based items print this over ℚ instead of failing the report.
fn or_unsupported<T>(r: Result<T>, show: impl FnOnce(T) -> String) -> Result<String> {
    match r {
        Ok(v) => Ok(show(v)),
        Err(Error::InfiniteField) => Ok("unsupported over Q".into()),
        Err(e @ (Error::BudgetExceeded(_) | Error::CapExceeded { .. })) => Ok(format!("skipped ({e})")),
        Err(e) => Err(e),
    }
}

fn dims(s: &crate::algebra::Series<impl Field>) -> String {
    s.dims().iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
}

fn analyze<F: Field>(a: &Algebra<F>, budget: &Budget, out: &mut String) -> Result<u8> {
    let power = a.power_series();
    let derived = a.derived_series();
    let w = &mut *out;
    writeln!(w, "field: {}", a.field().spec()).unwrap();
    writeln!(w, "dim: {}", a.dim()).unwrap();
    writeln!(w, "abelian: {}", yes(a.is_abelian())).unwrap();
    match a.nilpotency_index() {
        Some(k) => writeln!(w, "nilpotent: yes (index {k})").unwrap(),
        None => writeln!(w, "nilpotent: no").unwrap(),
    }
    match a.solvability_index() {
        Some(k) => writeln!(w, "solvable: yes (index {k})").unwrap(),
        None => writeln!(w, "solvable: no").unwrap(),
    }
    writeln!(w, "supersolvable: {}", or_unsupported(a.is_supersolvable(budget), |b| yes(b).into())?).unwrap();
    writeln!(w, "power series dims: {} (stable term {})", dims(&power), a.format_subspace(power.stable_term())).unwrap();
    writeln!(w, "derived series dims: {} (stable term {})", dims(&derived), a.format_subspace(derived.stable_term()))
        .unwrap();
    writeln!(w, "ideals: {}", or_unsupported(a.ideals(budget), |v| v.len().to_string())?).unwrap();
    writeln!(w, "subalgebras: {}", or_unsupported(a.subalgebras(budget), |v| v.len().to_string())?).unwrap();
    writeln!(w, "frattini ideal: {}", or_unsupported(a.frattini_ideal(budget), |u| a.format_subspace(&u))?).unwrap();
    writeln!(w, "primitive: {}", or_unsupported(a.is_primitive(budget), |b| yes(b).into())?).unwrap();
    writeln!(w, "simple: {}", or_unsupported(a.is_simple(budget), |b| yes(b).into())?).unwrap();
    Ok(0)
}

fn series<F: Field>(a: &Algebra<F>, out: &mut String) {
    for (name, s) in [("power", a.power_series()), ("derived", a.derived_series())] {
        writeln!(out, "{name} series:").unwrap();
        for (i, t) in s.terms.iter().enumerate() {
            writeln!(out, "  {}: dim {} {}", i + 1, t.dim(), a.format_subspace(t)).unwrap();
        }
    }
    match a.nilpotency_index() {
        Some(k) => writeln!(out, "nilpotency index: {k}").unwrap(),
        None => writeln!(out, "not nilpotent").unwrap(),
    }
    match a.solvability_index() {
        Some(k) => writeln!(out, "solvability index: {k}").unwrap(),
        None => writeln!(out, "not solvable").unwrap(),
    }
}

fn frattini<F: Field>(a: &Algebra<F>, budget: &Budget, out: &mut String) -> Result<u8> {
    writeln!(out, "frattini subalgebra: {}", a.format_subspace(&a.frattini_subalgebra(budget)?)).unwrap();
    writeln!(out, "frattini ideal: {}", a.format_subspace(&a.frattini_ideal(budget)?)).unwrap();
    Ok(0)
}

/// The exhaustive universe up to `dim`, plus `a` itself when larger.
fn universe_for<F: Field>(a: &Algebra<F>, dim: Option<usize>, budget: &Budget) -> Result<Option<Universe<F>>> {
    let Some(d) = dim else { return Ok(None) };
    let u = Universe::exhaustive(a.field(), d, budget)?;
    Ok(Some(if a.dim() > d { u.with_extras([a.clone()])? } else { u }))
}

fn extrinsic_tag(e: &ClassExpr) -> Option<&'static str> {
    match e {
        ClassExpr::Pred(_) => None,
        ClassExpr::Members(_) => Some("members"),
        ClassExpr::Op(op, x) => op.is_extrinsic().then(|| op.tag()).or_else(|| extrinsic_tag(x)),
        ClassExpr::Product(x, y) => extrinsic_tag(x).or_else(|| extrinsic_tag(y)),
        ClassExpr::Power(x, _) => extrinsic_tag(x),
    }
}

fn member<F: Field>(expr: &ClassExpr, a: &Algebra<F>, universe: Option<usize>, budget: &Budget, out: &mut String) -> Result<u8> {
    if expr.needs_universe() && universe.is_none() {
        return Err(Error::UniverseRequired(extrinsic_tag(expr).unwrap_or("members")));
    }
    if let ClassExpr::Pred(p) = expr {
        let holds = p.holds(a, budget)?;
        writeln!(out, "{}", if holds { "member: predicate holds" } else { "not a member" }).unwrap();
        return Ok(if holds { 0 } else { 1 });
    }
    let u = universe_for(a, universe, budget)?;
    let m = classes::member(expr, a, u.as_ref(), budget)?;
    match m.witness {
        Some(w) if m.holds => {
            writeln!(out, "member: {}", w.render(a)).unwrap();
            Ok(0)
        }
        _ => {
            writeln!(out, "not a member: no witness within budget").unwrap();
            Ok(1)
        }
    }
}

fn residual<F: Field>(expr: &ClassExpr, a: &Algebra<F>, universe: Option<usize>, budget: &Budget, out: &mut String) -> Result<u8> {
    let r = match expr {
        ClassExpr::Pred(p) => classes::residual(p, a, budget)?,
        _ => {
            let u = universe_for(a, universe, budget)?;
            classes::residual(&Evaluator::new(expr, a.field(), u.as_ref(), budget)?, a, budget)?
        }
    };
    let how = if r.fast_path { "closed formula" } else { "intersection of ideals with quotient in the class" };
    writeln!(out, "residual: {} (dim {}, {how})", a.format_subspace(&r.ideal), r.ideal.dim()).unwrap();
    Ok(0)
}

fn projectors<F: Field>(expr: &ClassExpr, a: &Algebra<F>, universe: Option<usize>, budget: &Budget, out: &mut String) -> Result<u8> {
    let u = universe_for(a, universe, budget)?;
    let ev = Evaluator::new(expr, a.field(), u.as_ref(), budget)?;
    let report = classes::projectors(&ev, a, budget)?;
    if let Some(w) = &report.warning {
        writeln!(out, "warning: {w}").unwrap();
    }
    if !report.projectors.is_empty() {
        for p in &report.projectors {
            writeln!(out, "projector: {}", a.format_subspace(p)).unwrap();
        }
        return Ok(0);
    }
    writeln!(out, "no projectors").unwrap();
    // explain why the largest subalgebras in the class fail
    let table = ProjectorTable::new(&ev, a, budget)?;
    let mut candidates: Vec<_> = table.subalgebras().iter().filter(|b| table.subalgebra_in_class(b) == Some(true)).collect();
    candidates.sort_by_key(|b| std::cmp::Reverse(b.dim()));
    for b in candidates.iter().take_while(|b| b.dim() == candidates[0].dim()) {
        if let Some((c, c0)) = table.is_projector(b)?.obstruction {
            writeln!(
                out,
                "  {}: C = {}, C0 = {} has C/C0 in the class but B + C0 = {} != C",
                a.format_subspace(b),
                a.format_subspace(&c),
                a.format_subspace(&c0),
                a.format_subspace(&b.sum_unchecked(&c0)),
            )
            .unwrap();
        }
    }
    Ok(1)
}

fn check(names: &[&str], field: &PrimeField, dim: usize, budget: &Budget, dump: Option<&Path>, out: &mut String) -> Result<u8> {
    let mut failed = false;
    for name in names {
        let report = checks::run_suite(name, field, dim, budget)?;
        writeln!(out, "{report}").unwrap();
        if report.passed() {
            continue;
        }
        failed = true;
        for f in report.failures.iter().take(10) {
            writeln!(out, "  {}", f.description).unwrap();
        }
        if let Some(text) = report.smallest_failure().and_then(|f| f.algebra.as_ref()) {
            match dump {
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let path = dir.join(format!("{name}.alg"));
                    std::fs::write(&path, text)?;
                    writeln!(out, "  smallest counterexample written to {}", path.display()).unwrap();
                }
                None => writeln!(out, "  smallest counterexample:\n{text}").unwrap(),
            }
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn falsify_claim(claim: &str, field: &PrimeField, dim: usize, budget: &Budget, out: &mut String) -> Result<u8> {
    let (l, rel, r) = opcalc::parse_claim(claim)?;
    let u = Universe::exhaustive(field, dim, budget)?;
    let gens = opcalc::singleton_generators(&u);
    let mut pairs = vec![(&l, &r)];
    if rel == Rel::Eq {
        pairs.push((&r, &l));
    }
    for (x, y) in pairs {
        if let Some(c) = opcalc::empirical_falsify(x, y, &[&u], &gens)? {
            writeln!(out, "counterexample to {x} <= {y}: generators {}, member #{} is in the left image only", c.generators, c.algebra)
                .unwrap();
            write!(out, "{}", u.member(c.algebra)).unwrap();
            return Ok(1);
        }
    }
    writeln!(
        out,
        "no counterexample among {} singleton generator sets over the dim <= {dim} {} universe",
        gens.len(),
        field.spec()
    )
    .unwrap();
    Ok(0)
}
