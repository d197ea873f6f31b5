//! Property suites swept over corpora: each returns how many instances it
//! examined and every counterexample found, with a replayable `.alg` dump.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::algebra::{brute_force_isomorphism, pullback, subdirect_embedding, Algebra, AlgebraHom};
use crate::budget::Budget;
use crate::classes::{
    closedness_check, compare_operator_images, image, is_split_on, member, residual_epimorphism_check, residual_fast,
    residual_generic, ClassExpr, ClassPredicate, Evaluator, Operator, ProjectorTable, Relation, Universe, Witness,
};
use crate::classes::{abelian_ideals, complements_of_ideal, minimal_ideals_of};
use crate::corpus::{named_examples, sample, xyz_algebra};
use crate::error::{Error, Result};
use crate::exactfield::{Field, PrimeField, Rationals};
use crate::linalg::{span, Subspace};

/// Suite names, in acceptance order.
pub const SUITES: [&str; 10] = [
    "xyz-example",
    "closure-laws",
    "pullback-kernel",
    "subdirect",
    "residuals",
    "projectors",
    "split-formation",
    "product-closure",
    "subideal-criterion",
    "frattini-extension",
];

/// One violated instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub description: String,
    /// The offending algebra in `.alg` form, when there is one.
    pub algebra: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, description: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure { description: description(), algebra: None });
        }
    }

    fn expect_on<F: Field>(&mut self, ok: bool, a: &Algebra<F>, description: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure { description: description(), algebra: Some(a.to_string()) });
        }
    }

    /// The counterexample with the smallest algebra.
    pub fn smallest_failure(&self) -> Option<&Failure> {
        self.failures.iter().min_by_key(|f| f.algebra.as_ref().map_or(0, |t| t.len()))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "ok" } else { "FAILED" };
        write!(f, "{}: {verdict} ({} checks, {} counterexamples)", self.name, self.checked, self.failures.len())
    }
}

/// Runs a suite by name over GF(p) with corpora up to `dim`.
pub fn run_suite(name: &str, field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    match name {
        "xyz-example" => xyz_example(field, budget),
        "closure-laws" => closure_laws(field, dim, budget),
        "pullback-kernel" => pullback_kernel(field, dim, budget),
        "subdirect" => subdirect(field, dim, budget),
        "residuals" => residuals(field, dim, budget),
        "projectors" => projector_lemmas(field, dim, budget),
        "split-formation" => split_formation(field, dim, budget),
        "product-closure" => product_closure(field, dim, budget),
        "subideal-criterion" => subideal_criterion(field, dim, 1000, budget),
        "frattini-extension" => frattini_extension(field, budget),
        _ => Err(Error::Unknown { kind: "suite", name: name.to_string() }),
    }
}

/// Exhaustive classes up to `dim`, the named examples and `samples`
/// random three-dimensional algebras.
pub fn corpus(field: &PrimeField, dim: usize, samples: usize, budget: &Budget) -> Result<Vec<Algebra<PrimeField>>> {
    let mut out: Vec<Algebra<PrimeField>> = Universe::exhaustive(field, dim, budget)?.members().to_vec();
    out.extend(named_examples(field).algebras().cloned());
    out.extend(sample(field, 3, samples, 7)?.algebras().cloned());
    Ok(out)
}

fn basis_span<F: Field>(a: &Algebra<F>, idx: &[usize]) -> Subspace<F> {
    a.span_of_basis(idx)
}

fn xyz_facts<F: Field>(r: &mut SuiteReport, field: &F) {
    let a = xyz_algebra(field);
    let (yz, z) = (basis_span(&a, &[1, 2]), basis_span(&a, &[2]));
    let derived = a.derived_series();
    r.expect(derived.dims() == vec![3, 2, 1, 0], || format!("{}: derived dims {:?}", field.spec(), derived.dims()));
    r.expect(derived.terms.get(1) == Some(&yz) && derived.terms.get(2) == Some(&z), || {
        format!("{}: derived terms differ from span{{y,z}}, span{{z}}", field.spec())
    });
    r.expect(a.solvability_index() == Some(4), || format!("{}: solvability index {:?}", field.spec(), a.solvability_index()));
    let powers = a.power_series();
    r.expect(powers.stable_term() == &yz && !a.is_nilpotent(), || format!("{}: power series does not stop at span{{y,z}}", field.spec()));
    r.expect(!a.is_ideal_unchecked(&z), || format!("{}: third derived term is an ideal", field.spec()));
    r.expect(a.is_ideal_unchecked(&yz) && !a.mul_spaces(&yz, &yz).is_zero(), || {
        format!("{}: span{{y,z}} should be a non-abelian ideal", field.spec())
    });
    // Minimality without enumeration: every nonzero element of span{y,z}
    // generates all of it as an ideal (checked on y, z and y+z).
    let f = field;
    let minimal = [vec![f.zero(), f.one(), f.zero()], vec![f.zero(), f.zero(), f.one()], vec![f.zero(), f.one(), f.one()]]
        .into_iter()
        .all(|v| a.ideal_closure(&span(f, &[v], 3).unwrap()).unwrap() == yz);
    r.expect(minimal, || format!("{}: span{{y,z}} is not generated by its elements", field.spec()));
}

/// The three-dimensional example `x² = z, yz = z, zx = y`.
pub fn xyz_example(field: &PrimeField, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("xyz-example");
    xyz_facts(&mut r, field);
    xyz_facts(&mut r, &Rationals);
    let a = xyz_algebra(field);
    let yz = basis_span(&a, &[1, 2]);
    let ideals = a.ideals(budget)?;
    r.expect(ideals == vec![a.zero_subspace(), yz.clone(), a.full()], || format!("{}: ideals {ideals:?}", field.spec()));
    let subs: Vec<Subspace<PrimeField>> =
        a.subalgebras(budget)?.into_iter().filter(|s| !s.is_zero() && !s.is_full()).collect();
    if field.modulus() == 2 {
        let expected = vec![basis_span(&a, &[2]), basis_span(&a, &[1]), yz.clone()];
        r.expect(subs == expected, || format!("GF(2): proper subalgebras {}", subs.iter().map(|s| a.format_subspace(s)).collect::<Vec<_>>().join(", ")));
    }
    r.expect(a.frattini_ideal(budget)? == yz, || format!("{}: Frattini ideal differs from span{{y,z}}", field.spec()));
    let proj = ProjectorTable::new(&ClassPredicate::Nilpotent, &a, budget)?.projectors()?;
    r.expect(proj.is_empty(), || format!("{}: nilpotent projectors {proj:?}", field.spec()));
    Ok(r)
}

/// Nonzero universe members as singleton generator sets.
fn singleton_generators(u: &Universe<PrimeField>) -> Vec<ClassExpr> {
    (0..u.len()).filter(|&i| u.member(i).dim() > 0).map(|i| ClassExpr::members([i])).collect()
}

fn show_ids(ids: &[usize]) -> String {
    ids.iter().map(|i| format!("#{i}")).collect::<Vec<_>>().join(",")
}

/// Idempotence of the intrinsic operators and the four image inclusions
/// `QE_Φ ≤ E_ΦQ`, `D0S ≤ SD0`, `D0E_Φ ≤ E_ΦD0`, `R0Q ≤ QR0`.
pub fn closure_laws(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    use Operator::*;
    let mut r = SuiteReport::new("closure-laws");
    let u = Universe::exhaustive(field, dim, budget)?;
    for g in singleton_generators(&u) {
        for op in [R0, EPhi, E, N0, SnBar] {
            let once = image(&g.clone().apply(op), &u)?;
            let twice = image(&g.clone().apply(op).apply(op), &u)?;
            r.expect(once == twice, || format!("{op} not idempotent on {g}"));
        }
        for (left, right) in [([Q, EPhi], [EPhi, Q]), ([D0, S], [S, D0]), ([D0, EPhi], [EPhi, D0]), ([R0, Q], [Q, R0])] {
            let c = compare_operator_images(&left, &right, &g, &u)?;
            r.expect(matches!(c.relation, Relation::Equal | Relation::LeftSubset), || {
                format!("{}{}({g}) ⊄ {}{}({g}): members {}", left[0], left[1], right[0], right[1], show_ids(&c.left_only()))
            });
        }
    }
    Ok(r)
}

/// Kernel identities for the pullback of every pair of canonical
/// projections onto isomorphic quotients.
pub fn pullback_kernel(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("pullback-kernel");
    let u = Universe::exhaustive(field, dim, budget)?;
    // (quotient class) -> canonical projections onto a quotient in that class
    let mut by_target: HashMap<usize, Vec<AlgebraHom<PrimeField>>> = HashMap::new();
    for a in u.members() {
        for i in a.ideals(budget)? {
            let (q, p) = a.quotient(&i)?;
            let id = u.identify(&q)?.ok_or_else(|| Error::InvariantViolation("quotient outside universe".into()))?;
            by_target.entry(id).or_default().push(p);
        }
    }
    let mut targets: Vec<_> = by_target.into_iter().collect();
    targets.sort_by_key(|(id, _)| *id);
    for (_, maps) in &targets {
        for mu1 in maps {
            for mu2 in maps {
                let h = mu1.target();
                let iso = brute_force_isomorphism(mu2.target(), h, budget.iso_cap)?
                    .ok_or_else(|| Error::InvariantViolation("quotients in one class are not isomorphic".into()))?;
                let mu2 = AlgebraHom::new(mu2.target().clone(), h.clone(), iso)?.after(mu2)?;
                let pb = match pullback(mu1, &mu2) {
                    Ok(pb) => pb,
                    Err(e) => {
                        r.expect_on(false, mu1.source(), || format!("pullback failed: {e}"));
                        continue;
                    }
                };
                let (n1, n2) = (mu1.source().dim(), mu2.source().dim());
                let (k1, k2) = (pb.alpha1.kernel(), pb.alpha2.kernel());
                let ok = pb.algebra.dim() + h.dim() == n1 + n2
                    && k1.dim() == mu2.kernel().dim()
                    && k2.dim() == mu1.kernel().dim()
                    && pb.alpha2.image_of(&k1) == mu2.kernel()
                    && pb.alpha1.image_of(&k2) == mu1.kernel()
                    && k1.sum_unchecked(&k2) == pb.mu.kernel()
                    && k1.intersection_unchecked(&k2).is_zero();
                r.expect_on(ok, mu1.source(), || {
                    format!("kernel identities fail for ker μ₁ = {}, ker μ₂ = {}", mu1.source().format_subspace(&mu1.kernel()), mu2.source().format_subspace(&mu2.kernel()))
                });
            }
        }
    }
    Ok(r)
}

/// Subdirect subalgebras of `k1 ⊕ k2` (dimension `≤ max`), as member ids.
fn subdirect_ids(u: &Universe<PrimeField>, k1: &Algebra<PrimeField>, k2: &Algebra<PrimeField>, max: usize) -> Result<BTreeSet<usize>> {
    let (sum, _) = Algebra::direct_sum(&[k1, k2])?;
    let (n1, n2) = (k1.dim(), k2.dim());
    let mut out = BTreeSet::new();
    for s in sum.subalgebras(u.budget())? {
        if s.dim() > max {
            continue;
        }
        let first: Vec<Vec<_>> = s.basis().iter().map(|v| v[..n1].to_vec()).collect();
        let second: Vec<Vec<_>> = s.basis().iter().map(|v| v[n1..].to_vec()).collect();
        if span(u.field(), &first, n1)?.dim() == n1 && span(u.field(), &second, n2)?.dim() == n2 {
            if let Some(id) = u.identify(&sum.restrict_unchecked(&s))? {
                out.insert(id);
            }
        }
    }
    Ok(out)
}

/// Subdirect embeddings of ideal pairs, and `R0` membership against a
/// direct search for subdirect subalgebras of `K₁ ⊕ K₂` (`Kᵢ` in the class).
pub fn subdirect(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("subdirect");
    let u = Universe::exhaustive(field, dim, budget)?;
    for a in corpus(field, dim, 0, budget)? {
        let ideals = a.ideals(budget)?;
        for i in &ideals {
            for j in &ideals {
                let e = subdirect_embedding(&a, &[i.clone(), j.clone()])?;
                let onto_each = [i, j].iter().all(|x| a.quotient(x).map(|(_, p)| p.is_surjective()).unwrap_or(false));
                r.expect_on(e.kernel == i.intersection_unchecked(j) && e.is_subdirect && onto_each, &a, || {
                    format!("embedding for {} and {}", a.format_subspace(i), a.format_subspace(j))
                });
            }
        }
    }
    let mut classes: Vec<ClassExpr> = singleton_generators(&u);
    classes.extend([ClassPredicate::Abelian, ClassPredicate::Nilpotent, ClassPredicate::Solvable].map(ClassExpr::Pred));
    for x in classes {
        let in_x: Vec<usize> = image(&x, &u)?.into_iter().collect();
        let mut embeddable = BTreeSet::new();
        for (p, &k1) in in_x.iter().enumerate() {
            embeddable.insert(k1);
            for &k2 in &in_x[p..] {
                embeddable.extend(subdirect_ids(&u, u.member(k1), u.member(k2), dim)?);
            }
        }
        let ev = Evaluator::new(&x.clone().apply(Operator::R0), field, Some(&u), budget)?;
        for (id, a) in u.members().iter().enumerate() {
            let m = ev.member(a)?;
            r.expect_on(m.holds == embeddable.contains(&id), a, || {
                format!("R0({x}) says {}, subdirect search says {}", m.holds, embeddable.contains(&id))
            });
            if let Some(Witness::Ideals(family)) = &m.witness {
                let e = subdirect_embedding(a, family)?;
                let factors_in = family.iter().all(|i| ev_holds(&x, &a.quotient_algebra(i), &u).unwrap_or(false));
                r.expect_on(e.kernel.is_zero() && e.is_subdirect && factors_in, a, || format!("R0({x}) witness does not embed"));
            }
        }
    }
    Ok(r)
}

fn ev_holds(x: &ClassExpr, a: &Algebra<PrimeField>, u: &Universe<PrimeField>) -> Result<bool> {
    Ok(member(x, a, Some(u), u.budget())?.holds)
}

/// Generic vs closed-form residuals, minimality, and `φ(L(A)) = L(φ(A))`
/// for canonical projections.
pub fn residuals(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("residuals");
    let preds = [ClassPredicate::Nilpotent, ClassPredicate::Abelian];
    for a in corpus(field, dim, 100, budget)? {
        let ideals = a.ideals(budget)?;
        for pred in preds.into_iter().chain([ClassPredicate::Solvable]) {
            let generic = residual_generic(&pred, &a, budget)?;
            if let Some(fast) = residual_fast(pred, &a) {
                r.expect_on(fast == generic, &a, || format!("{pred}: closed form {} vs generic {}", a.format_subspace(&fast), a.format_subspace(&generic)));
            }
            for i in &ideals {
                if pred.holds(&a.quotient_algebra(i), budget)? {
                    r.expect_on(i.contains_subspace(&generic)?, &a, || format!("{pred}: residual not inside {}", a.format_subspace(i)));
                }
            }
        }
        for i in &ideals {
            let (_, proj) = a.quotient(i)?;
            for pred in preds {
                let c = residual_epimorphism_check(&pred, &proj, budget)?;
                r.expect_on(c.holds, &a, || format!("{pred}: image of residual differs from residual of A/{}", a.format_subspace(i)));
            }
        }
    }
    Ok(r)
}

/// `inner ⊆ outer` in `outer`'s coordinates, and back.
fn to_local(outer: &Subspace<PrimeField>, inner: &Subspace<PrimeField>) -> Subspace<PrimeField> {
    let coords: Vec<_> = inner.basis().iter().map(|v| outer.coordinates(v).expect("contained")).collect();
    span(outer.field(), &coords, outer.dim()).expect("dims")
}

fn from_local(outer: &Subspace<PrimeField>, local: &Subspace<PrimeField>) -> Subspace<PrimeField> {
    let vs: Vec<_> = local.basis().iter().map(|c| outer.combine(c)).collect();
    span(outer.field(), &vs, outer.ambient_dim()).expect("dims")
}

/// Preimage in `a` of a subspace of `a/ideal` (quotient coordinates are
/// the non-pivot coordinates of `ideal`).
fn lift(a: &Algebra<PrimeField>, ideal: &Subspace<PrimeField>, sub: &Subspace<PrimeField>) -> Subspace<PrimeField> {
    let free = ideal.non_pivots();
    let f = a.field();
    let mut vs = ideal.basis().to_vec();
    for c in sub.basis() {
        let mut v = vec![f.zero(); a.dim()];
        for (k, &pos) in free.iter().enumerate() {
            v[pos] = c[k];
        }
        vs.push(v);
    }
    span(f, &vs, a.dim()).expect("dims")
}

/// Image in `a/ideal` of a subspace of `a`.
fn project(a: &Algebra<PrimeField>, ideal: &Subspace<PrimeField>, sub: &Subspace<PrimeField>) -> Subspace<PrimeField> {
    let (_, p) = a.quotient(ideal).expect("ideal");
    p.image_of(sub)
}

/// Maximality, heredity and transitivity of projectors, and projectors =
/// complements of a minimal abelian ideal `B` when `A ∉ 𝔛`, `A/B ∈ 𝔛`.
pub fn projector_lemmas(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("projectors");
    for a in corpus(field, dim, 60, budget)? {
        if !a.is_solvable() {
            continue;
        }
        let ideals = a.ideals(budget)?;
        for pred in [ClassPredicate::Abelian, ClassPredicate::Nilpotent] {
            let table = ProjectorTable::new(&pred, &a, budget)?;
            let projs = table.projectors()?;
            let subs = table.subalgebras();
            for b in &projs {
                // maximal among subalgebras in the class
                let maximal = subs.iter().all(|h| h == b || !h.contains_subspace(b).unwrap() || table.subalgebra_in_class(h) != Some(true));
                r.expect_on(maximal, &a, || format!("{pred}: projector {} not maximal", a.format_subspace(b)));
                // heredity through intermediate subalgebras
                for c in subs.iter().filter(|c| c.contains_subspace(b).unwrap()) {
                    let local = ProjectorTable::new(&pred, &a.restrict_unchecked(c), budget)?;
                    r.expect_on(local.is_projector(&to_local(c, b))?.holds, &a, || {
                        format!("{pred}: {} not a projector of {}", a.format_subspace(b), a.format_subspace(c))
                    });
                }
                // heredity through quotients
                for i in &ideals {
                    let q = a.quotient_algebra(i);
                    let local = ProjectorTable::new(&pred, &q, budget)?;
                    r.expect_on(local.is_projector(&project(&a, i, b))?.holds, &a, || {
                        format!("{pred}: image of {} not a projector of A/{}", a.format_subspace(b), a.format_subspace(i))
                    });
                }
            }
            // transitivity through ideals
            for bi in &ideals {
                let q = a.quotient_algebra(bi);
                for ub in ProjectorTable::new(&pred, &q, budget)?.projectors()? {
                    let uu = lift(&a, bi, &ub);
                    for c in ProjectorTable::new(&pred, &a.restrict_unchecked(&uu), budget)?.projectors()? {
                        let c = from_local(&uu, &c);
                        r.expect_on(table.is_projector(&c)?.holds, &a, || {
                            format!("{pred}: {} from U = {} over B = {} is not a projector", a.format_subspace(&c), a.format_subspace(&uu), a.format_subspace(bi))
                        });
                    }
                }
            }
            // projectors and complements
            if pred.holds(&a, budget)? {
                continue;
            }
            for b in minimal_ideals_of(&a, budget)? {
                if !a.mul_spaces(&b, &b).is_zero() || !pred.holds(&a.quotient_algebra(&b), budget)? {
                    continue;
                }
                let comps = complements_of_ideal(&a, &b, budget)?;
                r.expect_on(comps == projs, &a, || format!("{pred}: projectors differ from complements of {}", a.format_subspace(&b)));
            }
        }
    }
    Ok(r)
}

/// Split null extensions by abelian ideals stay in the class.
pub fn split_formation(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("split-formation");
    for a in corpus(field, dim, 100, budget)? {
        for pred in [ClassPredicate::Abelian, ClassPredicate::Nilpotent, ClassPredicate::Solvable] {
            if !pred.holds(&a, budget)? {
                continue;
            }
            let v = is_split_on(&pred, &a, budget)?;
            r.checked += abelian_ideals(&a, budget)?.len().saturating_sub(1);
            r.expect_on(v.holds(), &a, || {
                format!("{pred}: extension by {} leaves the class", v.counterexample.as_ref().map_or("?".into(), |b| a.format_subspace(b)))
            });
        }
    }
    Ok(r)
}

/// `S`-, `Q`- and `Sn`-closedness of products of closed classes, and
/// `prod(abelian,abelian)` ⟺ `(A²)² = 0`.
pub fn product_closure(field: &PrimeField, dim: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("product-closure");
    let u = Universe::exhaustive(field, dim, budget)?;
    let preds = [ClassPredicate::Abelian, ClassPredicate::Nilpotent, ClassPredicate::Solvable];
    let ops = [Operator::S, Operator::Q, Operator::Sn];
    for p in preds {
        for op in ops {
            let rep = closedness_check(&ClassExpr::Pred(p), op, &u)?;
            r.expect(rep.closed(), || format!("{p} is not {op}-closed: {:?}", rep.counterexamples));
        }
    }
    for x in preds {
        for y in preds {
            let prod = ClassExpr::Pred(x).product(ClassExpr::Pred(y));
            for op in ops {
                let rep = closedness_check(&prod, op, &u)?;
                r.expect(rep.closed(), || format!("{prod} is not {op}-closed: {:?}", rep.counterexamples));
            }
        }
    }
    let meta = Evaluator::new(&ClassExpr::Pred(ClassPredicate::Abelian).product(ClassExpr::Pred(ClassPredicate::Abelian)), field, Some(&u), budget)?;
    for (id, a) in u.members().iter().enumerate() {
        let sq = a.mul_spaces(&a.full(), &a.full());
        let closed_form = a.mul_spaces(&sq, &sq).is_zero();
        let got = meta.holds_member(id)?;
        r.expect_on(got == closed_form, a, || format!("metabelian membership {got}, (A²)² = 0 is {closed_form}"));
    }
    Ok(r)
}

/// Whether `u` reaches `A` through a chain of subalgebras, each an ideal
/// of the next, by search over all subalgebras.
fn chain_search(a: &Algebra<PrimeField>, subs: &[Subspace<PrimeField>], u: usize, memo: &mut HashMap<usize, bool>) -> bool {
    if subs[u].is_full() {
        return true;
    }
    if let Some(&b) = memo.get(&u) {
        return b;
    }
    memo.insert(u, false);
    let found = (0..subs.len()).any(|v| {
        subs[v].dim() > subs[u].dim()
            && subs[v].contains_subspace(&subs[u]).unwrap()
            && is_ideal_in(a, &subs[v], &subs[u])
            && chain_search(a, subs, v, memo)
    });
    memo.insert(u, found);
    found
}

fn is_ideal_in(a: &Algebra<PrimeField>, outer: &Subspace<PrimeField>, inner: &Subspace<PrimeField>) -> bool {
    outer.basis().iter().all(|x| {
        inner.basis().iter().all(|y| {
            inner.contains(&a.multiply(x, y).unwrap()).unwrap() && inner.contains(&a.multiply(y, x).unwrap()).unwrap()
        })
    })
}

/// Descent-based subideal test against exhaustive chain search.
pub fn subideal_criterion(field: &PrimeField, dim: usize, samples: usize, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("subideal-criterion");
    for a in corpus(field, dim, samples, budget)? {
        let subs = a.subalgebras(budget)?;
        let mut memo = HashMap::new();
        for (i, s) in subs.iter().enumerate() {
            let descent = a.is_subideal(s)?;
            let search = chain_search(&a, &subs, i, &mut memo);
            r.expect_on(descent == search, &a, || format!("{}: descent {descent}, search {search}", a.format_subspace(s)));
        }
    }
    Ok(r)
}

/// `xyz ∈ E_Φ(nilpotent)` but `xyz ∉ nilpotent`.
pub fn frattini_extension(field: &PrimeField, budget: &Budget) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("frattini-extension");
    let a = xyz_algebra(field);
    let m = member(&ClassExpr::Pred(ClassPredicate::Nilpotent).apply(Operator::EPhi), &a, None, budget)?;
    r.expect(m.holds, || "xyz not in EPhi(nilpotent)".into());
    r.expect(m.witness == Some(Witness::FrattiniIdeal(a.span_of_basis(&[1, 2]))), || format!("unexpected witness {:?}", m.witness));
    r.expect(!member(&ClassExpr::Pred(ClassPredicate::Nilpotent), &a, None, budget)?.holds, || "xyz is nilpotent".into());
    Ok(r)
}
