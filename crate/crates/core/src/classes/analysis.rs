//! Residuals, projectors, complements, split/saturation/closedness checks
//! and closures inside a universe.

use std::collections::BTreeSet;

use super::eval::{image, Evaluator};
use super::{ClassExpr, ClassPredicate, Operator, Universe};
use crate::algebra::{split_null_extension, Algebra, AlgebraHom, Bimodule};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::Subspace;

/// Anything that can decide membership of an algebra.
pub trait AlgebraClass<F: Field> {
    fn contains(&self, a: &Algebra<F>, budget: &Budget) -> Result<bool>;

    /// The built-in predicate this class is, if any (enables fast paths).
    fn as_predicate(&self) -> Option<ClassPredicate> {
        None
    }
}

impl<F: Field> AlgebraClass<F> for ClassPredicate {
    fn contains(&self, a: &Algebra<F>, budget: &Budget) -> Result<bool> {
        self.holds(a, budget)
    }
    fn as_predicate(&self) -> Option<ClassPredicate> {
        Some(*self)
    }
}

impl<F: Field> AlgebraClass<F> for Evaluator<'_, F> {
    fn contains(&self, a: &Algebra<F>, _: &Budget) -> Result<bool> {
        Ok(self.member(a)?.holds)
    }
}

/// The 𝔛-residual: the least ideal with quotient in 𝔛.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual<F: Field> {
    pub ideal: Subspace<F>,
    /// Computed by a closed formula rather than by ideal enumeration.
    pub fast_path: bool,
}

/// Closed forms for the residual of built-in formations:
/// nilpotent ↦ stable power, abelian ↦ `A²`, index `≤ c` ↦ `Aᶜ`,
/// solvable ↦ ideal closure of the stable derived term.
pub fn residual_fast<F: Field>(pred: ClassPredicate, a: &Algebra<F>) -> Option<Subspace<F>> {
    Some(match pred {
        ClassPredicate::Nilpotent => a.power_series().stable_term().clone(),
        ClassPredicate::Abelian => a.mul_spaces(&a.full(), &a.full()),
        ClassPredicate::NilpotentC(c) => {
            let s = a.power_series();
            match c {
                0 => a.full(),
                c => s.terms.get(c - 1).unwrap_or(s.stable_term()).clone(),
            }
        }
        ClassPredicate::Solvable => a.closure_within(&a.full(), a.derived_series().stable_term()),
        ClassPredicate::ZeroOnly => a.full(),
        ClassPredicate::All => a.zero_subspace(),
        ClassPredicate::Supersolvable => return None,
    })
}

/// Intersection of all ideals with quotient in the class, after checking
/// that its own quotient is in the class.
pub fn residual_generic<F: Field, C: AlgebraClass<F> + ?Sized>(
    class: &C,
    a: &Algebra<F>,
    budget: &Budget,
) -> Result<Subspace<F>> {
    let mut family = Vec::new();
    for i in a.ideals(budget)? {
        if class.contains(&a.quotient_algebra(&i), budget)? {
            family.push(i);
        }
    }
    let meet = family.iter().fold(a.full(), |m, i| m.intersection_unchecked(i));
    if class.contains(&a.quotient_algebra(&meet), budget)? {
        return Ok(meet);
    }
    // Point at a pair whose intersection already leaves the class.
    for (x, i) in family.iter().enumerate() {
        for j in &family[x + 1..] {
            if !class.contains(&a.quotient_algebra(&i.intersection_unchecked(j)), budget)? {
                return Err(Error::NotAFormationEvidence { ideals: vec![a.format_subspace(i), a.format_subspace(j)] });
            }
        }
    }
    Err(Error::NotAFormationEvidence { ideals: family.iter().map(|i| a.format_subspace(i)).collect() })
}

/// The residual, by closed form when one is known.
pub fn residual<F: Field, C: AlgebraClass<F> + ?Sized>(class: &C, a: &Algebra<F>, budget: &Budget) -> Result<Residual<F>> {
    if let Some(ideal) = class.as_predicate().and_then(|p| residual_fast(p, a)) {
        return Ok(Residual { ideal, fast_path: true });
    }
    Ok(Residual { ideal: residual_generic(class, a, budget)?, fast_path: false })
}

/// Both sides of `φ(L(A)) = L(φ(A))` for an epimorphism φ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpimorphismCheck<F: Field> {
    pub holds: bool,
    pub image_of_residual: Subspace<F>,
    pub residual_of_image: Subspace<F>,
}

pub fn residual_epimorphism_check<F: Field, C: AlgebraClass<F> + ?Sized>(
    class: &C,
    hom: &AlgebraHom<F>,
    budget: &Budget,
) -> Result<EpimorphismCheck<F>> {
    if !hom.is_surjective() {
        return Err(Error::NotEpimorphism);
    }
    let source = residual(class, hom.source(), budget)?.ideal;
    let image_of_residual = hom.image_of(&source);
    let residual_of_image = residual(class, hom.target(), budget)?.ideal;
    Ok(EpimorphismCheck { holds: image_of_residual == residual_of_image, image_of_residual, residual_of_image })
}

/// For every subalgebra `C` of `A` (canonical order), its ideals `C₀` and
/// whether `C/C₀` lies in the class. Shared by all projector queries on `A`.
pub struct ProjectorTable<F: Field> {
    algebra: Algebra<F>,
    subalgebras: Vec<Subspace<F>>,
    in_class: Vec<bool>,
    pairs: Vec<Vec<(usize, bool)>>,
}

impl<F: Field> ProjectorTable<F> {
    pub fn new<C: AlgebraClass<F> + ?Sized>(class: &C, a: &Algebra<F>, budget: &Budget) -> Result<Self> {
        let subalgebras = a.subalgebras(budget)?;
        let mut in_class = Vec::with_capacity(subalgebras.len());
        let mut pairs = Vec::with_capacity(subalgebras.len());
        for c in &subalgebras {
            let ca = a.restrict_unchecked(c);
            in_class.push(class.contains(&ca, budget)?);
            let mut row = Vec::new();
            for (k, c0) in subalgebras.iter().enumerate() {
                if c0.dim() > c.dim() || !c.contains_subspace(c0)? || !is_ideal_of(a, c, c0) {
                    continue;
                }
                let local = relative(c, c0);
                row.push((k, class.contains(&ca.quotient_algebra(&local), budget)?));
            }
            pairs.push(row);
        }
        Ok(ProjectorTable { algebra: a.clone(), subalgebras, in_class, pairs })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn subalgebras(&self) -> &[Subspace<F>] {
        &self.subalgebras
    }

    /// Whether the subalgebra `b` lies in the class.
    pub fn subalgebra_in_class(&self, b: &Subspace<F>) -> Option<bool> {
        self.subalgebras.iter().position(|s| s == b).map(|i| self.in_class[i])
    }

    pub fn is_projector(&self, b: &Subspace<F>) -> Result<ProjectorVerdict<F>> {
        let Some(bi) = self.subalgebras.iter().position(|s| s == b) else {
            return Err(Error::NotASubalgebra);
        };
        if !self.in_class[bi] {
            return Ok(ProjectorVerdict { holds: false, in_class: false, obstruction: None });
        }
        for (ci, c) in self.subalgebras.iter().enumerate() {
            if c.dim() < b.dim() || !c.contains_subspace(b)? {
                continue;
            }
            for &(k, quotient_in) in &self.pairs[ci] {
                let c0 = &self.subalgebras[k];
                if quotient_in && &b.sum_unchecked(c0) != c {
                    return Ok(ProjectorVerdict { holds: false, in_class: true, obstruction: Some((c.clone(), c0.clone())) });
                }
            }
        }
        Ok(ProjectorVerdict { holds: true, in_class: true, obstruction: None })
    }

    pub fn projectors(&self) -> Result<Vec<Subspace<F>>> {
        let mut out = Vec::new();
        for (i, b) in self.subalgebras.iter().enumerate() {
            if self.in_class[i] && self.is_projector(b)?.holds {
                out.push(b.clone());
            }
        }
        Ok(out)
    }
}

/// `c0 ⊆ c` is an ideal of the subalgebra `c`.
fn is_ideal_of<F: Field>(a: &Algebra<F>, c: &Subspace<F>, c0: &Subspace<F>) -> bool {
    for x in c.basis() {
        for y in c0.basis() {
            if !c0.contains_unchecked(&a.mul_unchecked(x, y)) || !c0.contains_unchecked(&a.mul_unchecked(y, x)) {
                return false;
            }
        }
    }
    true
}

/// `inner ⊆ outer`, written in the coordinates of `outer`'s basis.
pub(crate) fn relative<F: Field>(outer: &Subspace<F>, inner: &Subspace<F>) -> Subspace<F> {
    let coords: Vec<Vec<F::Elem>> = inner.basis().iter().map(|v| outer.coordinates(v).expect("contained")).collect();
    crate::linalg::span_owned(outer.field(), coords, outer.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorVerdict<F: Field> {
    pub holds: bool,
    /// Whether `B` itself lies in the class.
    pub in_class: bool,
    /// `(C, C₀)` with `B ≤ C`, `C₀ ⊴ C`, `C/C₀` in the class, `B + C₀ ≠ C`.
    pub obstruction: Option<(Subspace<F>, Subspace<F>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectorReport<F: Field> {
    pub projectors: Vec<Subspace<F>>,
    /// Set when `A` is not solvable, where projector theory is usually stated.
    pub warning: Option<String>,
}

pub fn projectors<F: Field, C: AlgebraClass<F> + ?Sized>(
    class: &C,
    a: &Algebra<F>,
    budget: &Budget,
) -> Result<ProjectorReport<F>> {
    let projectors = ProjectorTable::new(class, a, budget)?.projectors()?;
    let warning = (!a.is_solvable()).then(|| "algebra is not solvable; projectors are computed from the definition anyway".to_string());
    Ok(ProjectorReport { projectors, warning })
}

pub fn is_projector<F: Field, C: AlgebraClass<F> + ?Sized>(
    class: &C,
    b: &Subspace<F>,
    a: &Algebra<F>,
    budget: &Budget,
) -> Result<ProjectorVerdict<F>> {
    if b.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.ambient_dim() });
    }
    if !a.is_subalgebra(b)? {
        return Err(Error::NotASubalgebra);
    }
    ProjectorTable::new(class, a, budget)?.is_projector(b)
}

/// Subalgebras `C` with `B ∩ C = 0` and `B + C = A`.
pub fn complements_of_ideal<F: Field>(a: &Algebra<F>, b: &Subspace<F>, budget: &Budget) -> Result<Vec<Subspace<F>>> {
    if !a.is_ideal(b)? {
        return Err(Error::NotAnIdeal);
    }
    Ok(a.subalgebras(budget)?
        .into_iter()
        .filter(|c| c.dim() + b.dim() == a.dim() && c.intersection_unchecked(b).is_zero())
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitVerdict<F: Field> {
    /// `A` lies in the class; otherwise nothing was checked.
    pub applicable: bool,
    /// Abelian ideals examined.
    pub checked: usize,
    /// An abelian ideal `B` with `A/B ⋉ B` outside the class.
    pub counterexample: Option<Subspace<F>>,
}

impl<F: Field> SplitVerdict<F> {
    pub fn holds(&self) -> bool {
        self.applicable && self.counterexample.is_none()
    }
}

/// Abelian ideals of `A` (`B·B = 0`), including `0`.
pub fn abelian_ideals<F: Field>(a: &Algebra<F>, budget: &Budget) -> Result<Vec<Subspace<F>>> {
    Ok(a.ideals(budget)?.into_iter().filter(|b| a.mul_spaces(b, b).is_zero()).collect())
}

/// For `A` in the class: does every abelian ideal `B` give a split null
/// extension `A/B ⋉ B` (with the induced bimodule) in the class?
pub fn is_split_on<F: Field, C: AlgebraClass<F> + ?Sized>(class: &C, a: &Algebra<F>, budget: &Budget) -> Result<SplitVerdict<F>> {
    if !class.contains(a, budget)? {
        return Ok(SplitVerdict { applicable: false, checked: 0, counterexample: None });
    }
    let ideals = abelian_ideals(a, budget)?;
    for b in &ideals {
        let (quotient, _, module) = Bimodule::induced(a, b)?;
        let ext = split_null_extension(&quotient, &module)?;
        if !class.contains(&ext, budget)? {
            return Ok(SplitVerdict { applicable: true, checked: ideals.len(), counterexample: Some(b.clone()) });
        }
    }
    Ok(SplitVerdict { applicable: true, checked: ideals.len(), counterexample: None })
}

/// Outcome of [`saturation_check`]; algebras are universe member ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SaturationReport {
    /// Solvable members with a nonzero abelian ideal.
    pub examined: usize,
    /// Of those, members without projectors.
    pub without_projectors: Vec<usize>,
    /// `(A, B)` pairs where `A ∉ 𝔛`, `B` is a minimal abelian ideal with
    /// `A/B ∈ 𝔛` and the instances of this situation.
    pub complement_instances: usize,
    /// ... and `B` has no complement.
    pub without_complement: Vec<(usize, String)>,
    /// ... or the projectors differ from the complements of `B`.
    pub projectors_not_complements: Vec<(usize, String)>,
    /// Members with `A/Φ(A) ∈ 𝔛` but `A ∉ 𝔛`.
    pub frattini_violations: Vec<usize>,
}

impl SaturationReport {
    /// No member violates the Φ-condition.
    pub fn saturated(&self) -> bool {
        self.frattini_violations.is_empty()
    }
}

/// Minimal ideals of `A` among its nonzero ideals.
pub(crate) fn minimal_ideals<F: Field>(ideals: &[Subspace<F>]) -> Vec<Subspace<F>> {
    let nonzero: Vec<&Subspace<F>> = ideals.iter().filter(|i| !i.is_zero()).collect();
    nonzero
        .iter()
        .filter(|m| !nonzero.iter().any(|n| n.dim() < m.dim() && m.contains_subspace(n).unwrap_or(false)))
        .map(|m| (*m).clone())
        .collect()
}

/// Minimal nonzero ideals of `A`.
pub fn minimal_ideals_of<F: Field>(a: &Algebra<F>, budget: &Budget) -> Result<Vec<Subspace<F>>> {
    Ok(minimal_ideals(&a.ideals(budget)?))
}

/// Projector existence, the complement criterion and the Φ-condition over
/// the solvable universe members that have a nonzero abelian ideal.
pub fn saturation_check<F: Field, C: AlgebraClass<F> + ?Sized>(class: &C, universe: &Universe<F>) -> Result<SaturationReport> {
    let budget = universe.budget();
    let mut report = SaturationReport::default();
    for (id, a) in universe.members().iter().enumerate() {
        if !a.is_solvable() {
            continue;
        }
        let ideals = a.ideals(budget)?;
        if !ideals.iter().any(|b| !b.is_zero() && a.mul_spaces(b, b).is_zero()) {
            continue;
        }
        report.examined += 1;
        let table = ProjectorTable::new(class, a, budget)?;
        let projectors = table.projectors()?;
        if projectors.is_empty() {
            report.without_projectors.push(id);
        }
        let in_class = class.contains(a, budget)?;
        if !in_class {
            for b in minimal_ideals(&ideals) {
                if !a.mul_spaces(&b, &b).is_zero() || !class.contains(&a.quotient_algebra(&b), budget)? {
                    continue;
                }
                report.complement_instances += 1;
                let complements = complements_of_ideal(a, &b, budget)?;
                if complements.is_empty() {
                    report.without_complement.push((id, a.format_subspace(&b)));
                }
                if complements != projectors {
                    report.projectors_not_complements.push((id, a.format_subspace(&b)));
                }
            }
            if class.contains(&a.quotient_algebra(&a.frattini_ideal(budget)?), budget)? {
                report.frattini_violations.push(id);
            }
        }
    }
    Ok(report)
}

/// Outcome of [`closedness_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosednessReport {
    pub op: Operator,
    /// Instances examined.
    pub checked: usize,
    /// `(member id, description)` of each violation.
    pub counterexamples: Vec<(usize, String)>,
}

impl ClosednessReport {
    pub fn closed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Tests `op(𝔛) ⊆ 𝔛` on the universe. For `S`, `Q`, `Sn` every
/// subalgebra / quotient / subideal of every member of 𝔛 is tested; for
/// `D0` every direct sum of two members of 𝔛 within the pool dimension;
/// for the intrinsic operators every member of `op(𝔛)`.
pub fn closedness_check<F: Field>(class: &ClassExpr, op: Operator, universe: &Universe<F>) -> Result<ClosednessReport> {
    let budget = universe.budget();
    let ev = Evaluator::new(class, universe.field(), Some(universe), budget)?;
    let mut report = ClosednessReport { op, checked: 0, counterexamples: Vec::new() };
    let members: Vec<usize> = (0..universe.len()).filter_map(|id| ev.holds_member(id).map(|b| b.then_some(id)).transpose()).collect::<Result<_>>()?;
    match op {
        Operator::S | Operator::Q | Operator::Sn => {
            for &id in &members {
                let a = universe.member(id);
                for (what, part, alg) in parts(a, op, budget)? {
                    report.checked += 1;
                    if !ev.member(&alg)?.holds {
                        report.counterexamples.push((id, format!("{what} {} not in class", a.format_subspace(&part))));
                    }
                }
            }
        }
        Operator::D0 => {
            for (x, &i) in members.iter().enumerate() {
                for &j in &members[x..] {
                    let (a, b) = (universe.member(i), universe.member(j));
                    if a.dim() + b.dim() > universe.pool_max_dim() {
                        continue;
                    }
                    report.checked += 1;
                    let (sum, _) = Algebra::direct_sum(&[a, b])?;
                    if !ev.member(&sum)?.holds {
                        report.counterexamples.push((i, format!("direct sum with member #{j} not in class")));
                    }
                }
            }
        }
        _ => {
            let closed = Evaluator::new(&class.clone().apply(op), universe.field(), Some(universe), budget)?;
            for id in 0..universe.len() {
                report.checked += 1;
                if members.contains(&id) {
                    continue;
                }
                let m = closed.member(universe.member(id))?;
                if let Some(w) = m.witness {
                    report.counterexamples.push((id, format!("in {op}(class) via {}", w.render(universe.member(id)))));
                }
            }
        }
    }
    Ok(report)
}

/// Subalgebras, quotients or subideals of `a`, as `(kind, subspace, algebra)`.
fn parts<F: Field>(a: &Algebra<F>, op: Operator, budget: &Budget) -> Result<Vec<(&'static str, Subspace<F>, Algebra<F>)>> {
    Ok(match op {
        Operator::S => a.subalgebras(budget)?.into_iter().map(|s| ("subalgebra", s.clone(), a.restrict_unchecked(&s))).collect(),
        Operator::Sn => a
            .subalgebras(budget)?
            .into_iter()
            .filter(|s| a.subideal_chain_unchecked(s).is_some())
            .map(|s| ("subideal", s.clone(), a.restrict_unchecked(&s)))
            .collect(),
        Operator::Q => a.ideals(budget)?.into_iter().map(|i| ("quotient by", i.clone(), a.quotient_algebra(&i))).collect(),
        other => return Err(Error::Unknown { kind: "operator for this check (expected S, Q or Sn)", name: other.to_string() }),
    })
}

/// `A ∈ 𝔛^C`: every subalgebra / quotient / subideal of `A` (for `C` =
/// `S`, `Q`, `Sn`) lies in the class.
pub fn xc_membership<F: Field, C: AlgebraClass<F> + ?Sized>(class: &C, op: Operator, a: &Algebra<F>, budget: &Budget) -> Result<bool> {
    for (_, _, alg) in parts(a, op, budget)? {
        if !class.contains(&alg, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

impl<F: Field> Universe<F> {
    /// The class generated by `generators`, which must all be isomorphic to
    /// universe members.
    pub fn generator_class(&self, generators: &[Algebra<F>]) -> Result<ClassExpr> {
        let mut ids = BTreeSet::new();
        for (i, g) in generators.iter().enumerate() {
            ids.insert(self.identify(g)?.ok_or(Error::GeneratorOutsideUniverse(i))?);
        }
        Ok(ClassExpr::Members(ids))
    }
}

/// Least subset of the universe containing the generators and closed under
/// each operator (membership forced by an operator adds the member).
pub fn class_closure_fixpoint<F: Field>(generators: &[Algebra<F>], ops: &[Operator], universe: &Universe<F>) -> Result<BTreeSet<usize>> {
    let ClassExpr::Members(mut current) = universe.generator_class(generators)? else { unreachable!() };
    loop {
        let mut next = current.clone();
        for &op in ops {
            next.extend(image(&ClassExpr::Members(current.clone()).apply(op), universe)?);
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    LeftSubset,
    RightSubset,
    Incomparable,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Equal => "equal",
            Relation::LeftSubset => "left_subset",
            Relation::RightSubset => "right_subset",
            Relation::Incomparable => "incomparable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Relation,
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

impl Comparison {
    pub fn left_only(&self) -> Vec<usize> {
        self.left.difference(&self.right).copied().collect()
    }
    pub fn right_only(&self) -> Vec<usize> {
        self.right.difference(&self.left).copied().collect()
    }
}

/// Compares the universe images of `left(base)` and `right(base)`;
/// operator sequences apply right-to-left (`[Q, EPhi]` is `Q(EPhi(base))`).
pub fn compare_operator_images<F: Field>(
    left: &[Operator],
    right: &[Operator],
    base: &ClassExpr,
    universe: &Universe<F>,
) -> Result<Comparison> {
    let l = image(&base.clone().under(left), universe)?;
    let r = image(&base.clone().under(right), universe)?;
    let relation = match (l.is_subset(&r), r.is_subset(&l)) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::LeftSubset,
        (false, true) => Relation::RightSubset,
        (false, false) => Relation::Incomparable,
    };
    Ok(Comparison { relation, left: l, right: r })
}
