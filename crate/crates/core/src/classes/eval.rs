//! Deciding membership `A ∈ 𝔛` for class expressions.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::universe::{Containment, Key, Profile, ProfileStore};
use super::{ClassExpr, ClassPredicate, Operator, Universe};
use crate::algebra::Algebra;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::Subspace;

/// Why `A` belongs to a class. Subspaces live in `A` unless stated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<F: Field> {
    /// The built-in predicate holds.
    Predicate,
    /// `A` is isomorphic to this universe member.
    Generator(usize),
    /// `A` itself lies in the operand class.
    Itself,
    /// `A` is isomorphic to `part` (as a subalgebra or subideal) or to
    /// `ambient/part` (as a quotient), and `ambient` lies in the operand.
    Ambient { how: Containment, ambient: Algebra<F>, part: Subspace<F> },
    /// A subideal in the operand class.
    Subideal(Subspace<F>),
    /// `A = I ⊕ J`, `I` in the operand, `J` a direct sum of such.
    Summands(Subspace<F>, Subspace<F>),
    /// Ideals with quotients in the operand and zero intersection.
    Ideals(Vec<Subspace<F>>),
    /// Subideals in the operand summing to `A`.
    Subideals(Vec<Subspace<F>>),
    /// An ideal inside `Φ(A)` whose quotient lies in the operand.
    FrattiniIdeal(Subspace<F>),
    /// An ideal `N` with `N` in the first class and `A/N` in the second
    /// (for `E`: `N` poly-class, `A/N` in the operand).
    Extension(Subspace<F>),
    /// The ideals with primitive quotient; every such quotient is in the
    /// operand.
    PrimitiveQuotients(Vec<Subspace<F>>),
}

impl<F: Field> Witness<F> {
    /// One-line description, subspaces written in `a`'s basis names.
    pub fn render(&self, a: &Algebra<F>) -> String {
        let s = |u: &Subspace<F>| a.format_subspace(u);
        let list = |us: &[Subspace<F>]| us.iter().map(s).collect::<Vec<_>>().join(", ");
        match self {
            Witness::Predicate => "predicate holds".into(),
            Witness::Generator(id) => format!("isomorphic to universe member #{id}"),
            Witness::Itself => "the algebra itself lies in the operand".into(),
            Witness::Ambient { how, ambient, part } => {
                let p = ambient.format_subspace(part);
                let rel = match how {
                    Containment::Subalgebra => format!("isomorphic to the subalgebra {p}"),
                    Containment::Subideal => format!("isomorphic to the subideal {p}"),
                    Containment::Quotient => format!("isomorphic to the quotient by {p}"),
                };
                format!("{rel} of a {}-dimensional ambient algebra in the operand", ambient.dim())
            }
            Witness::Subideal(u) => format!("subideal {}", s(u)),
            Witness::Summands(i, j) => format!("direct sum {} ⊕ {}", s(i), s(j)),
            Witness::Ideals(us) => format!("ideals {}", list(us)),
            Witness::Subideals(us) => format!("subideals {}", list(us)),
            Witness::FrattiniIdeal(u) => format!("ideal {} inside the Frattini ideal", s(u)),
            Witness::Extension(u) => format!("ideal {}", s(u)),
            Witness::PrimitiveQuotients(us) if us.is_empty() => "no primitive quotients".into(),
            Witness::PrimitiveQuotients(us) => format!("primitive quotients by {}", list(us)),
        }
    }
}

/// Result of a membership query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership<F: Field> {
    pub holds: bool,
    pub witness: Option<Witness<F>>,
}

#[derive(Clone, Debug)]
enum Node {
    Pred(ClassPredicate),
    Members(BTreeSet<usize>),
    Op(Operator, usize),
    Product(usize, usize),
}

/// A compiled class expression with memoized membership answers.
///
/// Answers for universe and pool algebras are cached by position, all
/// others by structure tensor; reuse one evaluator for many queries
/// against the same class.
pub struct Evaluator<'u, F: Field> {
    field: F,
    budget: Budget,
    universe: Option<&'u Universe<F>>,
    own_store: Option<ProfileStore<F>>,
    nodes: Vec<Node>,
    root: usize,
    memo_pool: RefCell<Vec<Vec<Option<bool>>>>,
    memo_raw: RefCell<HashMap<(usize, Vec<F::Elem>), bool>>,
}

impl<'u, F: Field> Evaluator<'u, F> {
    pub fn new(expr: &ClassExpr, field: &F, universe: Option<&'u Universe<F>>, budget: &Budget) -> Result<Self> {
        let mut nodes = Vec::new();
        let root = compile(expr, universe, &mut nodes)?;
        let pool_len = universe.map_or(0, |u| u.pool_len());
        Ok(Evaluator {
            field: field.clone(),
            budget: universe.map_or(*budget, |u| *u.budget()),
            universe,
            own_store: universe.is_none().then(|| ProfileStore::new(0)),
            memo_pool: RefCell::new(vec![vec![None; pool_len]; nodes.len()]),
            memo_raw: RefCell::new(HashMap::new()),
            nodes,
            root,
        })
    }

    /// Decides `a ∈ 𝔛` and, when it holds, says why.
    pub fn member(&self, a: &Algebra<F>) -> Result<Membership<F>> {
        if a.field() != &self.field {
            return Err(Error::FieldMismatch(a.field().spec().to_string(), self.field.spec().to_string()));
        }
        let key = self.key_of(a);
        let profile = Profile::new(a.clone(), &self.budget)?;
        let witness = self.decide(self.root, &key, &profile)?;
        Ok(Membership { holds: witness.is_some(), witness })
    }

    /// Decides membership of universe member `id`.
    pub fn holds_member(&self, id: usize) -> Result<bool> {
        self.holds(self.root, &Key::Pool(id))
    }

    fn key_of(&self, a: &Algebra<F>) -> Key<F> {
        match self.universe {
            Some(u) => u.key_of(a),
            None => Key::Raw(a.constants().to_vec()),
        }
    }

    fn profile(&self, key: &Key<F>) -> Result<Arc<Profile<F>>> {
        match (self.universe, &self.own_store) {
            (Some(u), _) => u.profile(key),
            (None, Some(store)) => store.get(key, None, &self.field, &self.budget),
            (None, None) => unreachable!(),
        }
    }

    /// `node` at the subalgebra `s` of the profile's algebra.
    fn holds_sub(&self, node: usize, p: &Profile<F>, s: usize) -> Result<bool> {
        match p.sub_ids(self.universe)[s] {
            Some(id) => self.holds(node, &Key::Pool(id)),
            None if self.rejects_raw(node) => Ok(false),
            None => self.holds(node, &Key::Raw(p.sub_algebra(s).constants().to_vec())),
        }
    }

    fn holds_ideal(&self, node: usize, p: &Profile<F>, i: usize) -> Result<bool> {
        self.holds_sub(node, p, p.ideals[i])
    }

    /// `node` at the quotient by the `i`-th ideal.
    fn holds_quot(&self, node: usize, p: &Profile<F>, i: usize) -> Result<bool> {
        match p.quotient_ids(self.universe)[i] {
            Some(id) => self.holds(node, &Key::Pool(id)),
            None if self.rejects_raw(node) => Ok(false),
            None => self.holds(node, &Key::Raw(p.quotient_algebra(i).constants().to_vec())),
        }
    }

    fn quot_key(&self, p: &Profile<F>, i: usize) -> Key<F> {
        match p.quotient_ids(self.universe)[i] {
            Some(id) => Key::Pool(id),
            None => Key::Raw(p.quotient_algebra(i).constants().to_vec()),
        }
    }

    /// Generator sets contain no unidentified algebra.
    fn rejects_raw(&self, node: usize) -> bool {
        matches!(self.nodes[node], Node::Members(_))
    }

    fn holds(&self, node: usize, key: &Key<F>) -> Result<bool> {
        let cached = match key {
            Key::Pool(i) => self.memo_pool.borrow()[node][*i],
            Key::Raw(t) => self.memo_raw.borrow().get(&(node, t.clone())).copied(),
        };
        if let Some(b) = cached {
            return Ok(b);
        }
        let profile = self.profile(key)?;
        let b = self.decide(node, key, &profile)?.is_some();
        match key {
            Key::Pool(i) => self.memo_pool.borrow_mut()[node][*i] = Some(b),
            Key::Raw(t) => {
                self.memo_raw.borrow_mut().insert((node, t.clone()), b);
            }
        }
        Ok(b)
    }

    fn decide(&self, node: usize, key: &Key<F>, p: &Profile<F>) -> Result<Option<Witness<F>>> {
        let a = &p.algebra;
        match &self.nodes[node] {
            Node::Pred(pred) => Ok(pred.holds(a, &self.budget)?.then_some(Witness::Predicate)),
            Node::Members(ids) => Ok(match key {
                Key::Pool(i) if ids.contains(i) => Some(Witness::Generator(*i)),
                _ => None,
            }),
            Node::Product(x, y) => {
                for i in 0..p.ideals.len() {
                    if self.holds_ideal(*x, p, i)? && self.holds_quot(*y, p, i)? {
                        return Ok(Some(Witness::Extension(p.ideal(i).clone())));
                    }
                }
                Ok(None)
            }
            Node::Op(op, x) => self.decide_op(node, *op, *x, key, p),
        }
    }

    fn decide_op(&self, node: usize, op: Operator, x: usize, key: &Key<F>, p: &Profile<F>) -> Result<Option<Witness<F>>> {
        match op {
            Operator::S | Operator::Sn | Operator::Q => {
                if self.holds(x, key)? {
                    return Ok(Some(Witness::Itself));
                }
                self.ambient_search(op, x, key)
            }
            Operator::SnBar => {
                let flags = p.subideal_flags();
                for s in 0..p.subalgebras.len() {
                    if flags[s] && self.holds_sub(x, p, s)? {
                        return Ok(Some(Witness::Subideal(p.subalgebras[s].clone())));
                    }
                }
                Ok(None)
            }
            Operator::D0 => {
                if self.holds(x, key)? {
                    return Ok(Some(Witness::Itself));
                }
                for &(i, j) in p.decompositions() {
                    if self.holds_ideal(x, p, i)? && self.holds_ideal(node, p, j)? {
                        return Ok(Some(Witness::Summands(p.ideal(i).clone(), p.ideal(j).clone())));
                    }
                }
                Ok(None)
            }
            Operator::R0 => {
                let mut found = Vec::new();
                let mut meet = p.algebra.full();
                for i in 0..p.ideals.len() {
                    if self.holds_quot(x, p, i)? {
                        meet = meet.intersection_unchecked(p.ideal(i));
                        found.push(p.ideal(i).clone());
                    }
                }
                Ok((!found.is_empty() && meet.is_zero()).then(|| Witness::Ideals(minimal_family(found, |a, b| a.intersection_unchecked(b), |m| m.is_zero()))))
            }
            Operator::N0 => {
                let flags = p.subideal_flags();
                let mut found = Vec::new();
                let mut total = p.algebra.zero_subspace();
                for s in 0..p.subalgebras.len() {
                    if flags[s] && self.holds_sub(x, p, s)? {
                        total = total.sum_unchecked(&p.subalgebras[s]);
                        found.push(p.subalgebras[s].clone());
                    }
                }
                Ok((!found.is_empty() && total.is_full()).then(|| Witness::Subideals(minimal_family(found, |a, b| a.sum_unchecked(b), |m| m.is_full()))))
            }
            Operator::EPhi => {
                let phi = p.frattini();
                for i in 0..p.ideals.len() {
                    if phi.contains_subspace(p.ideal(i))? && self.holds_quot(x, p, i)? {
                        return Ok(Some(Witness::FrattiniIdeal(p.ideal(i).clone())));
                    }
                }
                Ok(None)
            }
            Operator::E => {
                if self.holds(x, key)? {
                    return Ok(Some(Witness::Itself));
                }
                for i in 0..p.ideals.len() {
                    let j = p.ideal(i);
                    if j.is_zero() || j.is_full() {
                        continue;
                    }
                    if self.holds_quot(x, p, i)? && self.holds_ideal(node, p, i)? {
                        return Ok(Some(Witness::Extension(j.clone())));
                    }
                }
                Ok(None)
            }
            Operator::P => {
                let mut primitive = Vec::new();
                for i in 0..p.ideals.len() {
                    let qk = self.quot_key(p, i);
                    if self.profile(&qk)?.is_primitive() {
                        if !self.holds(x, &qk)? {
                            return Ok(None);
                        }
                        primitive.push(p.ideal(i).clone());
                    }
                }
                Ok(Some(Witness::PrimitiveQuotients(primitive)))
            }
        }
    }

    /// Looks for an ambient pool algebra in class `x` containing a copy of
    /// the algebra at `key`. Only universe members are searched for; other
    /// algebras count as contained in themselves alone.
    fn ambient_search(&self, op: Operator, x: usize, key: &Key<F>) -> Result<Option<Witness<F>>> {
        let u = self.universe.expect("compiled with a universe");
        let id = match key {
            Key::Pool(i) if *i < u.len() => *i,
            _ => return Ok(None),
        };
        let how = match op {
            Operator::S => Containment::Subalgebra,
            Operator::Sn => Containment::Subideal,
            _ => Containment::Quotient,
        };
        let parents = u.parents(how)?;
        for &k in parents.get(&id).into_iter().flatten() {
            if !self.holds(x, &Key::Pool(k))? {
                continue;
            }
            let q = u.profile(&Key::Pool(k))?;
            let part = match how {
                Containment::Quotient => {
                    let i = q.quotient_ids(Some(u)).iter().position(|&j| j == Some(id)).expect("indexed");
                    q.ideal(i).clone()
                }
                _ => {
                    let flags = q.subideal_flags();
                    let s = (0..q.subalgebras.len())
                        .find(|&s| q.sub_ids(Some(u))[s] == Some(id) && (how == Containment::Subalgebra || flags[s]))
                        .expect("indexed");
                    q.subalgebras[s].clone()
                }
            };
            return Ok(Some(Witness::Ambient { how, ambient: q.algebra.clone(), part }));
        }
        Ok(None)
    }
}

/// Drops members of `family` while the combined value keeps `done`.
fn minimal_family<F: Field>(
    mut family: Vec<Subspace<F>>,
    combine: impl Fn(&Subspace<F>, &Subspace<F>) -> Subspace<F>,
    done: impl Fn(&Subspace<F>) -> bool,
) -> Vec<Subspace<F>> {
    let mut i = 0;
    while i < family.len() && family.len() > 1 {
        let rest: Vec<&Subspace<F>> = family.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s).collect();
        let mut acc = rest[0].clone();
        for s in &rest[1..] {
            acc = combine(&acc, s);
        }
        if done(&acc) {
            family.remove(i);
        } else {
            i += 1;
        }
    }
    family
}

fn compile<F: Field>(expr: &ClassExpr, u: Option<&Universe<F>>, nodes: &mut Vec<Node>) -> Result<usize> {
    let node = match expr {
        ClassExpr::Pred(p) => Node::Pred(*p),
        ClassExpr::Members(ids) => {
            let u = u.ok_or(Error::UniverseRequired("members"))?;
            if let Some(&bad) = ids.iter().find(|&&i| i >= u.len()) {
                return Err(Error::GeneratorOutsideUniverse(bad));
            }
            Node::Members(ids.clone())
        }
        ClassExpr::Op(op, x) => {
            if op.is_extrinsic() && u.is_none() {
                return Err(Error::UniverseRequired(op.tag()));
            }
            Node::Op(*op, compile(x, u, nodes)?)
        }
        ClassExpr::Product(x, y) => {
            let x = compile(x, u, nodes)?;
            Node::Product(x, compile(y, u, nodes)?)
        }
        ClassExpr::Power(x, k) => {
            let base = compile(x, u, nodes)?;
            nodes.push(Node::Pred(ClassPredicate::ZeroOnly));
            let mut acc = nodes.len() - 1;
            for _ in 0..*k {
                nodes.push(Node::Product(acc, base));
                acc = nodes.len() - 1;
            }
            return Ok(acc);
        }
    };
    nodes.push(node);
    Ok(nodes.len() - 1)
}

/// Decides `a ∈ expr`. Intrinsic expressions need no universe.
pub fn member<F: Field>(
    expr: &ClassExpr,
    a: &Algebra<F>,
    universe: Option<&Universe<F>>,
    budget: &Budget,
) -> Result<Membership<F>> {
    Evaluator::new(expr, a.field(), universe, budget)?.member(a)
}

/// The universe members lying in `expr`.
pub fn image<F: Field>(expr: &ClassExpr, universe: &Universe<F>) -> Result<BTreeSet<usize>> {
    let ev = Evaluator::new(expr, universe.field(), Some(universe), universe.budget())?;
    let mut out = BTreeSet::new();
    for id in 0..universe.len() {
        if ev.holds_member(id)? {
            out.insert(id);
        }
    }
    Ok(out)
}
