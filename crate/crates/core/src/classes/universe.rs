//! Finite stand-ins for "all algebras": isomorphism-class representatives
//! up to a dimension cap, plus an ambient pool in which subalgebras,
//! subideals and quotients are looked for.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{brute_force_isomorphism, Algebra};
use crate::budget::Budget;
use crate::corpus::{classify, Fingerprint};
use crate::error::Result;
use crate::exactfield::Field;
use crate::linalg::Subspace;

/// How an algebra is referred to during evaluation: by its position in the
/// pool when it has been identified, otherwise by its raw structure tensor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Key<F: Field> {
    Pool(usize),
    Raw(Vec<F::Elem>),
}

fn cube_root(len: usize) -> usize {
    (0..).find(|n: &usize| n * n * n >= len).unwrap()
}

/// Cached structural data of one algebra. Everything past the subalgebra
/// list is filled in on first use.
pub(crate) struct Profile<F: Field> {
    pub algebra: Algebra<F>,
    /// All subalgebras in canonical order.
    pub subalgebras: Vec<Subspace<F>>,
    /// Positions in `subalgebras` of the ideals.
    pub ideals: Vec<usize>,
    sub_ids: OnceLock<Vec<Option<usize>>>,
    quotient_ids: OnceLock<Vec<Option<usize>>>,
    subideal: OnceLock<Vec<bool>>,
    frattini: OnceLock<Subspace<F>>,
    primitive: OnceLock<bool>,
    decompositions: OnceLock<Vec<(usize, usize)>>,
}

impl<F: Field> Profile<F> {
    pub fn new(algebra: Algebra<F>, budget: &Budget) -> Result<Self> {
        let subalgebras = algebra.subalgebras(budget)?;
        let ideals = (0..subalgebras.len()).filter(|&i| algebra.is_ideal_unchecked(&subalgebras[i])).collect();
        Ok(Profile {
            algebra,
            subalgebras,
            ideals,
            sub_ids: OnceLock::new(),
            quotient_ids: OnceLock::new(),
            subideal: OnceLock::new(),
            frattini: OnceLock::new(),
            primitive: OnceLock::new(),
            decompositions: OnceLock::new(),
        })
    }

    pub fn ideal(&self, i: usize) -> &Subspace<F> {
        &self.subalgebras[self.ideals[i]]
    }

    pub fn sub_algebra(&self, s: usize) -> Algebra<F> {
        self.algebra.restrict_unchecked(&self.subalgebras[s])
    }

    pub fn quotient_algebra(&self, i: usize) -> Algebra<F> {
        self.algebra.quotient_algebra(self.ideal(i))
    }

    /// Pool ids of the subalgebras, where identifiable.
    pub fn sub_ids(&self, u: Option<&Universe<F>>) -> &[Option<usize>] {
        self.sub_ids.get_or_init(|| {
            (0..self.subalgebras.len()).map(|s| u.and_then(|u| u.identify_quick(&self.sub_algebra(s)))).collect()
        })
    }

    /// Pool ids of the quotients by each ideal, where identifiable.
    pub fn quotient_ids(&self, u: Option<&Universe<F>>) -> &[Option<usize>] {
        self.quotient_ids.get_or_init(|| {
            (0..self.ideals.len()).map(|i| u.and_then(|u| u.identify_quick(&self.quotient_algebra(i)))).collect()
        })
    }

    pub fn subideal_flags(&self) -> &[bool] {
        self.subideal.get_or_init(|| {
            self.subalgebras.iter().map(|s| self.algebra.subideal_chain_unchecked(s).is_some()).collect()
        })
    }

    /// `Φ(A)`, the core of the intersection of the maximal subalgebras.
    pub fn frattini(&self) -> &Subspace<F> {
        self.frattini.get_or_init(|| {
            let f = crate::algebra::maximal_proper(&self.subalgebras)
                .iter()
                .fold(self.algebra.full(), |acc, m| acc.intersection_unchecked(m));
            self.algebra.core_unchecked(&f)
        })
    }

    pub fn is_primitive(&self) -> bool {
        *self.primitive.get_or_init(|| {
            crate::algebra::maximal_proper(&self.subalgebras).iter().any(|m| self.algebra.core_unchecked(m).is_zero())
        })
    }

    /// Pairs of ideal positions `(i, j)`, both nonzero and proper, with
    /// `A = Iᵢ ⊕ Iⱼ`.
    pub fn decompositions(&self) -> &[(usize, usize)] {
        self.decompositions.get_or_init(|| {
            let n = self.algebra.dim();
            let mut out = Vec::new();
            for (i, &si) in self.ideals.iter().enumerate() {
                let a = &self.subalgebras[si];
                if a.is_zero() || a.is_full() {
                    continue;
                }
                for (j, &sj) in self.ideals.iter().enumerate() {
                    let b = &self.subalgebras[sj];
                    if b.is_zero() || b.is_full() || a.dim() + b.dim() != n {
                        continue;
                    }
                    if a.intersection_unchecked(b).is_zero() {
                        out.push((i, j));
                    }
                }
            }
            out
        })
    }
}

/// How an algebra sits inside an ambient one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    Subalgebra,
    Subideal,
    Quotient,
}

/// Profiles of pool members (indexed like the pool) and of unidentified
/// algebras (by tensor).
pub(crate) struct ProfileStore<F: Field> {
    pool: Vec<OnceLock<Arc<Profile<F>>>>,
    raw: Mutex<HashMap<Vec<F::Elem>, Arc<Profile<F>>>>,
}

impl<F: Field> ProfileStore<F> {
    pub fn new(pool_len: usize) -> Self {
        ProfileStore { pool: (0..pool_len).map(|_| OnceLock::new()).collect(), raw: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, key: &Key<F>, universe: Option<&Universe<F>>, field: &F, budget: &Budget) -> Result<Arc<Profile<F>>> {
        match key {
            Key::Pool(i) => {
                let cell = &self.pool[*i];
                if let Some(p) = cell.get() {
                    return Ok(p.clone());
                }
                let u = universe.expect("pool keys only exist with a universe");
                let p = Arc::new(Profile::new(u.pool_algebra(*i).clone(), budget)?);
                Ok(cell.get_or_init(|| p).clone())
            }
            Key::Raw(t) => {
                if let Some(p) = self.raw.lock().unwrap().get(t) {
                    return Ok(p.clone());
                }
                let a = Algebra::new(field, cube_root(t.len()), t.clone())?;
                let p = Arc::new(Profile::new(a, budget)?);
                self.raw.lock().unwrap().insert(t.clone(), p.clone());
                Ok(p)
            }
        }
    }
}

/// Isomorphism-class representatives over a finite field.
///
/// Members `0..len()` are every class of dimension at most the table
/// dimension (found by exhaustive classification and identified by table
/// lookup) followed by any extra, larger algebras registered with
/// [`Universe::with_extras`] (identified by fingerprint and brute-force
/// isomorphism). The *pool* extends the members by the direct sums
/// `K₁ ⊕ K₂` of nonzero members whose dimension exceeds the table
/// dimension but not twice it; extrinsic operators look for ambient
/// algebras among the members and the pool.
pub struct Universe<F: Field> {
    field: F,
    budget: Budget,
    table_dim: usize,
    members: Vec<Algebra<F>>,
    table: HashMap<Vec<F::Elem>, usize>,
    extras_by_print: HashMap<Fingerprint, Vec<usize>>,
    pool: OnceLock<Vec<Algebra<F>>>,
    store: OnceLock<ProfileStore<F>>,
    parents: Mutex<HashMap<Containment, Arc<HashMap<usize, Vec<usize>>>>>,
}

impl<F: Field> Universe<F> {
    /// All isomorphism classes of dimension `≤ max_dim`.
    pub fn exhaustive(field: &F, max_dim: usize, budget: &Budget) -> Result<Self> {
        let mut members = Vec::new();
        let mut table = HashMap::new();
        for d in 0..=max_dim {
            let c = classify(field, d, budget)?;
            let offset = members.len();
            for (tensor, id) in c.class_of {
                table.insert(tensor, offset + id);
            }
            members.extend(c.representatives);
        }
        Ok(Universe {
            field: field.clone(),
            budget: *budget,
            table_dim: max_dim,
            members,
            table,
            extras_by_print: HashMap::new(),
            pool: OnceLock::new(),
            store: OnceLock::new(),
            parents: Mutex::new(HashMap::new()),
        })
    }

    /// Adds algebras above the table dimension, one per isomorphism class,
    /// together with their subalgebras and quotients of such dimension.
    pub fn with_extras(mut self, extras: impl IntoIterator<Item = Algebra<F>>) -> Result<Self> {
        let mut work: Vec<Algebra<F>> = extras.into_iter().collect();
        while let Some(a) = work.pop() {
            if a.dim() <= self.table_dim || self.identify(&a)?.is_some() {
                continue;
            }
            let print = Fingerprint::of(&a, &self.budget)?;
            let named = Algebra::new(&self.field, a.dim(), a.constants().to_vec())?;
            self.extras_by_print.entry(print).or_default().push(self.members.len());
            self.members.push(named);
            for s in a.subalgebras(&self.budget)? {
                if s.dim() > self.table_dim && !s.is_full() {
                    work.push(a.restrict_unchecked(&s));
                }
            }
            for i in a.ideals(&self.budget)? {
                if a.dim() - i.dim() > self.table_dim && !i.is_zero() {
                    work.push(a.quotient_algebra(&i));
                }
            }
        }
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn budget(&self) -> &Budget {
        &self.budget
    }
    pub fn table_dim(&self) -> usize {
        self.table_dim
    }
    pub fn len(&self) -> usize {
        self.members.len()
    }
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
    pub fn members(&self) -> &[Algebra<F>] {
        &self.members
    }
    pub fn member(&self, id: usize) -> &Algebra<F> {
        &self.members[id]
    }

    /// Member isomorphic to `a`, if any.
    pub fn identify(&self, a: &Algebra<F>) -> Result<Option<usize>> {
        if a.field() != &self.field {
            return Ok(None);
        }
        if a.dim() <= self.table_dim {
            return Ok(self.table.get(a.constants()).copied());
        }
        if self.extras_by_print.is_empty() {
            return Ok(None);
        }
        let print = Fingerprint::of(a, &self.budget)?;
        for &id in self.extras_by_print.get(&print).into_iter().flatten() {
            if brute_force_isomorphism(a, &self.members[id], self.budget.iso_cap)?.is_some() {
                return Ok(Some(id));
            }
        }
        Ok(None)
    }

    /// [`Universe::identify`], treating failures as "not identified".
    pub(crate) fn identify_quick(&self, a: &Algebra<F>) -> Option<usize> {
        if a.dim() > self.table_dim && !self.extras_by_print.keys().any(|p| p.dim == a.dim()) {
            return None;
        }
        self.identify(a).ok().flatten()
    }

    /// Largest dimension of an ambient candidate.
    pub fn pool_max_dim(&self) -> usize {
        2 * self.table_dim
    }

    pub(crate) fn pool(&self) -> &[Algebra<F>] {
        self.pool.get_or_init(|| {
            let mut pool = self.members.clone();
            let nonzero: Vec<usize> = (0..self.members.len()).filter(|&i| self.members[i].dim() > 0).collect();
            for (x, &i) in nonzero.iter().enumerate() {
                for &j in &nonzero[x..] {
                    let d = self.members[i].dim() + self.members[j].dim();
                    if d <= self.table_dim || d > self.pool_max_dim() {
                        continue;
                    }
                    let sum = Algebra::direct_sum_table(&[&self.members[i], &self.members[j]]).expect("same field");
                    let sum = Algebra::new(&self.field, d, sum.constants().to_vec()).expect("cube");
                    if self.identify_quick(&sum).is_none() {
                        pool.push(sum);
                    }
                }
            }
            pool
        })
    }

    pub fn pool_len(&self) -> usize {
        self.pool().len()
    }

    pub fn pool_algebra(&self, i: usize) -> &Algebra<F> {
        &self.pool()[i]
    }

    pub(crate) fn store(&self) -> &ProfileStore<F> {
        self.store.get_or_init(|| ProfileStore::new(self.pool_len()))
    }

    pub(crate) fn key_of(&self, a: &Algebra<F>) -> Key<F> {
        match self.identify_quick(a) {
            Some(id) => Key::Pool(id),
            None => Key::Raw(a.constants().to_vec()),
        }
    }

    pub(crate) fn profile(&self, key: &Key<F>) -> Result<Arc<Profile<F>>> {
        self.store().get(key, Some(self), &self.field, &self.budget)
    }

    /// For each member id, the pool algebras containing a copy of it in the
    /// given relation.
    pub(crate) fn parents(&self, rel: Containment) -> Result<Arc<HashMap<usize, Vec<usize>>>> {
        if let Some(p) = self.parents.lock().unwrap().get(&rel) {
            return Ok(p.clone());
        }
        let mut map: HashMap<usize, Vec<usize>> = HashMap::new();
        for k in 0..self.pool_len() {
            let p = self.profile(&Key::Pool(k))?;
            let mut ids: Vec<usize> = match rel {
                Containment::Subalgebra => p.sub_ids(Some(self)).iter().flatten().copied().collect(),
                Containment::Subideal => p
                    .sub_ids(Some(self))
                    .iter()
                    .zip(p.subideal_flags())
                    .filter(|(_, &s)| s)
                    .filter_map(|(id, _)| *id)
                    .collect(),
                Containment::Quotient => p.quotient_ids(Some(self)).iter().flatten().copied().collect(),
            };
            ids.sort_unstable();
            ids.dedup();
            for id in ids {
                if id != k {
                    map.entry(id).or_default().push(k);
                }
            }
        }
        let map = Arc::new(map);
        self.parents.lock().unwrap().insert(rel, map.clone());
        Ok(map)
    }
}
