//! Algebras given by structure constants, and the constructions on them:
//! products of subspaces, ideals, closures and cores, power and derived
//! series, quotients, direct sums, subalgebra lattices, Frattini
//! subalgebras, subideals.
//!
//! Subspaces of an algebra are plain [`Subspace`] values whose ambient
//! dimension is the algebra's dimension; passing one of the wrong size is a
//! [`Error::ParentMismatch`].

mod bimodule;
mod format;
mod hom;
mod iso;

pub use bimodule::{split_null_extension, Bimodule};
pub use format::{parse_alg, parse_alg_as, AnyAlgebra};
pub use hom::{pullback, subdirect_embedding, AlgebraHom, Pullback, SubdirectEmbedding};
pub use iso::{brute_force_isomorphism, isomorphisms};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{enumerate_subspaces, format_vector, kernel, span_owned, unit_vector, Matrix, Subspace};

/// A finite-dimensional algebra: `eᵢeⱼ = Σₖ c[i][j][k] eₖ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    /// Flattened tensor, index `(i*n + j)*n + k`; the product `eᵢeⱼ` is the
    /// contiguous slice starting at `(i*n + j)*n`.
    constants: Vec<F::Elem>,
    names: Vec<String>,
}

/// A descending chain `A¹ ⊇ A² ⊇ …` (or `A⁽¹⁾ ⊇ A⁽²⁾ ⊇ …`) truncated at the
/// first term from which it is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<F: Field> {
    /// `terms[0]` is the first term (the whole algebra).
    pub terms: Vec<Subspace<F>>,
}

impl<F: Field> Series<F> {
    /// 1-based position of the first stable term.
    pub fn stable_index(&self) -> usize {
        self.terms.len()
    }

    pub fn stable_term(&self) -> &Subspace<F> {
        self.terms.last().expect("series has at least one term")
    }

    /// Smallest `n` with the n-th term zero, if the series reaches zero.
    pub fn zero_index(&self) -> Option<usize> {
        self.stable_term().is_zero().then_some(self.terms.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl<F: Field> Algebra<F> {
    pub fn new(field: &F, dim: usize, constants: Vec<F::Elem>) -> Result<Self> {
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        Ok(Algebra { field: field.clone(), dim, constants, names: default_names(dim) })
    }

    /// Builds an algebra from the nonzero products `eᵢeⱼ = v`.
    pub fn from_products(field: &F, dim: usize, products: &[(usize, usize, Vec<F::Elem>)]) -> Result<Self> {
        let mut a = Algebra::abelian(field, dim);
        for (i, j, v) in products {
            if *i >= dim || *j >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: (*i).max(*j) + 1 });
            }
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
            }
            let start = (i * dim + j) * dim;
            a.constants[start..start + dim].clone_from_slice(v);
        }
        Ok(a)
    }

    /// The algebra with all products zero.
    pub fn abelian(field: &F, dim: usize) -> Self {
        Algebra { field: field.clone(), dim, constants: vec![field.zero(); dim * dim * dim], names: default_names(dim) }
    }

    pub fn zero(field: &F) -> Self {
        Algebra::abelian(field, 0)
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn constants(&self) -> &[F::Elem] {
        &self.constants
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &F::Elem {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `eᵢeⱼ`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        let n = self.dim;
        &self.constants[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Same multiplication table, ignoring basis names.
    pub fn same_table(&self, other: &Algebra<F>) -> bool {
        self.field == other.field && self.dim == other.dim && self.constants == other.constants
    }

    pub fn full(&self) -> Subspace<F> {
        Subspace::full(&self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace<F> {
        Subspace::zero(&self.field, self.dim)
    }

    pub fn unit(&self, i: usize) -> Vec<F::Elem> {
        unit_vector(&self.field, self.dim, i)
    }

    /// Subspace spanned by the named basis vectors.
    pub fn span_of_basis(&self, indices: &[usize]) -> Subspace<F> {
        span_owned(&self.field, indices.iter().map(|&i| self.unit(i)).collect(), self.dim)
    }

    pub fn span(&self, vectors: &[Vec<F::Elem>]) -> Result<Subspace<F>> {
        crate::linalg::span(&self.field, vectors, self.dim)
    }

    pub fn format_vector(&self, v: &[F::Elem]) -> String {
        format_vector(&self.field, v, &self.names)
    }

    pub fn format_subspace(&self, u: &Subspace<F>) -> String {
        u.display(&self.names)
    }

    pub fn is_abelian(&self) -> bool {
        self.constants.iter().all(|x| self.field.is_zero(x))
    }

    fn check_vec(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    fn check_parent(&self, u: &Subspace<F>) -> Result<()> {
        if u.ambient_dim() != self.dim || *u.field() != self.field {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    /// `(uv)ₖ = Σᵢⱼ uᵢvⱼ c[i][j][k]`
    pub fn multiply(&self, u: &[F::Elem], v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        Ok(self.mul_unchecked(u, v))
    }

    pub(crate) fn mul_unchecked(&self, u: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if f.is_zero(ui) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if f.is_zero(vj) {
                    continue;
                }
                let coeff = f.mul(ui, vj);
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    f.mul_add(o, &coeff, c);
                }
            }
        }
        out
    }

    /// Span of all products `uv` with `u ∈ U`, `v ∈ V`.
    pub fn multiply_subspaces(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_parent(u)?;
        self.check_parent(v)?;
        Ok(self.mul_spaces(u, v))
    }

    pub(crate) fn mul_spaces(&self, u: &Subspace<F>, v: &Subspace<F>) -> Subspace<F> {
        let mut products = Vec::with_capacity(u.dim() * v.dim());
        for a in u.basis() {
            for b in v.basis() {
                products.push(self.mul_unchecked(a, b));
            }
        }
        span_owned(&self.field, products, self.dim)
    }

    pub fn is_subalgebra(&self, u: &Subspace<F>) -> Result<bool> {
        self.check_parent(u)?;
        Ok(self.is_subalgebra_unchecked(u))
    }

    pub(crate) fn is_subalgebra_unchecked(&self, u: &Subspace<F>) -> bool {
        u.basis().iter().all(|a| u.basis().iter().all(|b| u.contains_unchecked(&self.mul_unchecked(a, b))))
    }

    pub fn is_ideal(&self, u: &Subspace<F>) -> Result<bool> {
        self.check_parent(u)?;
        Ok(self.is_ideal_unchecked(u))
    }

    pub(crate) fn is_ideal_unchecked(&self, u: &Subspace<F>) -> bool {
        if u.is_full() {
            return true;
        }
        (0..self.dim).all(|i| {
            let e = self.unit(i);
            u.basis().iter().all(|b| {
                u.contains_unchecked(&self.mul_unchecked(&e, b)) && u.contains_unchecked(&self.mul_unchecked(b, &e))
            })
        })
    }

    /// Smallest ideal containing `s`: the least fixpoint of
    /// `T ↦ T + AT + TA` starting from `s`.
    pub fn ideal_closure(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_parent(s)?;
        Ok(self.closure_within(&self.full(), s))
    }

    /// Smallest ideal of the subalgebra `k` containing `s ⊆ k`.
    pub(crate) fn closure_within(&self, k: &Subspace<F>, s: &Subspace<F>) -> Subspace<F> {
        let mut t = s.clone();
        loop {
            let next = t.sum_unchecked(&self.mul_spaces(k, &t)).sum_unchecked(&self.mul_spaces(&t, k));
            if next.dim() == t.dim() {
                return t;
            }
            t = next;
        }
    }

    /// Largest ideal contained in `u`.
    ///
    /// Iterates `W ↦ {w ∈ W : Aw ⊆ W, wA ⊆ W}`. Each step is linear: the
    /// residues of `eᵢw` and `weᵢ` modulo `W` depend linearly on the
    /// coordinates of `w`, so the surviving part of `W` is a kernel.
    pub fn core(&self, u: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_parent(u)?;
        Ok(self.core_unchecked(u))
    }

    pub(crate) fn core_unchecked(&self, u: &Subspace<F>) -> Subspace<F> {
        let f = &self.field;
        let n = self.dim;
        let mut w = u.clone();
        loop {
            if w.is_zero() || w.is_full() {
                return w;
            }
            let d = w.dim();
            let mut rows: Vec<Vec<F::Elem>> = vec![Vec::with_capacity(d); 2 * n * n];
            for b in w.basis() {
                for i in 0..n {
                    let e = self.unit(i);
                    let left = w.residual(&self.mul_unchecked(&e, b));
                    let right = w.residual(&self.mul_unchecked(b, &e));
                    for k in 0..n {
                        rows[(2 * i) * n + k].push(left[k].clone());
                        rows[(2 * i + 1) * n + k].push(right[k].clone());
                    }
                }
            }
            let m = Matrix::from_rows(f, d, rows).expect("rows have d entries");
            let coeffs = kernel(&m);
            if coeffs.dim() == d {
                return w;
            }
            let next = coeffs.basis().iter().map(|c| w.combine(c)).collect();
            w = span_owned(f, next, n);
        }
    }

    /// `A¹ = A`, `Aⁿ⁺¹ = Σ_{i+j=n+1} AⁱAʲ`.
    ///
    /// Once `Aᵏ = Aᵏ⁺¹ = … = A²ᵏ` the chain is constant from `k` on: every
    /// summand `AⁱA^{m−i}` of `A^m` (`m ≥ 2k`) reappears in `A^{m+1}` after
    /// shifting whichever factor already has exponent in the stable range.
    pub fn power_series(&self) -> Series<F> {
        let mut terms = vec![self.full()];
        loop {
            if terms.last().unwrap().is_zero() {
                // the chain descends, so zero is final
                return Series { terms };
            }
            let m = terms.len() + 1;
            let mut next = self.zero_subspace();
            for i in 1..m {
                next = next.sum_unchecked(&self.mul_spaces(&terms[i - 1], &terms[m - i - 1]));
            }
            terms.push(next);
            let len = terms.len();
            for k in 1..=len / 2 {
                if terms[k - 1..2 * k].iter().all(|t| *t == terms[k - 1]) {
                    terms.truncate(k);
                    return Series { terms };
                }
            }
        }
    }

    /// `A⁽¹⁾ = A`, `A⁽ⁿ⁺¹⁾ = (A⁽ⁿ⁾)²`, until two consecutive terms agree.
    pub fn derived_series(&self) -> Series<F> {
        let mut terms = vec![self.full()];
        loop {
            let last = terms.last().unwrap();
            let next = self.mul_spaces(last, last);
            if next == *last {
                return Series { terms };
            }
            terms.push(next);
        }
    }

    pub fn nilpotency_index(&self) -> Option<usize> {
        self.power_series().zero_index()
    }

    pub fn solvability_index(&self) -> Option<usize> {
        self.derived_series().zero_index()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    pub fn is_solvable(&self) -> bool {
        self.solvability_index().is_some()
    }

    /// Every subspace of the underlying space, in canonical order.
    pub fn subspaces(&self, budget: &Budget) -> Result<Vec<Subspace<F>>> {
        enumerate_subspaces(&self.field, self.dim, None, budget)
    }

    pub fn ideals(&self, budget: &Budget) -> Result<Vec<Subspace<F>>> {
        Ok(self.subspaces(budget)?.into_iter().filter(|u| self.is_ideal_unchecked(u)).collect())
    }

    pub fn subalgebras(&self, budget: &Budget) -> Result<Vec<Subspace<F>>> {
        Ok(self.subspaces(budget)?.into_iter().filter(|u| self.is_subalgebra_unchecked(u)).collect())
    }

    /// Proper subalgebras not strictly contained in another proper subalgebra.
    pub fn maximal_subalgebras(&self, budget: &Budget) -> Result<Vec<Subspace<F>>> {
        let subs = self.subalgebras(budget)?;
        Ok(maximal_proper(&subs))
    }

    /// Intersection of the maximal subalgebras; `A` itself if there are none.
    pub fn frattini_subalgebra(&self, budget: &Budget) -> Result<Subspace<F>> {
        let maxes = self.maximal_subalgebras(budget)?;
        Ok(maxes.iter().fold(self.full(), |acc, m| acc.intersection_unchecked(m)))
    }

    /// `Φ(A)`, the core of the Frattini subalgebra.
    pub fn frattini_ideal(&self, budget: &Budget) -> Result<Subspace<F>> {
        Ok(self.core_unchecked(&self.frattini_subalgebra(budget)?))
    }

    /// Has a maximal subalgebra with zero core.
    pub fn is_primitive(&self, budget: &Budget) -> Result<bool> {
        Ok(self.maximal_subalgebras(budget)?.iter().any(|m| self.core_unchecked(m).is_zero()))
    }

    /// Only the trivial ideals, and not of dimension 0 or 1.
    pub fn is_simple(&self, budget: &Budget) -> Result<bool> {
        if self.dim <= 1 {
            return Ok(false);
        }
        Ok(self.ideals(budget)?.len() == 2)
    }

    /// A flag `0 = A₀ < A₁ < … < Aₙ = A` of ideals of `A` with `dim Aᵢ = i`,
    /// provided `A` is solvable; `None` if `A` is not supersolvable.
    pub fn supersolvable_flag(&self, budget: &Budget) -> Result<Option<Vec<Subspace<F>>>> {
        let ideals = self.ideals(budget)?;
        if !self.is_solvable() {
            return Ok(None);
        }
        let mut by_dim: Vec<Vec<&Subspace<F>>> = vec![Vec::new(); self.dim + 1];
        for i in &ideals {
            by_dim[i.dim()].push(i);
        }
        let mut chain = vec![self.zero_subspace()];
        let mut dead = std::collections::HashSet::new();
        if extend_flag(&by_dim, &mut chain, &mut dead) {
            Ok(Some(chain))
        } else {
            Ok(None)
        }
    }

    pub fn is_supersolvable(&self, budget: &Budget) -> Result<bool> {
        Ok(self.supersolvable_flag(budget)?.is_some())
    }

    /// Decides whether the subalgebra `u` is a subideal. Descends
    /// `K₀ = A`, `Kₜ₊₁ =` (ideal closure of `u` in `Kₜ`); any chain of
    /// successive ideals ending at `u` dominates this one term by term, so
    /// `u` is a subideal iff the descent reaches `u`. The witness lists the
    /// chain from `u` up to `A`, each term an ideal of the next.
    pub fn subideal_chain(&self, u: &Subspace<F>) -> Result<Option<Vec<Subspace<F>>>> {
        self.check_parent(u)?;
        if !self.is_subalgebra_unchecked(u) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.subideal_chain_unchecked(u))
    }

    pub(crate) fn subideal_chain_unchecked(&self, u: &Subspace<F>) -> Option<Vec<Subspace<F>>> {
        let mut chain = vec![self.full()];
        loop {
            let k = chain.last().unwrap();
            if k == u {
                chain.reverse();
                return Some(chain);
            }
            let next = self.closure_within(k, u);
            if next.dim() == k.dim() {
                return None;
            }
            chain.push(next);
        }
    }

    pub fn is_subideal(&self, u: &Subspace<F>) -> Result<bool> {
        Ok(self.subideal_chain(u)?.is_some())
    }

    /// `A/I` in the coordinates of the standard basis vectors outside the
    /// pivot columns of `I`, with the canonical projection.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Algebra<F>, AlgebraHom<F>)> {
        self.check_parent(ideal)?;
        if !self.is_ideal_unchecked(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let q = self.quotient_algebra(ideal);
        let proj = self.quotient_projection(ideal);
        let hom = AlgebraHom::new(self.clone(), q.clone(), proj)?;
        Ok((q, hom))
    }

    /// Quotient table without the verified projection; `ideal` must be an ideal.
    pub(crate) fn quotient_algebra(&self, ideal: &Subspace<F>) -> Algebra<F> {
        let f = &self.field;
        let keep = ideal.non_pivots();
        let m = keep.len();
        let mut constants = Vec::with_capacity(m * m * m);
        for &a in &keep {
            for &b in &keep {
                let r = ideal.residual(self.basis_product(a, b));
                constants.extend(keep.iter().map(|&c| r[c].clone()));
            }
        }
        Algebra { field: f.clone(), dim: m, constants, names: keep.iter().map(|&c| self.names[c].clone()).collect() }
    }

    pub(crate) fn quotient_projection(&self, ideal: &Subspace<F>) -> Matrix<F> {
        let keep = ideal.non_pivots();
        let cols: Vec<Vec<F::Elem>> = (0..self.dim)
            .map(|j| {
                let r = ideal.residual(&self.unit(j));
                keep.iter().map(|&c| r[c].clone()).collect()
            })
            .collect();
        Matrix::from_columns(&self.field, keep.len(), &cols).expect("columns have quotient length")
    }

    /// The subalgebra `u` as an algebra in the basis of its RREF rows,
    /// together with the inclusion.
    pub fn restrict(&self, u: &Subspace<F>) -> Result<(Algebra<F>, AlgebraHom<F>)> {
        self.check_parent(u)?;
        if !self.is_subalgebra_unchecked(u) {
            return Err(Error::NotASubalgebra);
        }
        let sub = self.restrict_unchecked(u);
        let inc = Matrix::from_columns(&self.field, self.dim, u.basis())?;
        let hom = AlgebraHom::new(sub.clone(), self.clone(), inc)?;
        Ok((sub, hom))
    }

    pub(crate) fn restrict_unchecked(&self, u: &Subspace<F>) -> Algebra<F> {
        let d = u.dim();
        let mut constants = Vec::with_capacity(d * d * d);
        for a in u.basis() {
            for b in u.basis() {
                let p = self.mul_unchecked(a, b);
                constants.extend(u.coordinates(&p).expect("u is a subalgebra"));
            }
        }
        let names = u
            .basis()
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut nz = v.iter().enumerate().filter(|(_, x)| !self.field.is_zero(x));
                match (nz.next(), nz.next()) {
                    (Some((k, _)), None) => self.names[k].clone(),
                    _ => format!("u{}", i + 1),
                }
            })
            .collect();
        Algebra { field: self.field.clone(), dim: d, constants, names }
    }

    /// The algebra `B` for which the invertible `p` is an isomorphism
    /// `A → B`: `eᵢ ·_B eⱼ = p((p⁻¹eᵢ)(p⁻¹eⱼ))`.
    pub fn transport(&self, p: &Matrix<F>) -> Result<Algebra<F>> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: p.rows() });
        }
        let inv = p.inverse().ok_or_else(|| Error::InvariantViolation("transport matrix is singular".into()))?;
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| inv.column(j)).collect();
        let mut constants = Vec::with_capacity(self.constants.len());
        for a in &cols {
            for b in &cols {
                constants.extend(p.apply(&self.mul_unchecked(a, b))?);
            }
        }
        Ok(Algebra { field: self.field.clone(), dim: self.dim, constants, names: self.names.clone() })
    }

    /// `A₁ ⊕ … ⊕ Aᵣ` with block-diagonal structure constants, and the
    /// injections of the summands.
    pub fn direct_sum(summands: &[&Algebra<F>]) -> Result<(Algebra<F>, Vec<AlgebraHom<F>>)> {
        let sum = Algebra::direct_sum_table(summands)?;
        let mut injections = Vec::with_capacity(summands.len());
        let mut offset = 0;
        for s in summands {
            let cols: Vec<Vec<F::Elem>> = (0..s.dim).map(|j| sum.unit(offset + j)).collect();
            let m = Matrix::from_columns(&sum.field, sum.dim, &cols)?;
            injections.push(AlgebraHom::new((*s).clone(), sum.clone(), m)?);
            offset += s.dim;
        }
        Ok((sum, injections))
    }

    pub(crate) fn direct_sum_table(summands: &[&Algebra<F>]) -> Result<Algebra<F>> {
        let Some(first) = summands.first() else {
            return Err(Error::InvariantViolation("direct sum of no summands".into()));
        };
        let field = first.field.clone();
        for s in summands {
            if s.field != field {
                return Err(Error::FieldMismatch(format!("{}", s.field.spec()), format!("{}", field.spec())));
            }
        }
        let n: usize = summands.iter().map(|s| s.dim).sum();
        let mut sum = Algebra::abelian(&field, n);
        let mut names = Vec::with_capacity(n);
        let mut offset = 0;
        for (idx, s) in summands.iter().enumerate() {
            let d = s.dim;
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        sum.constants[((offset + i) * n + offset + j) * n + offset + k] = s.structure_constant(i, j, k).clone();
                    }
                }
            }
            let clash = summands.len() > 1;
            names.extend(s.names.iter().map(|nm| if clash { format!("{nm}_{}", idx + 1) } else { nm.clone() }));
            offset += d;
        }
        sum.names = names;
        Ok(sum)
    }
}

fn extend_flag<F: Field>(
    by_dim: &[Vec<&Subspace<F>>],
    chain: &mut Vec<Subspace<F>>,
    dead: &mut std::collections::HashSet<Subspace<F>>,
) -> bool {
    let top = chain.last().unwrap().clone();
    if top.is_full() {
        return true;
    }
    if dead.contains(&top) {
        return false;
    }
    for next in &by_dim[top.dim() + 1] {
        if next.contains_subspace(&top).unwrap_or(false) {
            chain.push((*next).clone());
            if extend_flag(by_dim, chain, dead) {
                return true;
            }
            chain.pop();
        }
    }
    dead.insert(top);
    false
}

/// Members of a canonically sorted subalgebra list that are proper and not
/// strictly inside another proper member.
pub(crate) fn maximal_proper<F: Field>(subs: &[Subspace<F>]) -> Vec<Subspace<F>> {
    let proper: Vec<&Subspace<F>> = subs.iter().filter(|s| !s.is_full()).collect();
    proper
        .iter()
        .filter(|m| !proper.iter().any(|n| n.dim() > m.dim() && n.contains_subspace(m).unwrap_or(false)))
        .map(|m| (*m).clone())
        .collect()
}

#[cfg(test)]
mod tests;
