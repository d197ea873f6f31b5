use super::Algebra;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{kernel, span_owned, Matrix, Subspace};

/// A linear map between algebras that respects the product on every pair
/// of basis elements (checked on construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom<F: Field> {
    source: Algebra<F>,
    target: Algebra<F>,
    matrix: Matrix<F>,
}

impl<F: Field> AlgebraHom<F> {
    pub fn new(source: Algebra<F>, target: Algebra<F>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.rows() != target.dim() {
            return Err(Error::DimensionMismatch { expected: target.dim(), found: matrix.rows() });
        }
        if matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch { expected: source.dim(), found: matrix.cols() });
        }
        let images: Vec<Vec<F::Elem>> = (0..source.dim()).map(|j| matrix.column(j)).collect();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.apply(source.basis_product(i, j))?;
                let rhs = target.mul_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::NotHomomorphism(i, j));
                }
            }
        }
        Ok(AlgebraHom { source, target, matrix })
    }

    pub fn identity(a: &Algebra<F>) -> Self {
        let m = Matrix::identity(a.field(), a.dim());
        AlgebraHom { source: a.clone(), target: a.clone(), matrix: m }
    }

    pub fn source(&self) -> &Algebra<F> {
        &self.source
    }
    pub fn target(&self) -> &Algebra<F> {
        &self.target
    }
    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        self.matrix.apply(v)
    }

    pub fn kernel(&self) -> Subspace<F> {
        kernel(&self.matrix)
    }

    pub fn image(&self) -> Subspace<F> {
        self.image_of(&self.source.full())
    }

    pub fn image_of(&self, u: &Subspace<F>) -> Subspace<F> {
        let imgs = u.basis().iter().map(|v| self.matrix.apply(v).expect("source vector")).collect();
        span_owned(self.target.field(), imgs, self.target.dim())
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    /// `self ∘ first`
    pub fn after(&self, first: &AlgebraHom<F>) -> Result<AlgebraHom<F>> {
        if !first.target.same_table(&self.source) {
            return Err(Error::TargetMismatch);
        }
        let m = self.matrix.mul(&first.matrix)?;
        Ok(AlgebraHom { source: first.source.clone(), target: self.target.clone(), matrix: m })
    }
}

/// The pullback `A₁ ⋏ A₂ = {(a₁, a₂) : μ₁(a₁) = μ₂(a₂)}` of two epimorphisms
/// onto a common target, as a subalgebra of `A₁ ⊕ A₂`.
#[derive(Clone, Debug)]
pub struct Pullback<F: Field> {
    pub ambient: Algebra<F>,
    pub subspace: Subspace<F>,
    pub algebra: Algebra<F>,
    pub alpha1: AlgebraHom<F>,
    pub alpha2: AlgebraHom<F>,
    pub mu: AlgebraHom<F>,
}

/// Builds the pullback and checks on the way out that `ker α₁ ≅ ker μ₂`,
/// `ker α₂ ≅ ker μ₁` (via `α₂`, resp. `α₁`) and `ker μ = ker α₁ ⊕ ker α₂`.
pub fn pullback<F: Field>(mu1: &AlgebraHom<F>, mu2: &AlgebraHom<F>) -> Result<Pullback<F>> {
    if !mu1.target.same_table(&mu2.target) {
        return Err(Error::TargetMismatch);
    }
    if !mu1.is_surjective() || !mu2.is_surjective() {
        return Err(Error::NotEpimorphism);
    }
    let f = mu1.target.field().clone();
    let (a1, a2) = (&mu1.source, &mu2.source);
    let (n1, n2, h) = (a1.dim(), a2.dim(), mu1.target.dim());
    let ambient = Algebra::direct_sum_table(&[a1, a2])?;

    let mut rows = Vec::with_capacity(h);
    for i in 0..h {
        let mut row = mu1.matrix.row(i).to_vec();
        row.extend(mu2.matrix.row(i).iter().map(|x| f.neg(x)));
        rows.push(row);
    }
    let subspace = kernel(&Matrix::from_rows(&f, n1 + n2, rows)?);
    let (algebra, inclusion) = ambient.restrict(&subspace)?;

    let project = |offset: usize, len: usize, target: &Algebra<F>| -> Result<AlgebraHom<F>> {
        let rows = (0..len).map(|i| inclusion.matrix.row(offset + i).to_vec()).collect();
        AlgebraHom::new(algebra.clone(), target.clone(), Matrix::from_rows(&f, algebra.dim(), rows)?)
    };
    let alpha1 = project(0, n1, a1)?;
    let alpha2 = project(n1, n2, a2)?;
    let mu = mu1.after(&alpha1)?;

    let (k1, k2, k) = (alpha1.kernel(), alpha2.kernel(), mu.kernel());
    let violated = |what: &str| Err(Error::InvariantViolation(format!("pullback: {what}")));
    if alpha2.image_of(&k1) != mu2.kernel() || k1.dim() != mu2.kernel().dim() {
        return violated("ker α₁ is not carried onto ker μ₂");
    }
    if alpha1.image_of(&k2) != mu1.kernel() || k2.dim() != mu1.kernel().dim() {
        return violated("ker α₂ is not carried onto ker μ₁");
    }
    if k1.sum_unchecked(&k2) != k || !k1.intersection_unchecked(&k2).is_zero() {
        return violated("ker μ ≠ ker α₁ ⊕ ker α₂");
    }
    Ok(Pullback { ambient, subspace, algebra, alpha1, alpha2, mu })
}

/// `x ↦ (x + I₁, …, x + Iₙ)` into the direct sum of the quotients.
#[derive(Clone, Debug)]
pub struct SubdirectEmbedding<F: Field> {
    pub hom: AlgebraHom<F>,
    pub kernel: Subspace<F>,
    /// Whether the image projects onto every factor.
    pub is_subdirect: bool,
}

pub fn subdirect_embedding<F: Field>(a: &Algebra<F>, ideals: &[Subspace<F>]) -> Result<SubdirectEmbedding<F>> {
    let mut quotients = Vec::with_capacity(ideals.len());
    let mut projections = Vec::with_capacity(ideals.len());
    for i in ideals {
        let (q, p) = a.quotient(i)?;
        quotients.push(q);
        projections.push(p);
    }
    let target = if quotients.is_empty() {
        Algebra::zero(a.field())
    } else {
        Algebra::direct_sum_table(&quotients.iter().collect::<Vec<_>>())?
    };
    let rows = projections.iter().flat_map(|p| p.matrix.row_vecs()).collect();
    let hom = AlgebraHom::new(a.clone(), target, Matrix::from_rows(a.field(), a.dim(), rows)?)?;
    let kernel = hom.kernel();
    let meet = ideals.iter().fold(a.full(), |acc, i| acc.intersection_unchecked(i));
    if kernel != meet {
        return Err(Error::InvariantViolation("subdirect embedding kernel differs from the intersection".into()));
    }
    let is_subdirect = projections.iter().all(AlgebraHom::is_surjective);
    Ok(SubdirectEmbedding { hom, kernel, is_subdirect })
}
