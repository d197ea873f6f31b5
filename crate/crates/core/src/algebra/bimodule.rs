use super::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{Matrix, Subspace};

/// A vector space `M` with bilinear actions `A × M → M` and `M × A → M`,
/// given by the matrices of `eᵢ·−` and `−·eᵢ`. No compatibility law is
/// imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<F: Field> {
    algebra: Algebra<F>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(algebra: Algebra<F>, dim: usize, left: Vec<Matrix<F>>, right: Vec<Matrix<F>>) -> Result<Self> {
        for actions in [&left, &right] {
            if actions.len() != algebra.dim() {
                return Err(Error::DimensionMismatch { expected: algebra.dim(), found: actions.len() });
            }
            for m in actions.iter() {
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
                }
            }
        }
        Ok(Bimodule { algebra, dim, left, right })
    }

    /// Both actions zero.
    pub fn trivial(algebra: &Algebra<F>, dim: usize) -> Self {
        let z = Matrix::zeros(algebra.field(), dim, dim);
        Bimodule { algebra: algebra.clone(), dim, left: vec![z.clone(); algebra.dim()], right: vec![z; algebra.dim()] }
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &Algebra<F>) -> Self {
        let n = a.dim();
        let action = |left: bool| {
            (0..n)
                .map(|i| {
                    let cols: Vec<Vec<F::Elem>> = (0..n)
                        .map(|m| if left { a.basis_product(i, m).to_vec() } else { a.basis_product(m, i).to_vec() })
                        .collect();
                    Matrix::from_columns(a.field(), n, &cols).expect("n columns")
                })
                .collect()
        };
        Bimodule { algebra: a.clone(), dim: n, left: action(true), right: action(false) }
    }

    /// An abelian ideal `B` of `A` as an `A/B`-bimodule: `(x + B)·b = xb`
    /// and `b·(x + B) = bx`, well defined because `B² = 0`. Returns the
    /// quotient, its projection and the bimodule (in `B`'s RREF basis).
    pub fn induced(a: &Algebra<F>, b: &Subspace<F>) -> Result<(Algebra<F>, AlgebraHom<F>, Bimodule<F>)> {
        let (q, proj) = a.quotient(b)?;
        if !a.mul_spaces(b, b).is_zero() {
            return Err(Error::NotAbelianIdeal);
        }
        let reps = b.non_pivots();
        let action = |left: bool| -> Vec<Matrix<F>> {
            reps.iter()
                .map(|&c| {
                    let x = a.unit(c);
                    let cols: Vec<Vec<F::Elem>> = b
                        .basis()
                        .iter()
                        .map(|v| {
                            let p = if left { a.mul_unchecked(&x, v) } else { a.mul_unchecked(v, &x) };
                            b.coordinates(&p).expect("b is an ideal")
                        })
                        .collect();
                    Matrix::from_columns(a.field(), b.dim(), &cols).expect("dim b columns")
                })
                .collect()
        };
        let module = Bimodule { algebra: q.clone(), dim: b.dim(), left: action(true), right: action(false) };
        Ok((q, proj, module))
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left_action(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }
    pub fn right_action(&self, i: usize) -> &Matrix<F> {
        &self.right[i]
    }
}

/// `A ⋉ M` on `A ⊕ M` with `(x + m)(y + n) = xy + (xn + my)`.
pub fn split_null_extension<F: Field>(a: &Algebra<F>, m: &Bimodule<F>) -> Result<Algebra<F>> {
    if !m.algebra.same_table(a) {
        return Err(Error::ParentMismatch);
    }
    let (n, d) = (a.dim(), m.dim);
    let total = n + d;
    let f = a.field();
    let mut products = Vec::new();
    let pad = |v: &[F::Elem], offset: usize| {
        let mut w = vec![f.zero(); total];
        w[offset..offset + v.len()].clone_from_slice(v);
        w
    };
    for i in 0..n {
        for j in 0..n {
            products.push((i, j, pad(a.basis_product(i, j), 0)));
        }
        for k in 0..d {
            products.push((i, n + k, pad(&m.left[i].column(k), n)));
            products.push((n + k, i, pad(&m.right[i].column(k), n)));
        }
    }
    let names = a.names().iter().cloned().chain((1..=d).map(|k| format!("m{k}")));
    Algebra::from_products(f, total, &products)?.with_names(names)
}
