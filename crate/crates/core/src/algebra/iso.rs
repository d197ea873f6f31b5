use super::Algebra;
use crate::error::{Error, Result};
use crate::exactfield::Field;
use crate::linalg::{Matrix, Subspace};

/// Some invertible `P` with `P(xy) = (Px)(Py)`, found by exhaustive search
/// over GL(n, q); `None` if the algebras are not isomorphic.
pub fn brute_force_isomorphism<F: Field>(a: &Algebra<F>, b: &Algebra<F>, cap: usize) -> Result<Option<Matrix<F>>> {
    let mut found = None;
    search(a, b, cap, &mut |m| {
        found = Some(m);
        false
    })?;
    Ok(found)
}

/// Every isomorphism `A → B`.
pub fn isomorphisms<F: Field>(a: &Algebra<F>, b: &Algebra<F>, cap: usize) -> Result<Vec<Matrix<F>>> {
    let mut all = Vec::new();
    search(a, b, cap, &mut |m| {
        all.push(m);
        true
    })?;
    Ok(all)
}

/// Chooses the images of `e₀, e₁, …` in turn. A basis pair `(i, j)` is
/// checked as soon as the images of `eᵢ`, `eⱼ` and of every basis vector in
/// the support of `eᵢeⱼ` are fixed.
fn search<F: Field>(
    a: &Algebra<F>,
    b: &Algebra<F>,
    cap: usize,
    visit: &mut dyn FnMut(Matrix<F>) -> bool,
) -> Result<()> {
    let f = a.field();
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field().spec().to_string(), b.field().spec().to_string()));
    }
    let elems = f.elements()?;
    let n = a.dim();
    if n > cap {
        return Err(Error::CapExceeded { cap, dim: n });
    }
    if b.dim() != n {
        return Ok(());
    }
    let mut ready: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let support = a.basis_product(i, j).iter().rposition(|x| !f.is_zero(x)).unwrap_or(0);
            ready[i.max(j).max(support)].push((i, j));
        }
    }
    let vectors = all_vectors(&elems, n);
    let mut images: Vec<Vec<F::Elem>> = Vec::with_capacity(n);
    let mut spans = vec![Subspace::zero(f, n)];
    extend(a, b, &vectors, &ready, &mut images, &mut spans, visit);
    Ok(())
}

fn extend<F: Field>(
    a: &Algebra<F>,
    b: &Algebra<F>,
    vectors: &[Vec<F::Elem>],
    ready: &[Vec<(usize, usize)>],
    images: &mut Vec<Vec<F::Elem>>,
    spans: &mut Vec<Subspace<F>>,
    visit: &mut dyn FnMut(Matrix<F>) -> bool,
) -> bool {
    let f = a.field();
    let n = a.dim();
    let step = images.len();
    if step == n {
        let m = Matrix::from_columns(f, n, images).expect("n columns of length n");
        return visit(m);
    }
    for v in vectors {
        let span = spans.last().unwrap();
        if span.contains_unchecked(v) {
            continue;
        }
        images.push(v.clone());
        let ok = ready[step].iter().all(|&(i, j)| {
            let mut lhs = vec![f.zero(); n];
            for (k, c) in a.basis_product(i, j).iter().enumerate() {
                if !f.is_zero(c) {
                    for (o, x) in lhs.iter_mut().zip(&images[k]) {
                        f.mul_add(o, c, x);
                    }
                }
            }
            lhs == b.mul_unchecked(&images[i], &images[j])
        });
        if ok {
            let next = span.sum_unchecked(&crate::linalg::span_owned(f, vec![v.clone()], n));
            spans.push(next);
            let keep_going = extend(a, b, vectors, ready, images, spans, visit);
            spans.pop();
            if !keep_going {
                images.pop();
                return false;
            }
        }
        images.pop();
    }
    true
}

fn all_vectors<E: Clone>(elems: &[E], n: usize) -> Vec<Vec<E>> {
    let mut out: Vec<Vec<E>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}
