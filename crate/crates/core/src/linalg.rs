//! Dense exact linear algebra and canonical subspaces.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::exactfield::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix { entries: vec![field.zero(); rows * cols], field: field.clone(), rows, cols }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(Matrix { field: field.clone(), rows: n, cols, entries })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[F::Elem]) -> Result<Vec<F::Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    f.mul_add(&mut acc, a, b);
                }
                acc
            })
            .collect())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    f.mul_add(&mut out.entries[idx], a, other.get(k, j));
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
                r
            })
            .collect();
        let pivots = f.row_reduce(&mut aug, 2 * n);
        if pivots.len() < n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let rows = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Matrix::from_rows(f, n, rows).ok()
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.fmt_elem(x)).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Gauss–Jordan elimination to reduced row-echelon form. Zero rows are
/// dropped; returns the pivot columns.
pub fn gauss_jordan<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        if !field.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = field.neg(&row[c]);
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                field.mul_add(x, &factor, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Row reduction over ℚ that stays in integers until the final
/// normalization: rows are cleared of denominators, Bareiss elimination
/// produces an echelon form, back-substitution runs on primitive integer
/// rows, and only then is each row divided by its pivot.
pub fn fraction_free_rref(rows: &mut Vec<Vec<BigRational>>, cols: usize) -> Vec<usize> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);

    for row in m.iter_mut() {
        make_primitive(row);
    }
    for i in (0..r).rev() {
        let c = pivots[i];
        for k in 0..i {
            if m[k][c].is_zero() {
                continue;
            }
            let a = m[i][c].clone();
            let b = m[k][c].clone();
            let (lower, upper) = m.split_at_mut(i);
            let row_i = &upper[0];
            for (x, y) in lower[k].iter_mut().zip(row_i) {
                *x = &*x * &a - &b * y;
            }
            make_primitive(&mut lower[k]);
        }
    }

    *rows = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let lead = row[c].clone();
            row.into_iter().map(|x| BigRational::new(x, lead.clone())).collect()
        })
        .collect();
    pivots
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some(lead) = row.iter().find(|x| !x.is_zero()) {
        if lead.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// Reduced row-echelon form and rank. Zero rows of the result are kept so
/// the shape matches the input.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize) {
    let f = m.field();
    let mut rows = m.row_vecs();
    let pivots = f.row_reduce(&mut rows, m.cols());
    let rank = pivots.len();
    rows.resize(m.rows(), vec![f.zero(); m.cols()]);
    (Matrix::from_rows(f, m.cols(), rows).expect("row lengths preserved"), rank)
}

/// Subspace of Fⁿ stored by its reduced row-echelon basis, so equal
/// subspaces have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    field: F,
    ambient_dim: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient_dim: usize) -> Self {
        Subspace { field: field.clone(), ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &F, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(field, ambient_dim, i)).collect();
        Subspace { field: field.clone(), ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }
    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(&self.field, self.ambient_dim, self.basis.clone()).expect("rows have ambient length")
    }

    /// Coordinates outside the pivot columns, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_len(&self, v: &[F::Elem]) -> Result<()> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }

    fn check_same(&self, other: &Subspace<F>) -> Result<()> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }

    /// `v` minus its component along the basis; zero exactly when `v` lies
    /// in the subspace. Linear in `v`, and zero on every pivot column.
    pub fn residual(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if f.is_zero(&out[p]) {
                continue;
            }
            let factor = f.neg(&out[p]);
            for (x, b) in out.iter_mut().zip(row) {
                f.mul_add(x, &factor, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &[F::Elem]) -> bool {
        self.residual(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> Result<bool> {
        self.check_same(other)?;
        Ok(other.dim() <= self.dim() && other.basis.iter().all(|v| self.contains_unchecked(v)))
    }

    /// Coordinates of `v` in the stored basis, if `v` is in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if v.len() != self.ambient_dim || !self.contains_unchecked(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the stored basis.
    pub fn combine(&self, coords: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.ambient_dim];
        for (c, row) in coords.iter().zip(&self.basis) {
            if f.is_zero(c) {
                continue;
            }
            for (x, b) in out.iter_mut().zip(row) {
                f.mul_add(x, c, b);
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_same(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &Subspace<F>) -> Subspace<F> {
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let rows = self.basis.iter().chain(&other.basis).cloned().collect();
        span_rows(&self.field, self.ambient_dim, rows)
    }

    /// Zassenhaus: reduce `[u | u]` and `[v | 0]`; rows with vanishing left
    /// half carry the intersection on the right.
    pub fn intersection(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_same(other)?;
        Ok(self.intersection_unchecked(other))
    }

    pub(crate) fn intersection_unchecked(&self, other: &Subspace<F>) -> Subspace<F> {
        let f = &self.field;
        let n = self.ambient_dim;
        if self.is_zero() || other.is_full() {
            return self.clone();
        }
        if other.is_zero() || self.is_full() {
            return other.clone();
        }
        let mut rows: Vec<Vec<F::Elem>> = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(f.zero(), n));
            rows.push(r);
        }
        let pivots = f.row_reduce(&mut rows, 2 * n);
        let inter = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        span_rows(f, n, inter)
    }

    /// Image of the subspace under a linear map given as a matrix.
    pub fn image_under(&self, m: &Matrix<F>) -> Result<Subspace<F>> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: m.cols() });
        }
        let imgs = self.basis.iter().map(|v| m.apply(v)).collect::<Result<Vec<_>>>()?;
        Ok(span_rows(&self.field, m.rows(), imgs))
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self.basis.iter().map(|v| format_vector(&self.field, v, names)).collect();
        format!("span{{{}}}", parts.join(", "))
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by dimension, then lexicographically by basis rows.
impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim
            .cmp(&other.ambient_dim)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.cmp(&other.basis))
    }
}

pub fn unit_vector<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

pub fn is_zero_vector<F: Field>(field: &F, v: &[F::Elem]) -> bool {
    v.iter().all(|x| field.is_zero(x))
}

/// Renders `v` as a linear combination of basis names.
pub fn format_vector<F: Field>(field: &F, v: &[F::Elem], names: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        let name = names.get(i).cloned().unwrap_or_else(|| format!("e{}", i + 1));
        if field.is_one(x) {
            terms.push(name);
        } else {
            terms.push(format!("{}*{}", field.fmt_elem(x), name));
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn span_rows<F: Field>(field: &F, ambient_dim: usize, mut rows: Vec<Vec<F::Elem>>) -> Subspace<F> {
    let pivots = field.row_reduce(&mut rows, ambient_dim);
    Subspace { field: field.clone(), ambient_dim, basis: rows, pivots }
}

/// Smallest subspace containing the vectors.
pub fn span<F: Field>(field: &F, vectors: &[Vec<F::Elem>], ambient_dim: usize) -> Result<Subspace<F>> {
    for v in vectors {
        if v.len() != ambient_dim {
            return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
        }
    }
    Ok(span_rows(field, ambient_dim, vectors.to_vec()))
}

pub(crate) fn span_owned<F: Field>(field: &F, vectors: Vec<Vec<F::Elem>>, ambient_dim: usize) -> Subspace<F> {
    span_rows(field, ambient_dim, vectors)
}

/// Null space `{x : m x = 0}`.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let f = m.field();
    let mut rows = m.row_vecs();
    let pivots = f.row_reduce(&mut rows, m.cols());
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let vectors = free
        .iter()
        .map(|&j| {
            let mut v = unit_vector(f, m.cols(), j);
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = f.neg(&row[j]);
            }
            v
        })
        .collect();
    span_rows(f, m.cols(), vectors)
}

/// Every subspace of GF(q)ⁿ (or those of dimension `dim_filter`), in the
/// canonical order of [`Subspace`]. RREF bases are generated directly from
/// pivot patterns, so no span is ever deduplicated.
pub fn enumerate_subspaces<F: Field>(
    field: &F,
    ambient_dim: usize,
    dim_filter: Option<usize>,
    budget: &Budget,
) -> Result<Vec<Subspace<F>>> {
    let elems = field.elements()?;
    budget.check_enumeration(ambient_dim, elems.len() as u64)?;
    let mut out = Vec::new();
    let dims: Vec<usize> = match dim_filter {
        Some(k) if k > ambient_dim => return Ok(out),
        Some(k) => vec![k],
        None => (0..=ambient_dim).collect(),
    };
    for k in dims {
        let mut pivots = Vec::with_capacity(k);
        pivot_patterns(ambient_dim, k, 0, &mut pivots, &mut |pivots| {
            fill_free_entries(field, &elems, ambient_dim, pivots, &mut out);
        });
    }
    out.sort();
    Ok(out)
}

fn pivot_patterns(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    let remaining = k - acc.len();
    for c in start..=n - remaining {
        acc.push(c);
        pivot_patterns(n, k, c + 1, acc, visit);
        acc.pop();
    }
}

fn fill_free_entries<F: Field>(
    field: &F,
    elems: &[F::Elem],
    n: usize,
    pivots: &[usize],
    out: &mut Vec<Subspace<F>>,
) {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| (p + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
        .collect();
    let mut template: Vec<Vec<F::Elem>> = pivots.iter().map(|&p| unit_vector(field, n, p)).collect();
    let q = elems.len();
    let mut counter = vec![0usize; free.len()];
    loop {
        for (slot, &(r, c)) in free.iter().enumerate() {
            template[r][c] = elems[counter[slot]].clone();
        }
        out.push(Subspace { field: field.clone(), ambient_dim: n, basis: template.clone(), pivots: pivots.to_vec() });
        let mut i = 0;
        loop {
            if i == free.len() {
                return;
            }
            counter[i] += 1;
            if counter[i] < q {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{PrimeField, Rationals};

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn qv(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn rref_examples() {
        let f = Rationals;
        let id = Matrix::identity(&f, 3);
        assert_eq!(rref(&id), (id.clone(), 3));
        let z = Matrix::zeros(&f, 2, 4);
        assert_eq!(rref(&z), (z.clone(), 0));
        let m = Matrix::from_rows(&f, 2, vec![qv(&[1, 2]), qv(&[2, 4])]).unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r.row(0), qv(&[1, 2]).as_slice());
    }

    #[test]
    fn fraction_free_matches_gauss_jordan() {
        let f = Rationals;
        let rows = vec![qv(&[2, 4, 6, 1]), qv(&[1, 1, 1, 0]), qv(&[3, 5, 7, 1]), qv(&[0, -3, 5, 9])];
        let mut a = rows.clone();
        let mut b = rows;
        let pa = fraction_free_rref(&mut a, 4);
        let pb = gauss_jordan(&f, &mut b, 4);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
    }

    #[test]
    fn span_examples() {
        let f = Rationals;
        assert!(span(&f, &[], 3).unwrap().is_zero());
        let s = span(&f, &[qv(&[1, 0, 0]), qv(&[1, 1, 0])], 3).unwrap();
        assert_eq!(s.basis(), &[qv(&[1, 0, 0]), qv(&[0, 1, 0])]);
        let s = span(&f, &[qv(&[2, 4])], 2).unwrap();
        assert_eq!(s.basis(), &[qv(&[1, 2])]);
        assert!(matches!(span(&f, &[qv(&[1, 2])], 3), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn sum_and_intersection() {
        let f = Rationals;
        let xy = span(&f, &[qv(&[1, 0, 0]), qv(&[0, 1, 0])], 3).unwrap();
        let yz = span(&f, &[qv(&[0, 1, 0]), qv(&[0, 0, 1])], 3).unwrap();
        assert_eq!(xy.intersection(&yz).unwrap(), span(&f, &[qv(&[0, 1, 0])], 3).unwrap());
        assert!(xy.sum(&yz).unwrap().is_full());
        let zero = Subspace::zero(&f, 3);
        let full = Subspace::full(&f, 3);
        assert_eq!(xy.sum(&zero).unwrap(), xy);
        assert_eq!(xy.intersection(&full).unwrap(), xy);
        assert!(xy.sum(&Subspace::zero(&f, 2)).is_err());
    }

    #[test]
    fn kernel_examples() {
        let f = Rationals;
        assert!(kernel(&Matrix::identity(&f, 3)).is_zero());
        assert!(kernel(&Matrix::zeros(&f, 3, 3)).is_full());
        let g = gf(2);
        let k = kernel(&Matrix::from_rows(&g, 2, vec![vec![1, 1]]).unwrap());
        assert_eq!(k.basis(), &[vec![1, 1]]);
    }

    #[test]
    fn containment() {
        let f = Rationals;
        let x = span(&f, &[qv(&[1, 0, 0])], 3).unwrap();
        assert!(x.contains(&qv(&[0, 0, 0])).unwrap());
        assert!(!x.contains(&qv(&[0, 1, 0])).unwrap());
        assert!(x.contains_subspace(&x).unwrap());
        assert!(x.contains(&qv(&[1, 0])).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let b = Budget::default();
        let g2 = gf(2);
        let all = enumerate_subspaces(&g2, 2, None, &b).unwrap();
        assert_eq!(all.len(), 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for q in [2, 3, 5] {
            assert_eq!(enumerate_subspaces(&gf(q), 1, None, &b).unwrap().len(), 2);
        }
        assert_eq!(enumerate_subspaces(&g2, 3, Some(1), &b).unwrap().len(), 7);
        assert!(matches!(enumerate_subspaces(&Rationals, 2, None, &b), Err(Error::InfiniteField)));
        assert!(matches!(enumerate_subspaces(&g2, 17, None, &b), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn inverse_roundtrip() {
        let g = gf(3);
        let m = Matrix::from_rows(&g, 2, vec![vec![1, 2], vec![0, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&g, 2));
        assert!(Matrix::from_rows(&g, 2, vec![vec![1, 2], vec![2, 1]]).unwrap().inverse().is_none());
    }
}
