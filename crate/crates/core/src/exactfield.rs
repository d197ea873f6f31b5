//! Exact scalars: the rationals and the prime fields GF(p).
//!
//! Two layers live here. [`FieldSpec`] and [`Scalar`] are self-describing
//! values used at the edges (file formats, the CLI, checked arithmetic).
//! The [`Field`] trait is what the linear algebra and algebra code is
//! generic over; its elements carry no field tag, so arithmetic on them is
//! as cheap as the representation allows.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Which field a computation happens over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// GF(p), validated by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 2 || p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p as u64),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element that knows which field it belongs to.
///
/// Rationals are kept in lowest terms with a positive denominator
/// (`BigRational` normalizes on construction); residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Neg,
    Mul,
    Inv,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn zero(field: FieldSpec) -> Scalar {
        Scalar::from_i64(0, field)
    }

    pub fn from_i64(n: i64, field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    /// Re-normalizes the representation. Values built through this module are
    /// already canonical, so this is the identity on them.
    pub fn reduced(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(BigRational::new(r.numer().clone(), r.denom().clone())),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }

    fn check_same(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().to_string(), other.field().to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: PrimeField { p: *modulus }.add(a, b),
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: PrimeField { p: *modulus }.neg(value),
                modulus: *modulus,
            },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check_same(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: PrimeField { p: *modulus }.mul(a, b),
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: PrimeField { p: *modulus }.inv(value).ok_or(Error::DivisionByZero)?,
                modulus: *modulus,
            },
        })
    }

    /// Parses an integer literal, or `a/b` over ℚ. Over GF(p) only integers
    /// are accepted and they are reduced mod p.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar, String> {
        let text = text.trim();
        match field {
            FieldSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| format!("bad integer `{num}`"))?;
                let den: BigInt = den.parse().map_err(|_| format!("bad integer `{den}`"))?;
                if den.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                if text.contains('/') {
                    return Err(format!("fractions are not allowed over GF {p}"));
                }
                let n: BigInt = text.parse().map_err(|_| format!("bad integer `{text}`"))?;
                let r = ((n % p) + p) % p;
                let value = u32::try_from(&r).expect("residue fits in u32");
                Ok(Scalar::Residue { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Scalar::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Checked arithmetic entry point; `b` is required for the binary operations.
pub fn scalar_arith(op: ScalarOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
    let rhs = || b.ok_or_else(|| Error::InvariantViolation(format!("{op:?} needs two operands")));
    match op {
        ScalarOp::Add => a.add(rhs()?),
        ScalarOp::Mul => a.mul(rhs()?),
        ScalarOp::Neg => Ok(a.neg()),
        ScalarOp::Inv => a.inv(),
    }
}

/// All elements of a prime field in the order 0, 1, …, p−1.
pub fn enumerate_scalars(field: FieldSpec) -> Result<Vec<Scalar>> {
    match field {
        FieldSpec::Rationals => Err(Error::InfiniteField),
        FieldSpec::Prime(p) => Ok((0..p).map(|value| Scalar::Residue { value, modulus: p }).collect()),
    }
}

/// Arithmetic backend the linear algebra is generic over.
pub trait Field: Clone + fmt::Debug + Eq + Hash + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Ord + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn to_scalar(&self, a: &Self::Elem) -> Scalar;
    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem>;

    /// Every element, smallest first. Fails over infinite fields.
    fn elements(&self) -> Result<Vec<Self::Elem>>;

    /// Brings `rows` (each of length `cols`) to reduced row-echelon form,
    /// dropping zero rows, and returns the pivot columns.
    fn row_reduce(&self, rows: &mut Vec<Vec<Self::Elem>>, cols: usize) -> Vec<usize> {
        crate::linalg::gauss_jordan(self, rows, cols)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    /// `acc += a * b`
    fn mul_add(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn order(&self) -> Option<u64> {
        self.spec().order()
    }

    fn fmt_elem(&self, a: &Self::Elem) -> String {
        self.to_scalar(a).to_string()
    }
}

/// GF(p) with residues stored as `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match FieldSpec::prime(p)? {
            FieldSpec::Prime(p) => Ok(PrimeField { p }),
            FieldSpec::Rationals => unreachable!(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn mul_add(&self, acc: &mut u32, a: &u32, b: &u32) {
        if *a != 0 && *b != 0 {
            *acc = ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32;
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a as u64, self.p as u64 - 2, 1u64);
        let m = self.p as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        Some(acc as u32)
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    fn to_scalar(&self, a: &u32) -> Scalar {
        Scalar::Residue { value: *a, modulus: self.p }
    }
    fn from_scalar(&self, s: &Scalar) -> Result<u32> {
        match s {
            Scalar::Residue { value, modulus } if *modulus == self.p => Ok(*value),
            _ => Err(Error::FieldMismatch(s.field().to_string(), self.spec().to_string())),
        }
    }
    fn elements(&self) -> Result<Vec<u32>> {
        Ok((0..self.p).collect())
    }
}

/// ℚ with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn to_scalar(&self, a: &BigRational) -> Scalar {
        Scalar::Rational(a.clone())
    }
    fn from_scalar(&self, s: &Scalar) -> Result<BigRational> {
        match s {
            Scalar::Rational(r) => Ok(r.clone()),
            _ => Err(Error::FieldMismatch(s.field().to_string(), "Q".into())),
        }
    }
    fn elements(&self) -> Result<Vec<BigRational>> {
        Err(Error::InfiniteField)
    }
    fn row_reduce(&self, rows: &mut Vec<Vec<BigRational>>, cols: usize) -> Vec<usize> {
        crate::linalg::fraction_free_rref(rows, cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rational(BigRational::new(n.into(), d.into()))
    }

    fn gf(v: i64, p: u32) -> Scalar {
        Scalar::from_i64(v, FieldSpec::Prime(p))
    }

    #[test]
    fn rational_and_modular_examples() {
        assert_eq!(scalar_arith(ScalarOp::Add, &q(1, 2), Some(&q(1, 3))).unwrap(), q(5, 6));
        assert_eq!(scalar_arith(ScalarOp::Mul, &gf(3, 5), Some(&gf(4, 5))).unwrap(), gf(2, 5));
        assert!(matches!(scalar_arith(ScalarOp::Inv, &gf(0, 7), None), Err(Error::DivisionByZero)));
        assert!(matches!(q(0, 1).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        assert!(matches!(gf(1, 3).add(&gf(1, 5)), Err(Error::FieldMismatch(..))));
        assert!(matches!(gf(1, 3).mul(&q(1, 2)), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn enumeration() {
        let two = enumerate_scalars(FieldSpec::prime(2).unwrap()).unwrap();
        assert_eq!(two, vec![gf(0, 2), gf(1, 2)]);
        let five: Vec<String> = enumerate_scalars(FieldSpec::Prime(5)).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(five, ["0", "1", "2", "3", "4"]);
        assert!(matches!(enumerate_scalars(FieldSpec::Rationals), Err(Error::InfiniteField)));
    }

    #[test]
    fn modulus_validation() {
        assert!(FieldSpec::prime(7).is_ok());
        for bad in [0, 1, 4, 9, 15] {
            assert!(matches!(FieldSpec::prime(bad), Err(Error::InvalidModulus(_))));
        }
    }

    #[test]
    fn field_axioms_exhaustively_on_small_primes() {
        for p in [2u32, 3, 5] {
            let f = FieldSpec::Prime(p);
            let xs = enumerate_scalars(f).unwrap();
            let zero = Scalar::zero(f);
            let one = Scalar::from_i64(1, f);
            for a in &xs {
                assert_eq!(a.add(&a.neg()).unwrap(), zero);
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), one);
                }
                for b in &xs {
                    assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &xs {
                        assert_eq!(a.add(b).unwrap().add(c).unwrap(), a.add(&b.add(c).unwrap()).unwrap());
                        assert_eq!(a.mul(b).unwrap().mul(c).unwrap(), a.mul(&b.mul(c).unwrap()).unwrap());
                        assert_eq!(
                            a.mul(&b.add(c).unwrap()).unwrap(),
                            a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(Scalar::parse("-6/4", FieldSpec::Rationals).unwrap(), q(-3, 2));
        assert_eq!(Scalar::parse("-1", FieldSpec::Prime(3)).unwrap(), gf(2, 3));
        assert_eq!(Scalar::parse("7", FieldSpec::Prime(5)).unwrap(), gf(2, 5));
        assert!(Scalar::parse("1/2", FieldSpec::Prime(5)).is_err());
        assert!(Scalar::parse("1/0", FieldSpec::Rationals).is_err());
        assert_eq!(q(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn reduction_is_idempotent() {
        for s in [q(6, -4), q(0, 5), gf(4, 5)] {
            let r = s.reduced();
            assert_eq!(r.reduced(), r);
            assert_eq!(r, s);
        }
        if let Scalar::Rational(r) = q(6, -4) {
            assert!(r.denom().is_positive());
        }
    }
}
