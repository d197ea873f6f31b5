use nonassoc::algebra::{parse_alg_as, Algebra};
use nonassoc::budget::Budget;
use nonassoc::exactfield::{scalar_arith, Field, FieldSpec, PrimeField, Scalar, ScalarOp};
use nonassoc::linalg::{enumerate_subspaces, span, Subspace};
use proptest::prelude::*;

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn subspace(p: u64, n: usize, rows: Vec<Vec<u32>>) -> Subspace<PrimeField> {
    let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % p as u32).collect()).collect();
    span(&gf(p), &rows, n).unwrap()
}

fn vectors(p: u32, n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(prop::collection::vec(0..p, n), 0..=n)
}

/// Number of k-dimensional subspaces of GF(q)^n from the product formula.
fn gaussian_binomial(q: u64, n: u32, k: u32) -> u64 {
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

#[test]
fn subspace_counts_match_gaussian_binomials() {
    let budget = Budget::default();
    for (q, n) in [(2, 4), (3, 3), (5, 2), (2, 5)] {
        for k in 0..=n {
            let found = enumerate_subspaces(&gf(q), n, Some(k), &budget).unwrap().len() as u64;
            assert_eq!(found, gaussian_binomial(q, n as u32, k as u32), "GF({q})^{n}, k = {k}");
        }
    }
}

fn algebra(p: u64, n: usize) -> impl Strategy<Value = Algebra<PrimeField>> {
    prop::collection::vec(0..p as u32, n * n * n).prop_map(move |c| Algebra::new(&gf(p), n, c).unwrap())
}

proptest! {
    #[test]
    fn modular_law_gf3(u in vectors(3, 4), v in vectors(3, 4), w in vectors(3, 4)) {
        let (u, v, w) = (subspace(3, 4, u), subspace(3, 4, v), subspace(3, 4, w));
        // U ⊆ W' with W' = U + W
        let w = u.sum(&w).unwrap();
        let left = u.sum(&v.intersection(&w).unwrap()).unwrap();
        let right = u.sum(&v).unwrap().intersection(&w).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn lattice_absorption_gf2(u in vectors(2, 3), v in vectors(2, 3)) {
        let (u, v) = (subspace(2, 3, u), subspace(2, 3, v));
        prop_assert_eq!(&u.sum(&u.intersection(&v).unwrap()).unwrap(), &u);
        prop_assert_eq!(&u.intersection(&u.sum(&v).unwrap()).unwrap(), &u);
        prop_assert_eq!(u.sum(&v).unwrap().dim() + u.intersection(&v).unwrap().dim(), u.dim() + v.dim());
    }

    #[test]
    fn prime_field_axioms(a in 0i64..1000, b in 0i64..1000, c in 0i64..1000, p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let f = FieldSpec::prime(p).unwrap();
        let (a, b, c) = (Scalar::from_i64(a, f), Scalar::from_i64(b, f), Scalar::from_i64(c, f));
        let add = |x: &Scalar, y: &Scalar| scalar_arith(ScalarOp::Add, x, Some(y)).unwrap();
        let mul = |x: &Scalar, y: &Scalar| scalar_arith(ScalarOp::Mul, x, Some(y)).unwrap();
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(add(&a, &a.neg()), Scalar::zero(f));
        if !a.is_zero() {
            prop_assert_eq!(mul(&a, &a.inv().unwrap()), Scalar::from_i64(1, f));
        }
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let q = FieldSpec::Rationals;
        let x = Scalar::parse(&format!("{a}/{b}"), q).unwrap();
        let y = Scalar::parse(&format!("{c}/{d}"), q).unwrap();
        let sum = scalar_arith(ScalarOp::Add, &x, Some(&y)).unwrap();
        prop_assert_eq!(sum, Scalar::parse(&format!("{}/{}", a * d + c * b, b * d), q).unwrap());
        if !y.is_zero() {
            let quotient = scalar_arith(ScalarOp::Mul, &x, Some(&y.inv().unwrap())).unwrap();
            prop_assert_eq!(scalar_arith(ScalarOp::Mul, &quotient, Some(&y)).unwrap(), x);
        }
    }

    #[test]
    fn series_terms_descend_and_powers_are_ideals(a in algebra(3, 3)) {
        for s in [a.power_series(), a.derived_series()] {
            for pair in s.terms.windows(2) {
                prop_assert!(pair[0].contains_subspace(&pair[1]).unwrap());
            }
        }
        for t in a.power_series().terms {
            prop_assert!(a.is_ideal(&t).unwrap());
        }
        // A² is an ideal; deeper derived terms need not be
        prop_assert!(a.derived_series().terms.iter().take(2).all(|t| a.is_ideal(t).unwrap()));
    }

    #[test]
    fn quotient_and_format_roundtrip(a in algebra(2, 3)) {
        let text = a.to_string();
        prop_assert_eq!(&parse_alg_as(&text, &gf(2)).unwrap(), &a);
        let square = a.multiply_subspaces(&a.full(), &a.full()).unwrap();
        let (q, pi) = a.quotient(&square).unwrap();
        prop_assert!(q.is_abelian());
        prop_assert_eq!(pi.kernel(), square);
        prop_assert_eq!(q.dim() + pi.kernel().dim(), a.dim());
    }

    #[test]
    fn frattini_ideal_is_an_ideal_inside_every_maximal_subalgebra(a in algebra(2, 3)) {
        let b = Budget::default();
        let phi = a.frattini_ideal(&b).unwrap();
        prop_assert!(a.is_ideal(&phi).unwrap());
        for m in a.maximal_subalgebras(&b).unwrap() {
            prop_assert!(m.contains_subspace(&phi).unwrap());
        }
        prop_assert!(a.frattini_subalgebra(&b).unwrap().contains_subspace(&phi).unwrap());
    }
}

#[test]
fn field_elements_are_listed_smallest_first() {
    assert_eq!(gf(5).elements().unwrap(), vec![0, 1, 2, 3, 4]);
}
