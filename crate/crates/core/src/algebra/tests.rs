use super::*;
use crate::exactfield::{PrimeField, Rationals};

const XYZ: &str = "field GF 2\ndim 3\nbasis x y z\nx*x = z\ny*z = z\nz*x = y\n";

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn xyz() -> Algebra<PrimeField> {
    parse_alg_as(XYZ, &gf(2)).unwrap()
}

fn xyz_over<F: Field>(f: &F) -> Algebra<F> {
    parse_alg_as(&XYZ.replace("GF 2", &f.spec().to_string()), f).unwrap()
}

fn nil2() -> Algebra<PrimeField> {
    Algebra::from_products(&gf(2), 2, &[(0, 0, vec![0, 1])]).unwrap()
}

#[test]
fn products_in_xyz() {
    let a = xyz();
    let (x, y, z) = (a.unit(0), a.unit(1), a.unit(2));
    assert_eq!(a.multiply(&x, &x).unwrap(), z);
    assert_eq!(a.multiply(&z, &x).unwrap(), y);
    assert_eq!(a.multiply(&[0; 3], &y).unwrap(), vec![0; 3]);
    let full = a.full();
    assert_eq!(a.multiply_subspaces(&full, &full).unwrap(), a.span_of_basis(&[1, 2]));
    assert!(a.multiply_subspaces(&full, &a.zero_subspace()).unwrap().is_zero());
}

#[test]
fn ideals_and_subalgebras_of_xyz() {
    let a = xyz();
    let yz = a.span_of_basis(&[1, 2]);
    let z = a.span_of_basis(&[2]);
    assert!(a.is_ideal(&yz).unwrap());
    assert!(a.is_subalgebra(&z).unwrap() && !a.is_ideal(&z).unwrap());
    assert!(a.is_ideal(&a.full()).unwrap());
    let b = Budget::default();
    let proper: Vec<_> =
        a.subalgebras(&b).unwrap().into_iter().filter(|s| !s.is_zero() && !s.is_full()).collect();
    assert_eq!(proper, vec![z.clone(), a.span_of_basis(&[1]), yz.clone()]);
    assert_eq!(a.maximal_subalgebras(&b).unwrap(), vec![yz.clone()]);
    assert_eq!(a.ideals(&b).unwrap(), vec![a.zero_subspace(), yz.clone(), a.full()]);
}

#[test]
fn closure_and_core() {
    let a = xyz();
    assert_eq!(a.ideal_closure(&a.span_of_basis(&[0])).unwrap(), a.full());
    assert_eq!(a.ideal_closure(&a.span_of_basis(&[2])).unwrap(), a.span_of_basis(&[1, 2]));
    let yz = a.span_of_basis(&[1, 2]);
    assert_eq!(a.ideal_closure(&yz).unwrap(), yz);
    assert!(a.core(&a.span_of_basis(&[2])).unwrap().is_zero());
    assert_eq!(a.core(&yz).unwrap(), yz);
    assert_eq!(a.core(&a.full()).unwrap(), a.full());
}

#[test]
fn series_of_xyz_over_every_field() {
    fn check<F: Field>(a: Algebra<F>) {
        let d = a.derived_series();
        assert_eq!(d.dims(), vec![3, 2, 1, 0]);
        assert_eq!(d.terms[1], a.span_of_basis(&[1, 2]));
        assert_eq!(d.terms[2], a.span_of_basis(&[2]));
        assert_eq!(a.solvability_index(), Some(4));
        let p = a.power_series();
        assert_eq!(p.stable_term(), &a.span_of_basis(&[1, 2]));
        assert!(!a.is_nilpotent());
        assert!(!a.is_ideal(&d.terms[2]).unwrap());
    }
    check(xyz());
    check(xyz_over(&gf(3)));
    check(xyz_over(&Rationals));
}

#[test]
fn nilpotency_indices() {
    assert_eq!(Algebra::zero(&gf(2)).nilpotency_index(), Some(1));
    assert_eq!(Algebra::zero(&gf(2)).solvability_index(), Some(1));
    assert_eq!(nil2().nilpotency_index(), Some(3));
    assert_eq!(Algebra::abelian(&gf(3), 2).power_series().dims(), vec![2, 0]);
    let idem = Algebra::from_products(&gf(2), 1, &[(0, 0, vec![1])]).unwrap();
    assert!(!idem.is_solvable());
}

#[test]
fn supersolvability() {
    let b = Budget::default();
    assert!(!xyz().is_supersolvable(&b).unwrap());
    assert!(Algebra::abelian(&gf(2), 3).is_supersolvable(&b).unwrap());
    let idem = Algebra::from_products(&gf(2), 1, &[(0, 0, vec![1])]).unwrap();
    assert!(!idem.is_supersolvable(&b).unwrap());
    assert!(matches!(xyz_over(&Rationals).is_supersolvable(&b), Err(Error::InfiniteField)));
}

#[test]
fn quotients() {
    let a = xyz();
    let (q, p) = a.quotient(&a.span_of_basis(&[1, 2])).unwrap();
    assert_eq!(q.dim(), 1);
    assert!(q.is_abelian());
    assert_eq!(p.kernel(), a.span_of_basis(&[1, 2]));
    let (q0, _) = a.quotient(&a.zero_subspace()).unwrap();
    assert!(q0.same_table(&a));
    assert_eq!(a.quotient(&a.full()).unwrap().0.dim(), 0);
    assert!(matches!(a.quotient(&a.span_of_basis(&[2])), Err(Error::NotAnIdeal)));
}

#[test]
fn direct_sums() {
    let a = xyz();
    let z = Algebra::zero(&gf(2));
    let (s, inj) = Algebra::direct_sum(&[&a, &z]).unwrap();
    assert!(s.same_table(&a));
    assert_eq!(inj.len(), 2);
    let (ee, inj) = Algebra::direct_sum(&[&a, &a]).unwrap();
    assert_eq!(ee.dim(), 6);
    assert_eq!(ee.derived_series().dims(), vec![6, 4, 2, 0]);
    for i in &inj {
        assert!(ee.is_ideal(&i.image()).unwrap());
    }
    assert!(matches!(Algebra::direct_sum(&[&a, &xyz_over(&gf(3))]), Err(Error::FieldMismatch(..))));
}

#[test]
fn frattini_primitive_simple() {
    let b = Budget::default();
    let a = xyz();
    assert_eq!(a.frattini_ideal(&b).unwrap(), a.span_of_basis(&[1, 2]));
    let z = Algebra::zero(&gf(2));
    assert!(z.frattini_subalgebra(&b).unwrap().is_zero());
    let one = Algebra::abelian(&gf(2), 1);
    assert!(one.frattini_ideal(&b).unwrap().is_zero());
    assert!(!a.is_primitive(&b).unwrap());
    assert!(!one.is_simple(&b).unwrap());
    assert!(!Algebra::abelian(&gf(2), 2).is_simple(&b).unwrap());
}

#[test]
fn subideals() {
    let a = xyz();
    let z = a.span_of_basis(&[2]);
    let chain = a.subideal_chain(&z).unwrap().unwrap();
    assert_eq!(chain, vec![z.clone(), a.span_of_basis(&[1, 2]), a.full()]);
    assert!(!a.is_subideal(&a.span_of_basis(&[1])).unwrap());
    let yz = a.span_of_basis(&[1, 2]);
    assert_eq!(a.subideal_chain(&yz).unwrap().unwrap().len(), 2);
    assert!(matches!(a.subideal_chain(&a.span_of_basis(&[0])), Err(Error::NotASubalgebra)));
}

#[test]
fn bimodules_and_extensions() {
    let f = gf(2);
    let a = Algebra::abelian(&f, 2);
    let m = Bimodule::trivial(&a, 1);
    let ext = split_null_extension(&a, &m).unwrap();
    assert!(ext.is_abelian() && ext.dim() == 3);

    let e = xyz();
    let reg = Bimodule::regular(&e);
    assert_eq!(reg.dim(), 3);
    assert_eq!(reg.left_action(0).column(0), e.unit(2));

    // (A ⋉ M)/M has A's table back
    let ext = split_null_extension(&e, &reg).unwrap();
    let m_part = ext.span_of_basis(&[3, 4, 5]);
    assert!(ext.is_ideal(&m_part).unwrap());
    assert!(ext.multiply_subspaces(&m_part, &m_part).unwrap().is_zero());
    assert!(ext.quotient(&m_part).unwrap().0.same_table(&e));

    assert!(matches!(Bimodule::induced(&e, &e.span_of_basis(&[1, 2])), Err(Error::NotAbelianIdeal)));
    let n = nil2();
    let (_, _, ind) = Bimodule::induced(&n, &n.span_of_basis(&[1])).unwrap();
    assert_eq!(ind.left_action(0), &Matrix::zeros(&f, 1, 1));
    assert_eq!(ind.right_action(0), &Matrix::zeros(&f, 1, 1));
}

#[test]
fn idempotent_regular_extension_table() {
    // (e + m)(e + n) = e + (en + me): with e² = e both actions are the identity
    let f = gf(3);
    let idem = Algebra::from_products(&f, 1, &[(0, 0, vec![1])]).unwrap();
    let ext = split_null_extension(&idem, &Bimodule::regular(&idem)).unwrap();
    let want = Algebra::from_products(&f, 2, &[(0, 0, vec![1, 0]), (0, 1, vec![0, 1]), (1, 0, vec![0, 1])]).unwrap();
    assert!(ext.same_table(&want));
}

#[test]
fn pullbacks_and_subdirect() {
    let a = xyz();
    let id = AlgebraHom::identity(&a);
    let pb = pullback(&id, &id).unwrap();
    assert_eq!(pb.algebra.dim(), 3);
    assert!(pb.alpha1.kernel().is_zero());

    let yz = a.span_of_basis(&[1, 2]);
    let (_, p) = a.quotient(&yz).unwrap();
    let pb = pullback(&p, &p).unwrap();
    assert_eq!(pb.algebra.dim(), 5);

    let (_, to_zero) = a.quotient(&a.full()).unwrap();
    assert_eq!(pullback(&to_zero, &to_zero).unwrap().algebra.dim(), 6);
    assert!(matches!(pullback(&id, &p), Err(Error::TargetMismatch)));

    let s = subdirect_embedding(&a, &[a.zero_subspace()]).unwrap();
    assert!(s.kernel.is_zero() && s.is_subdirect);
    let s = subdirect_embedding(&a, &[yz.clone(), yz.clone()]).unwrap();
    assert_eq!(s.kernel, yz);
    assert_eq!(s.hom.image().dim(), 1);
}

#[test]
fn isomorphism_search() {
    let a = xyz();
    assert!(brute_force_isomorphism(&a, &a, 3).unwrap().is_some());
    assert!(brute_force_isomorphism(&Algebra::abelian(&gf(2), 2), &nil2(), 3).unwrap().is_none());
    let p = Matrix::from_rows(&gf(2), 3, vec![vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
    let b = a.transport(&p).unwrap();
    let found = brute_force_isomorphism(&a, &b, 3).unwrap().unwrap();
    AlgebraHom::new(a.clone(), b.clone(), found).unwrap();
    assert!(matches!(brute_force_isomorphism(&a, &a, 2), Err(Error::CapExceeded { .. })));
    assert!(matches!(brute_force_isomorphism(&xyz_over(&Rationals), &xyz_over(&Rationals), 3), Err(Error::InfiniteField)));
    // the automorphisms of E₅ over GF(2)
    assert!(!isomorphisms(&a, &a, 3).unwrap().is_empty());
}

#[test]
fn format_roundtrip_and_errors() {
    let a = xyz();
    assert_eq!(parse_alg_as(&a.to_string(), &gf(2)).unwrap(), a);
    assert_eq!(a.to_string(), XYZ);
    let q = parse_alg("field Q\ndim 2\ne1*e1 = 1/2*e2 + -3*e1\n").unwrap();
    assert_eq!(parse_alg(&q.to_string()).unwrap(), q);
    let dup = "field GF 2\ndim 1\ne1*e1 = e1\ne1*e1 = 0\n";
    assert!(matches!(parse_alg(dup), Err(Error::Parse { line: 4, .. })));
    assert!(matches!(parse_alg("field GF 4\ndim 1\n"), Err(Error::InvalidModulus(4))));
    assert!(parse_alg("field GF 3\ndim 1\ne1*e1 = 1/2*e1\n").is_err());
    let z = parse_alg("field GF 5\ndim 0\n").unwrap();
    assert_eq!(z.dim(), 0);
}
