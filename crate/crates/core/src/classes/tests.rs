use super::*;
use crate::corpus::xyz_algebra;
use crate::exactfield::PrimeField;

fn gf2() -> PrimeField {
    PrimeField::new(2).unwrap()
}

fn b() -> Budget {
    Budget::default()
}

#[test]
fn parses_and_prints_expressions() {
    for text in ["abelian", "nilpotent3", "EPhi(nilpotent)", "prod(abelian,Q(solvable))", "pow(nilpotent,2)", "members(1,4)", "members()"] {
        let e = ClassExpr::parse(text).unwrap();
        assert_eq!(e.to_string(), text);
    }
    assert_eq!(ClassExpr::parse("R(N(all))").unwrap().to_string(), "R0(N0(all))");
    assert_eq!(ClassExpr::parse("nilpotent<2>").unwrap(), ClassExpr::Pred(ClassPredicate::NilpotentC(2)));
    assert!(ClassExpr::parse("Z(abelian)").is_err());
    assert!(ClassExpr::parse("S(abelian").is_err());
    assert!(ClassExpr::parse("abelian x").is_err());
}

#[test]
fn frattini_extension_of_nilpotent_contains_xyz() {
    let a = xyz_algebra(&gf2());
    let m = member(&ClassExpr::parse("EPhi(nilpotent)").unwrap(), &a, None, &b()).unwrap();
    assert!(m.holds);
    assert_eq!(m.witness, Some(Witness::FrattiniIdeal(a.span_of_basis(&[1, 2]))));
    assert!(!member(&ClassExpr::parse("nilpotent").unwrap(), &a, None, &b()).unwrap().holds);
}

#[test]
fn extrinsic_operators_need_a_universe() {
    let a = xyz_algebra(&gf2());
    let e = ClassExpr::parse("S(abelian)").unwrap();
    assert!(matches!(member(&e, &a, None, &b()), Err(Error::UniverseRequired("S"))));
}

#[test]
fn metabelian_matches_closed_form() {
    let u = Universe::exhaustive(&gf2(), 2, &b()).unwrap();
    let ev = Evaluator::new(&ClassExpr::parse("prod(abelian,abelian)").unwrap(), &gf2(), Some(&u), &b()).unwrap();
    for (id, a) in u.members().iter().enumerate() {
        let sq = a.mul_spaces(&a.full(), &a.full());
        assert_eq!(ev.holds_member(id).unwrap(), a.mul_spaces(&sq, &sq).is_zero());
    }
}

#[test]
fn residuals_of_xyz() {
    let a = xyz_algebra(&gf2());
    let yz = a.span_of_basis(&[1, 2]);
    assert_eq!(residual(&ClassPredicate::Nilpotent, &a, &b()).unwrap().ideal, yz);
    assert_eq!(residual_generic(&ClassPredicate::Nilpotent, &a, &b()).unwrap(), yz);
    assert!(residual(&ClassPredicate::All, &a, &b()).unwrap().ideal.is_zero());
    let (_, proj) = a.quotient(&yz).unwrap();
    assert!(residual_epimorphism_check(&ClassPredicate::Nilpotent, &proj, &b()).unwrap().holds);
}

#[test]
fn xyz_has_no_nilpotent_projectors() {
    let a = xyz_algebra(&gf2());
    assert!(projectors(&ClassPredicate::Nilpotent, &a, &b()).unwrap().projectors.is_empty());
    let v = is_projector(&ClassPredicate::Nilpotent, &a.span_of_basis(&[1]), &a, &b()).unwrap();
    assert!(!v.holds);
    assert_eq!(v.obstruction, Some((a.full(), a.span_of_basis(&[1, 2]))));
    assert_eq!(projectors(&ClassPredicate::Solvable, &a, &b()).unwrap().projectors, vec![a.full()]);
}

#[test]
fn complements_and_splitting() {
    let a = xyz_algebra(&gf2());
    assert_eq!(complements_of_ideal(&a, &a.zero_subspace(), &b()).unwrap(), vec![a.full()]);
    assert_eq!(complements_of_ideal(&a, &a.full(), &b()).unwrap(), vec![a.zero_subspace()]);
    assert!(complements_of_ideal(&a, &a.span_of_basis(&[1, 2]), &b()).unwrap().is_empty());
    assert!(is_split_on(&ClassPredicate::Solvable, &a, &b()).unwrap().holds());
}

#[test]
fn xc_membership_on_xyz() {
    let a = xyz_algebra(&gf2());
    assert!(xc_membership(&ClassPredicate::Solvable, Operator::S, &a, &b()).unwrap());
    assert!(!xc_membership(&ClassPredicate::Nilpotent, Operator::Q, &a, &b()).unwrap());
    assert!(xc_membership(&ClassPredicate::All, Operator::Sn, &a, &b()).unwrap());
}

#[test]
fn quotient_closure_of_xyz() {
    let f = gf2();
    let a = xyz_algebra(&f);
    let u = Universe::exhaustive(&f, 2, &b()).unwrap().with_extras([a.clone()]).unwrap();
    let got = class_closure_fixpoint(std::slice::from_ref(&a), &[Operator::Q], &u).unwrap();
    let expected: BTreeSet<usize> = [&a, &a.quotient_algebra(&a.span_of_basis(&[1, 2])), &Algebra::zero(&f)]
        .iter()
        .map(|x| u.identify(x).unwrap().unwrap())
        .collect();
    assert_eq!(got, expected);
    let zero = class_closure_fixpoint(&[Algebra::zero(&f)], &[Operator::Q], &u).unwrap();
    assert_eq!(zero.len(), 1);
}

#[test]
fn closedness_examples() {
    let u = Universe::exhaustive(&gf2(), 2, &b()).unwrap();
    for (class, op) in [("solvable", Operator::S), ("nilpotent1", Operator::D0), ("supersolvable", Operator::Q)] {
        let r = closedness_check(&ClassExpr::parse(class).unwrap(), op, &u).unwrap();
        assert!(r.closed(), "{class} {op}: {:?}", r.counterexamples);
    }
}

#[test]
fn identical_sequences_compare_equal() {
    let u = Universe::exhaustive(&gf2(), 2, &b()).unwrap();
    let c = compare_operator_images(&[Operator::Q], &[Operator::Q], &ClassExpr::members([3]), &u).unwrap();
    assert_eq!(c.relation, Relation::Equal);
}
