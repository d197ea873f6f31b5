use std::collections::BTreeSet;

use nonassoc::algebra::parse_alg_as;
use nonassoc::budget::Budget;
use nonassoc::classes::{
    class_closure_fixpoint, closedness_check, member, residual, saturation_check, ClassExpr, ClassPredicate, Operator,
    Universe,
};
use nonassoc::exactfield::PrimeField;
use nonassoc::linalg::span;
use nonassoc::opcalc::{
    derive_closure, derive_leq, empirical_falsify, normalize, seed_facts, singleton_generators, Gen, OpExpr,
};

const XYZ: &str = include_str!("../examples/xyz.alg");

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn universe(p: u64) -> Universe<PrimeField> {
    Universe::exhaustive(&gf(p), 2, &Budget::default()).unwrap()
}

#[test]
fn universe_sizes_match_class_counts() {
    // 1 + 2 + 52 over GF(2), 1 + 2 + 162 over GF(3)
    assert_eq!(universe(2).len(), 55);
    assert_eq!(universe(3).len(), 165);
}

#[test]
fn quotient_closure_of_xyz() {
    let f = gf(2);
    let a = parse_alg_as(XYZ, &f).unwrap();
    let u = universe(2).with_extras([a.clone()]).unwrap();
    let closure = class_closure_fixpoint(std::slice::from_ref(&a), &[Operator::Q], &u).unwrap();
    let dims: Vec<usize> = closure.iter().map(|&i| u.member(i).dim()).collect();
    assert_eq!(dims, vec![0, 1, 3]);
    // the one-dimensional quotient has zero product: x² = z lies in the ideal
    let one = closure.iter().find(|&&i| u.member(i).dim() == 1).unwrap();
    assert!(u.member(*one).is_abelian());
}

#[test]
fn residuals_of_xyz_match_hand_values() {
    let f = gf(3);
    let a = parse_alg_as(&XYZ.replace("GF 2", "GF 3"), &f).unwrap();
    let yz = span(&f, &[vec![0, 1, 0], vec![0, 0, 1]], 3).unwrap();
    let b = Budget::default();
    for p in [ClassPredicate::Abelian, ClassPredicate::Nilpotent, ClassPredicate::Supersolvable] {
        assert_eq!(residual(&p, &a, &b).unwrap().ideal, yz, "{p}");
    }
    assert!(residual(&ClassPredicate::Solvable, &a, &b).unwrap().ideal.is_zero());
}

#[test]
fn closedness_of_standard_classes() {
    let u = universe(2);
    for p in ["abelian", "nilpotent", "solvable"] {
        for op in [Operator::S, Operator::Q, Operator::Sn, Operator::D0, Operator::E] {
            let class = ClassExpr::parse(p).unwrap();
            let r = closedness_check(&class, op, &u).unwrap();
            // e1·e2 = e2 is abelian-by-abelian but not nilpotent
            let expect = op != Operator::E || p == "solvable";
            assert_eq!(r.closed(), expect, "{p} under {op}: {:?}", r.counterexamples);
        }
    }
}

#[test]
fn saturation_for_abelian_is_computed() {
    let r = saturation_check(&ClassPredicate::Abelian, &universe(2)).unwrap();
    assert!(r.examined > 0);
}

#[test]
fn membership_with_universe_witnesses() {
    let u = universe(2);
    let b = Budget::default();
    let zero_product = u.members().iter().position(|a| a.dim() == 1 && a.is_abelian()).unwrap();
    let one = u.member(zero_product);
    let m = member(&ClassExpr::parse("S(nilpotent)").unwrap(), one, Some(&u), &b).unwrap();
    assert!(m.holds);
    let ids: BTreeSet<usize> = [zero_product].into();
    let m = member(&ClassExpr::Members(ids).apply(Operator::D0), one, Some(&u), &b).unwrap();
    assert!(m.holds);
}

fn e(s: &str) -> OpExpr {
    OpExpr::parse(s).unwrap()
}

#[test]
fn normalization_is_idempotent_and_order_preserving() {
    let facts = seed_facts();
    for s in ["Q.Q", "join(S,S,Q)", "S.Q", "EPhi.EPhi.Q.Q", "join(Q.Q,join(R0,S))", "P.P"] {
        let x = e(s);
        let n = normalize(&x);
        assert_eq!(normalize(&n), n);
        assert!(derive_leq(&x, &n, &facts).provable(), "{s}");
        assert!(derive_leq(&n, &x, &facts).provable(), "{s}");
    }
}

#[test]
fn joins_bound_their_components() {
    let facts = seed_facts();
    let parts = [e("Sn"), e("Q"), e("EPhi.Q"), e("R0")];
    let join = OpExpr::join(parts.clone());
    for p in &parts {
        assert!(derive_leq(p, &join, &facts).provable(), "{p}");
    }
}

#[test]
fn derived_closures_survive_falsification() {
    let facts = seed_facts();
    let evaluable: Vec<Gen> = Gen::ALL.into_iter().filter(|g| !matches!(g, Gen::L | Gen::P | Gen::R | Gen::N)).collect();
    let universes = [universe(2), universe(3)];
    let refs: Vec<&Universe<PrimeField>> = universes.iter().collect();
    let mut proved = 0;
    for &c1 in &evaluable {
        for &c2 in &evaluable {
            if c1 == c2 || !derive_closure(&OpExpr::word(&[c1, c2]), &facts).provable() {
                continue;
            }
            proved += 1;
            let swapped = OpExpr::word(&[c2, c1]);
            let straight = OpExpr::word(&[c1, c2]);
            for u in &refs {
                let gens = singleton_generators(u);
                let found = empirical_falsify(&swapped, &straight, &[*u], &gens).unwrap();
                assert!(found.is_none(), "{swapped} <= {straight}: {found:?}");
            }
        }
    }
    assert!(proved >= 4, "S.D0, EPhi.D0, EPhi.Q and Q.R0 should all be derivable");
}

#[test]
fn falsifier_finds_non_subideal_subalgebras() {
    let u = universe(2);
    let gens = singleton_generators(&u);
    let c = empirical_falsify(&e("S"), &e("Sn"), &[&u], &gens).unwrap().expect("counterexample");
    let ambient = match &c.generators {
        ClassExpr::Members(ids) => u.member(*ids.iter().next().unwrap()),
        _ => unreachable!(),
    };
    // the witness is a subalgebra of the generator that is not a subideal of it
    let b = Budget::default();
    let found = ambient
        .subalgebras(&b)
        .unwrap()
        .into_iter()
        .any(|s| !ambient.is_subideal(&s).unwrap() && s.dim() == u.member(c.algebra).dim());
    assert!(found);
    assert!(empirical_falsify(&e("Q"), &e("Q"), &[&u], &gens).unwrap().is_none());
}
