//! Deriving order relations and closure properties of class-operator
//! words, and testing them on a bounded universe.
//!
//! cargo run --example operator_calculus

use nonassoc::budget::Budget;
use nonassoc::classes::Universe;
use nonassoc::exactfield::PrimeField;
use nonassoc::opcalc::{derive_closure, derive_leq, empirical_falsify, seed_facts, singleton_generators, OpExpr};

fn main() -> nonassoc::error::Result<()> {
    let facts = seed_facts();
    for (l, r) in [("D0", "R0"), ("Sn", "join(Sn,Q)"), ("D0.Sn", "S.D0"), ("Q", "S")] {
        let d = derive_leq(&OpExpr::parse(l)?, &OpExpr::parse(r)?, &facts);
        print!("{l} <= {r}: {d}");
    }
    for e in ["EPhi.Q", "Q.R0", "S.Q", "P"] {
        print!("{e} closure: {}", derive_closure(&OpExpr::parse(e)?, &facts));
    }

    let u = Universe::exhaustive(&PrimeField::new(2)?, 2, &Budget::default())?;
    let gens = singleton_generators(&u);
    for (l, r) in [("Q.EPhi", "EPhi.Q"), ("S", "Sn")] {
        match empirical_falsify(&OpExpr::parse(l)?, &OpExpr::parse(r)?, &[&u], &gens)? {
            Some(c) => println!("{l} <= {r} fails: member #{} from {}", c.algebra, c.generators),
            None => println!("{l} <= {r} survives {} generator sets", gens.len()),
        }
    }
    Ok(())
}
