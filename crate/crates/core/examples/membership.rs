//! Membership in classes built from closure operations, with witnesses,
//! and closures of generator sets inside a bounded universe.
//!
//! cargo run --example membership

use nonassoc::budget::Budget;
use nonassoc::classes::{class_closure_fixpoint, member, ClassExpr, Operator, Universe};
use nonassoc::corpus::xyz_algebra;
use nonassoc::exactfield::PrimeField;

fn main() -> nonassoc::error::Result<()> {
    let budget = Budget::default();
    let field = PrimeField::new(2)?;
    let a = xyz_algebra(&field);

    for text in ["nilpotent", "EPhi(nilpotent)", "E(abelian)", "prod(abelian,abelian)", "pow(abelian,3)", "R0(solvable)", "P(abelian)"] {
        let m = member(&ClassExpr::parse(text)?, &a, None, &budget)?;
        let why = m.witness.map(|w| w.render(&a)).unwrap_or_default();
        println!("{text:24} {:5} {why}", m.holds);
    }

    // extrinsic operators need ambient algebras
    let u = Universe::exhaustive(&field, 2, &budget)?.with_extras([a.clone()])?;
    println!("universe: {} members up to dimension {}", u.len(), u.table_dim());
    let s = member(&ClassExpr::parse("Q(solvable)")?, &a, Some(&u), &budget)?;
    println!("Q(solvable) {}", s.holds);
    let closure = class_closure_fixpoint(std::slice::from_ref(&a), &[Operator::Q], &u)?;
    for id in closure {
        let m = u.member(id);
        println!("  Q-closure member #{id}: dim {}", m.dim());
    }
    Ok(())
}
