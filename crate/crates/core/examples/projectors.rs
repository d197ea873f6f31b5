//! Projectors and complements: the xyz algebra has no nilpotent
//! projector, while solvable algebras with an abelian minimal ideal do.
//!
//! cargo run --example projectors

use nonassoc::algebra::Algebra;
use nonassoc::budget::Budget;
use nonassoc::classes::{complements_of_ideal, minimal_ideals_of, projectors, ClassPredicate, ProjectorTable};
use nonassoc::corpus::xyz_algebra;
use nonassoc::exactfield::{Field, PrimeField};

fn report(name: &str, a: &Algebra<PrimeField>, budget: &Budget) -> nonassoc::error::Result<()> {
    for p in [ClassPredicate::Abelian, ClassPredicate::Nilpotent, ClassPredicate::Solvable] {
        let r = projectors(&p, a, budget)?;
        let list: Vec<String> = r.projectors.iter().map(|s| a.format_subspace(s)).collect();
        println!("{name}: {p} projectors [{}]", list.join(", "));
        if r.projectors.is_empty() {
            let table = ProjectorTable::new(&p, a, budget)?;
            if let Some(b) = table.subalgebras().iter().rev().find(|b| table.subalgebra_in_class(b) == Some(true)) {
                if let Some((c, c0)) = table.is_projector(b)?.obstruction {
                    println!("  {} fails: {} / {} is {p} but not covered", a.format_subspace(b), a.format_subspace(&c), a.format_subspace(&c0));
                }
            }
        }
    }
    for m in minimal_ideals_of(a, budget)? {
        let comps: Vec<String> = complements_of_ideal(a, &m, budget)?.iter().map(|c| a.format_subspace(c)).collect();
        println!("  minimal ideal {} has complements [{}]", a.format_subspace(&m), comps.join(", "));
    }
    Ok(())
}

fn main() -> nonassoc::error::Result<()> {
    let budget = Budget::default();
    let field = PrimeField::new(2)?;
    report("xyz", &xyz_algebra(&field), &budget)?;
    // e1·e2 = e2: solvable, not nilpotent, with the abelian minimal ideal span{e2}
    let ab = Algebra::from_products(&field, 2, &[(0, 1, vec![field.zero(), field.one()])])?;
    report("e1e2=e2", &ab, &budget)
}
