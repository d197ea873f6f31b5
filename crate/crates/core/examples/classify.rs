//! Isomorphism classes of small algebras over GF(2) and GF(3), a random
//! sample, and an explicit isomorphism.
//!
//! cargo run --release --example classify

use nonassoc::algebra::brute_force_isomorphism;
use nonassoc::budget::Budget;
use nonassoc::corpus::{classify, sample, Corpus};
use nonassoc::exactfield::PrimeField;

fn main() -> nonassoc::error::Result<()> {
    let budget = Budget::default();
    for p in [2, 3] {
        let field = PrimeField::new(p)?;
        let counts: Vec<usize> = (0..=2).map(|d| classify(&field, d, &budget).map(|c| c.representatives.len())).collect::<Result<_, _>>()?;
        println!("GF({p}): classes in dimensions 0, 1, 2: {counts:?}");
    }
    let field = PrimeField::new(2)?;
    let s = sample(&field, 2, 5, 42)?;
    let table = classify(&field, 2, &budget)?;
    for e in &s.entries {
        let class = table.class_of[e.algebra.constants()];
        let rep = &table.representatives[class];
        let iso = brute_force_isomorphism(&e.algebra, rep, budget.iso_cap)?.expect("same class");
        println!("{} is class {class}, via a map of rank {}", e.name.as_deref().unwrap_or("?"), iso.rank());
    }
    // corpus files round-trip
    let text = s.to_text();
    assert_eq!(Corpus::parse(&text, &field)?, s);
    println!("corpus text: {} lines", text.lines().count());
    Ok(())
}
