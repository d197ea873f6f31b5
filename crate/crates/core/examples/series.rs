//! Power and derived series of the xyz algebra over GF(2), GF(5) and Q.
//!
//! cargo run --example series

use nonassoc::algebra::Algebra;
use nonassoc::corpus::xyz_algebra;
use nonassoc::exactfield::{Field, PrimeField, Rationals};

fn show<F: Field>(a: &Algebra<F>) {
    println!("over {}:", a.field().spec());
    for (name, s) in [("power", a.power_series()), ("derived", a.derived_series())] {
        let terms: Vec<String> = s.terms.iter().map(|t| a.format_subspace(t)).collect();
        println!("  {name:8} {}", terms.join(" > "));
    }
    println!("  nilpotency index {:?}, solvability index {:?}", a.nilpotency_index(), a.solvability_index());
}

fn main() {
    show(&xyz_algebra(&PrimeField::new(2).unwrap()));
    show(&xyz_algebra(&PrimeField::new(5).unwrap()));
    show(&xyz_algebra(&Rationals));
}
