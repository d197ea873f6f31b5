//! Frattini subalgebra and ideal, primitivity and simplicity of the named
//! examples over GF(2).
//!
//! cargo run --example frattini

use nonassoc::budget::Budget;
use nonassoc::corpus::named_examples;
use nonassoc::exactfield::PrimeField;

fn main() -> nonassoc::error::Result<()> {
    let budget = Budget::default();
    let corpus = named_examples(&PrimeField::new(2)?);
    for entry in &corpus.entries {
        let a = &entry.algebra;
        println!(
            "{:14} dim {}  Φ-subalgebra {:14} Φ-ideal {:14} primitive {:5} simple {}",
            entry.name.as_deref().unwrap_or("?"),
            a.dim(),
            a.format_subspace(&a.frattini_subalgebra(&budget)?),
            a.format_subspace(&a.frattini_ideal(&budget)?),
            a.is_primitive(&budget)?,
            a.is_simple(&budget)?,
        );
    }
    Ok(())
}
