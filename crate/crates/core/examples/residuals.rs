//! Class residuals of the xyz algebra, by closed formula and by
//! intersecting all ideals with quotient in the class.
//!
//! cargo run --example residuals

use nonassoc::budget::Budget;
use nonassoc::classes::{residual_fast, residual_generic, ClassExpr, ClassPredicate, Evaluator};
use nonassoc::corpus::xyz_algebra;
use nonassoc::exactfield::PrimeField;

fn main() -> nonassoc::error::Result<()> {
    let budget = Budget::default();
    let field = PrimeField::new(3)?;
    let a = xyz_algebra(&field);
    use ClassPredicate::*;
    for p in [Abelian, Nilpotent, NilpotentC(2), Solvable, Supersolvable] {
        let fast = residual_fast(p, &a).map(|r| a.format_subspace(&r));
        let generic = residual_generic(&p, &a, &budget)?;
        println!("{:14} fast {:16} generic {}", p.to_string(), fast.unwrap_or_else(|| "-".into()), a.format_subspace(&generic));
    }
    // residuals also exist for derived classes
    let ephi = ClassExpr::parse("EPhi(nilpotent)")?;
    let ev = Evaluator::new(&ephi, &field, None, &budget)?;
    println!("{:14} generic {}", ephi.to_string(), a.format_subspace(&residual_generic(&ev, &a, &budget)?));
    Ok(())
}
