//! Exact scalars and row reduction over GF(p) and Q.
//!
//! cargo run --example exact_arithmetic

use nonassoc::exactfield::{scalar_arith, Field, FieldSpec, PrimeField, Rationals, Scalar, ScalarOp};
use nonassoc::linalg::{kernel, span, Matrix};

fn main() -> nonassoc::error::Result<()> {
    let q = FieldSpec::Rationals;
    let a = Scalar::parse("3/4", q).unwrap();
    let b = Scalar::parse("-5/6", q).unwrap();
    println!("3/4 * -5/6 = {}", scalar_arith(ScalarOp::Mul, &a, Some(&b))?);
    let seven = FieldSpec::prime(7)?;
    let x = Scalar::from_i64(3, seven);
    println!("1/3 in GF(7) = {}", x.inv()?);

    let rows = |f: &dyn Fn(i64) -> i64| vec![vec![f(1), f(2), f(3)], vec![f(2), f(4), f(6)], vec![f(1), f(0), f(1)]];
    let m = Matrix::from_rows(&Rationals, 3, rows(&|v| v).into_iter().map(|r| r.into_iter().map(|v| Rationals.from_i64(v)).collect()).collect())?;
    println!("rank over Q: {}, kernel dim {}", m.rank(), kernel(&m).dim());
    let gf2 = PrimeField::new(2)?;
    let u = span(&gf2, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]], 3)?;
    println!("span of (1,1,0),(0,1,1),(1,0,1) over GF(2): dim {}", u.dim());
    Ok(())
}
