//! Split null extensions by bimodules, pullbacks over a common quotient,
//! and subdirect embeddings.
//!
//! cargo run --example extensions

use nonassoc::algebra::{pullback, split_null_extension, subdirect_embedding, Algebra, Bimodule};
use nonassoc::corpus::xyz_algebra;
use nonassoc::exactfield::{Field, Rationals};

fn main() -> nonassoc::error::Result<()> {
    let q = Rationals;
    let a = xyz_algebra(&q);
    let yz = a.span_of_basis(&[1, 2]);

    // A/B acting on an abelian ideal B; span{y,z} is not abelian, so use
    // e1·e1 = e2, e1·e2 = e2 and B = span{e2}
    let (zero, one) = (q.zero(), q.one());
    let c = Algebra::from_products(&q, 2, &[(0, 0, vec![zero.clone(), one.clone()]), (0, 1, vec![zero, one])])?;
    let b = c.span_of_basis(&[1]);
    let (quotient, _, module) = Bimodule::induced(&c, &b)?;
    let ext = split_null_extension(&quotient, &module)?;
    println!("C/B ⋉ B: dim {}, solvable {}, nilpotent {}", ext.dim(), ext.is_solvable(), ext.is_nilpotent());
    let regular = split_null_extension(&a, &Bimodule::regular(&a))?;
    println!("A ⋉ A: dim {}, solvability index {:?}", regular.dim(), regular.solvability_index());

    // two copies of A → A/span{y,z}
    let (_, mu) = a.quotient(&yz)?;
    let pb = pullback(&mu, &mu)?;
    println!(
        "pullback: dim {}, ker α1 dim {}, ker α2 dim {}, ker μ dim {}",
        pb.algebra.dim(),
        pb.alpha1.kernel().dim(),
        pb.alpha2.kernel().dim(),
        pb.mu.kernel().dim()
    );

    // A ⊕ A embeds subdirectly via its two summand ideals
    let (sum, _) = Algebra::direct_sum(&[&a, &a])?;
    let first = sum.span_of_basis(&[0, 1, 2]);
    let second = sum.span_of_basis(&[3, 4, 5]);
    let emb = subdirect_embedding(&sum, &[first, second])?;
    println!("subdirect embedding: kernel dim {}, subdirect {}", emb.kernel.dim(), emb.is_subdirect);
    Ok(())
}
