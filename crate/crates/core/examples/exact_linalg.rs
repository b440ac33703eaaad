//! Exact rational subspace arithmetic: sums, intersections, orthogonal
//! complements and Lagrangian checks under an indefinite form.
//!
//! `cargo run --example exact_linalg`

use coisotropy::linalg::{format_vector, rat, ratio, Matrix, Subspace};

fn main() -> coisotropy::Result<()> {
    // split form on Q^4 of signature (2, 2)
    let form = Matrix::from_i64_rows(&[
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
    ])?;
    let a = Subspace::new(4, vec![vec![rat(1), rat(0), rat(1), rat(0)]])?;
    let b = Subspace::new(4, vec![vec![rat(0), rat(1), rat(0), rat(1)]])?;
    let l = a.sum(&b)?;
    println!("dim l = {}, Lagrangian: {}", l.dim(), l.perp(&form)? == l);

    let c = Subspace::new(
        4,
        vec![
            vec![rat(1), ratio(1, 2), rat(1), ratio(1, 2)],
            vec![rat(0), rat(0), rat(1), rat(0)],
        ],
    )?;
    let i = l.intersect(&c)?;
    println!("dim l ∩ c = {}", i.dim());
    for row in i.basis_rows() {
        println!("  {:?}", format_vector(row));
    }
    println!("c isotropic: {}", c.is_isotropic(&form)?);
    println!("dim c⊥ = {}", c.perp(&form)?.dim());
    Ok(())
}
