//! Builds the Chevalley basis and prints its structure constants.
//!
//! `cargo run --example chevalley_basis -- B2`

use coisotropy::chevalley::ChevalleyAlgebra;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let g = ChevalleyAlgebra::parse(&t)?;
    let rs = g.root_system().clone();
    println!("{t}: dim {} (rank {})", g.dim(), g.rank());

    println!("nonzero [E_a, E_b] = c E_(a+b) with a, b positive:");
    for a in 0..rs.num_positive() {
        for b in a + 1..rs.num_positive() {
            let c = g.structure_constant_index(a, b)?;
            if c != 0 {
                println!("  [{}, {}] = {c}", rs.root_label(a), rs.root_label(b));
            }
        }
    }

    // [E_α, E_−α] is the coroot H_α
    let a = rs.highest_root();
    let h = g.bracket(&g.e(a), &g.e(rs.neg_index(a)))?;
    println!("[E_θ, E_-θ] = H_θ: {}", h.coords() == g.coroot(a).coords());

    let bad = g.jacobi_violations();
    println!("Jacobi violations on basis triples: {}", bad.len());
    Ok(())
}
