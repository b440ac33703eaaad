//! The Killing form on the Chevalley basis and the scalars
//! `λ_α = K(E_α, E_−α)^{-1}`.
//!
//! `cargo run --example killing_form -- C3`

use coisotropy::chevalley::ChevalleyAlgebra;
use coisotropy::linalg::format_rational;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let g = ChevalleyAlgebra::parse(&t)?;
    let rs = g.root_system().clone();

    let kh = g.killing_on_h();
    println!("{t}: Killing form on the coroot basis of h");
    for i in 0..kh.rows() {
        let row: Vec<String> = kh.row(i).iter().map(format_rational).collect();
        println!("  [{}]", row.join(", "));
    }

    // λ depends only on the length class of α
    for a in 0..rs.num_positive() {
        let lam = g.lambda_index(a);
        let check = g.killing_form(&g.e(a), &g.e(rs.neg_index(a)))? * &lam;
        println!(
            "  λ({}) = {:<6} K·λ = {}",
            rs.root_label(a),
            format_rational(&lam),
            format_rational(&check)
        );
    }
    Ok(())
}
