//! The `z_{u,v}` family: coisotropic exactly when `Φ_u ∩ Φ_v = ∅` and
//! `v⁻¹u` is an involution. Vanishing `rank_pi` alone is not enough, as any
//! non-involution paired with the identity shows.
//!
//! `cargo run --example z_criterion -- B2`

use std::sync::Arc;

use coisotropy::bialgebra::{rank_pi, Double};
use coisotropy::chevalley::ChevalleyAlgebra;
use coisotropy::weyl::WeylGroup;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let g = Arc::new(ChevalleyAlgebra::parse(&t)?);
    let w = WeylGroup::new(g.root_system().clone())?;
    let d = Double::new(g);

    let mut mismatches = Vec::new();
    for u in w.ids() {
        for v in w.ids() {
            let z = d.build_z(&w, u, v)?;
            let predicted = rank_pi(&w, u, v) == 0 && w.is_involution(w.multiply(w.inverse(v), u));
            if d.is_coisotropic(&z.space)? != predicted {
                mismatches.push((w.word_string(u), w.word_string(v)));
            }
        }
    }
    println!(
        "{t}: {} pairs, mismatches {mismatches:?}",
        w.order() * w.order()
    );

    let e = w.identity();
    for u in w.ids().filter(|&u| !w.is_involution(u)) {
        let z = d.build_z(&w, u, e)?;
        println!(
            "  u = {:<10} rank_pi(u, e) = 0, z coisotropic: {}",
            w.word_string(u),
            d.is_coisotropic(&z.space)?
        );
    }
    Ok(())
}
