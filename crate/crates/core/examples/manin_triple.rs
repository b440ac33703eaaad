//! The double `g ⊕ g` with its split form, diagonal `g_Δ` and dual `g*`.
//!
//! `cargo run --example manin_triple -- A1xB2`

use std::sync::Arc;

use coisotropy::bialgebra::Double;
use coisotropy::chevalley::ChevalleyAlgebra;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let d = Double::new(Arc::new(ChevalleyAlgebra::parse(&t)?));
    println!("{t}: dim d = {}", d.dim());
    println!(
        "g_Δ: dim {}, subalgebra {}, Lagrangian {}",
        d.g_delta().dim(),
        d.is_subalgebra(d.g_delta())?,
        d.is_lagrangian(d.g_delta())?
    );
    println!(
        "g*:  dim {}, subalgebra {}, Lagrangian {}",
        d.g_star().dim(),
        d.is_subalgebra(d.g_star())?,
        d.is_lagrangian(d.g_star())?
    );
    let report = d.manin_check();
    println!("{report:?}");
    println!("Manin triple: {}", report.holds());
    Ok(())
}
