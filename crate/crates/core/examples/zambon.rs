//! The subalgebras `u_{±β} = image of ([E_{±β}, π])♯` for positive long
//! roots `β`, compared with their closed form and their `l`-family recipe.
//!
//! `cargo run --example zambon -- F4`

use std::sync::Arc;

use coisotropy::bialgebra::Double;
use coisotropy::chevalley::ChevalleyAlgebra;
use coisotropy::weyl::WeylGroup;
use coisotropy::zambon::zambon_report;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "B2".into());
    let g = Arc::new(ChevalleyAlgebra::parse(&t)?);
    let rs = g.root_system().clone();
    let w = WeylGroup::new(rs.clone())?;
    let d = Double::new(g);
    for b in (0..rs.num_positive()).filter(|&b| rs.is_long_index(b)) {
        for sign in [1, -1] {
            let r = zambon_report(&d, &w, b, sign)?;
            println!(
                "{:>2}{:<12} dim {:>2}  closed form {}  as l {}  coisotropic {}",
                if sign > 0 { "+" } else { "-" },
                r.beta_label,
                r.dim,
                r.closed_form_match,
                r.as_l_match,
                r.coisotropic
            );
        }
    }
    Ok(())
}
