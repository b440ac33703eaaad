//! Sweeps the `l_{V,u,v}` and `s_{V,u,v}` families over every pair of Weyl
//! group elements and compares coisotropy with the combinatorial criteria.
//!
//! `cargo run --example lagrangian_family -- B2`

use std::sync::Arc;

use coisotropy::bialgebra::{rank_pi, Double};
use coisotropy::chevalley::ChevalleyAlgebra;
use coisotropy::linalg::Subspace;
use coisotropy::weyl::WeylGroup;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let g = Arc::new(ChevalleyAlgebra::parse(&t)?);
    let w = WeylGroup::new(g.root_system().clone())?;
    let d = Double::new(g.clone());
    let h = Subspace::full(g.rank());

    let (mut l_hits, mut s_hits, mut agree) = (0, 0, true);
    for u in w.ids() {
        for v in w.ids() {
            let l = d.build_l(&w, &h, u, v)?;
            let coiso = d.is_coisotropic(&l.space)?;
            agree &= coiso == (rank_pi(&w, u, v) == 0);
            if coiso {
                l_hits += 1;
                let c = d.extract_coisotropic(&l.space)?;
                agree &= c.m == d.closed_form_m(&w, &h, u, v)?;
                agree &= c.m_perp == d.closed_form_m_perp(&w, &h, u, v)?;
            }
            let s = d.build_s(&w, &h, u, v)?;
            let coiso = d.is_coisotropic(&s.space)?;
            agree &= coiso == w.weak_leq(u, v);
            s_hits += usize::from(coiso);
        }
    }
    let n = w.order() * w.order();
    println!("{t}, V = h: {l_hits}/{n} coisotropic l, {s_hits}/{n} coisotropic s");
    println!("criteria and closed forms agree: {agree}");

    let u = w.parse_word("s1")?;
    let v = w.parse_word("s2")?;
    let rep = d.report(&w, &d.build_l(&w, &h, u, v)?)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&rep).expect("serializable")
    );
    Ok(())
}
