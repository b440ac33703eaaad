//! Positive roots, heights, length classes and root strings of a Cartan type.
//!
//! `cargo run --example root_systems -- G2`

use coisotropy::linalg::format_rational;
use coisotropy::rootsys::RootSystem;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let rs = RootSystem::parse(&t)?;
    println!("{t}: rank {}, {} roots", rs.rank(), rs.num_roots());
    println!("Cartan matrix {:?}", rs.cartan_matrix());
    for a in 0..rs.num_positive() {
        let kind = if rs.is_long_index(a) { "long" } else { "short" };
        println!(
            "  {:<12} height {:>2}  (a,a) = {:<5} {kind}",
            rs.root_label(a),
            rs.root(a).height(),
            format_rational(rs.norm(a)),
        );
    }
    let theta = rs.highest_root();
    println!("highest root {}", rs.root_label(theta));
    // α-string through β is β − pα, …, β + qα
    let (a, b) = (rs.simple_index(0), rs.simple_index(1.min(rs.rank() - 1)));
    if a != b {
        let (p, q) = rs.root_string_index(a, b)?;
        println!(
            "string of {} through {}: p = {p}, q = {q}",
            rs.root_label(a),
            rs.root_label(b)
        );
    }
    Ok(())
}
