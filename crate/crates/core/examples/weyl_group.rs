//! Enumerates the Weyl group, then inspects lengths, inversion sets and the
//! right weak order.
//!
//! `cargo run --example weyl_group -- B3`

use std::sync::Arc;

use coisotropy::rootsys::RootSystem;
use coisotropy::weyl::WeylGroup;

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A3".into());
    let rs = Arc::new(RootSystem::parse(&t)?);
    let w = WeylGroup::new(rs.clone())?;
    let w0 = w.long_element();
    println!(
        "{t}: |W| = {}, w0 = {} of length {}",
        w.order(),
        w.word_string(w0),
        w.length(w0)
    );

    let mut by_length = vec![0usize; w.length(w0) + 1];
    for x in w.ids() {
        by_length[w.length(x)] += 1;
    }
    println!("elements per length {by_length:?}");

    let c = w.parse_word("s1*s2")?;
    let labels: Vec<String> = w
        .inversion_indices(c)
        .into_iter()
        .map(|a| rs.root_label(a))
        .collect();
    println!("Φ(s1 s2) = {{{}}}", labels.join(", "));

    let below = w.ids().filter(|&x| w.weak_leq(x, c)).count();
    let disjoint = w
        .ids()
        .flat_map(|u| w.ids().map(move |v| (u, v)))
        .filter(|&(u, v)| w.disjoint_inversions(u, v))
        .count();
    println!("{below} elements lie below s1 s2 in the weak order");
    println!(
        "{disjoint} of {} ordered pairs have disjoint inversion sets",
        w.order() * w.order()
    );
    Ok(())
}
