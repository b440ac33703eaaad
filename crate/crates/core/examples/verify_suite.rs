//! Runs the full verification battery for one Cartan type and prints a
//! per-suite summary.
//!
//! `cargo run --release --example verify_suite -- G2`

use coisotropy::rootsys::RootSystem;
use coisotropy::verify::{verify, VerifyOptions};

fn main() -> coisotropy::Result<()> {
    let t = std::env::args().nth(1).unwrap_or_else(|| "A2".into());
    let report = verify(RootSystem::parse(&t)?, VerifyOptions::default())?;
    println!("{t}: dim {}, |W| {}", report.dim, report.weyl_order);
    for s in &report.suites {
        println!(
            "  {:<22} {:<8} {:>5} checks, {} failed  {}",
            s.name,
            format!("{:?}", s.status),
            s.checks,
            s.failures,
            s.note.as_deref().unwrap_or("")
        );
    }
    println!("passed: {}", report.passed);
    Ok(())
}
