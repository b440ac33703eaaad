//! Exact computations with complex semisimple Lie algebras in a Chevalley
//! basis: root systems, Weyl groups, structure constants, the double
//! `g ⊕ g` with its standard Manin triple, Lagrangian subalgebras
//! `l_{V,u,v}`, and coisotropic subalgebras built from long roots.
//!
//! All arithmetic is exact over the rationals.

pub mod bialgebra;
pub mod chevalley;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod rootsys;
pub mod verify;
pub mod weyl;
pub mod zambon;

pub use error::{Error, Result};
