//! Exact-arithmetic verification engine for the higher tetrahedral algebras
//! `Λ(m, λ)` and the related algebras used to study their degenerations.

pub mod algebra;
pub mod bimodule;
pub mod cli;
pub mod error;
pub mod families;
pub mod linalg;
pub mod modules;
pub mod path_algebra;
pub mod quiver;
pub mod scalars;

pub use error::{Error, Result};
