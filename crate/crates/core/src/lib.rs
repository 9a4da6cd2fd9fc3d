//! Exact-arithmetic engine for twisted group algebras with sign-valued
//! structure constants over small grading groups.

pub mod acceptance;
pub mod algebra;
pub mod classification;
pub mod cohomology;
pub mod deformations;
pub mod error;
pub mod groups;
pub mod identities;
pub mod linalg;
pub mod norms;
pub mod polynomial;
pub mod scalar;
pub mod structure;

pub use error::{Error, Result};
