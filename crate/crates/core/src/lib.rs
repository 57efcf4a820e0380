//! Quadratic algebras attached to graphs.

pub mod cli;
pub mod error;
pub mod freealg;
pub mod graphs;
pub mod groebner;
pub mod matchings;
pub mod oracle;
pub mod presentations;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
