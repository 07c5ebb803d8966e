//! Exact combinatorics of GIT-fans, orbit-cone collections and bunched rings.
//!
//! Everything is computed over the integers: cones are stored in a canonical
//! double description, lattices in Hermite normal form.

mod arith;
pub mod bunch;
pub mod collections;
pub mod cone;
pub mod corpus;
mod error;
pub mod gitfan;
pub mod lattice;

pub use arith::Vector;
pub use cone::Cone;
pub use error::{Error, Result};
