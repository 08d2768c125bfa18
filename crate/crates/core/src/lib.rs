//! Finite quivers, set-system hypergraphs, multigraphs and incidence
//! hypergraphs as executable categories.

pub mod bounds;
pub mod error;
pub mod finset;
pub mod incidence;
pub mod laws;
pub mod multigraph;
pub mod presheaf;
pub mod quiver;
mod search;
pub mod set_system;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use finset::{Atom, FiniteFunction, FiniteSet};
