//! Finite sets of atoms and total functions between them.

mod atom;
mod constructions;
mod function;
mod set;

pub use atom::{Atom, Node};
pub(crate) use constructions::{mask_indices, sub_inclusion, subset_masks};
pub use constructions::{
    all_functions, coequalize_set, coproduct_set, equalize_set, function_tables, powerset,
    product_set, tag,
};
pub use function::FiniteFunction;
pub use set::FiniteSet;
