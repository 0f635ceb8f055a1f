//! Gröbner bases for submodules of graded free modules over `S`.
//!
//! Everything here works with the position-over-term order (lower component
//! index first) refined by degrevlex. That choice makes block elimination a
//! matter of concatenating components: kernels, lifts, intersections and colons
//! are all read off from one Gröbner basis of a suitably tagged module.

mod buchberger;
mod free;
mod ops;

pub use buchberger::{buchberger, GroebnerBasis};
pub use free::{cmp_module_terms, FreeElement, FreeModule};
pub use ops::{
    colon_by_irrelevant, colon_by_variable, lift, module_intersection, relations_of, saturate_counting,
    saturate_irrelevant, syzygies_of, Lifter,
};
