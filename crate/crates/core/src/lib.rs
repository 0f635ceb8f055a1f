pub mod counterexamples;
pub mod error;
pub mod groebner;
pub mod grmod;
pub mod linalg;
pub mod ring;
pub mod serre;
pub mod sheaf;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/graded-modules.md")]
    mod graded_modules {}
    #[doc = include_str!("../../../book/src/torsion.md")]
    mod torsion {}
    #[doc = include_str!("../../../book/src/quotient-category.md")]
    mod quotient_category {}
    #[doc = include_str!("../../../book/src/sheaves.md")]
    mod sheaves {}
    #[doc = include_str!("../../../book/src/counterexamples.md")]
    mod counterexamples {}
}
