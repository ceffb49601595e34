pub mod combinatorics;
pub mod cone;
pub mod database;
pub mod error;
pub mod exact;
pub mod residue;
pub mod so5;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    pub mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/cones.md")]
    pub mod cones {}
    #[doc = include_str!("../../../book/src/partition-functions.md")]
    pub mod partition_functions {}
    #[doc = include_str!("../../../book/src/residues.md")]
    pub mod residues {}
    #[doc = include_str!("../../../book/src/so5.md")]
    pub mod so5 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
