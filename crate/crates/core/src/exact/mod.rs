//! Exact arithmetic: rationals, cyclotomic numbers and matrices.

pub mod cyclotomic;
pub mod matrix;
pub mod rat;

pub use cyclotomic::Cyclotomic;
pub use matrix::{IntMat, RatMat};
pub use rat::{IntVec, Rat};
