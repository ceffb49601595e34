//! Quasi-polynomials of vector partition functions from iterated residues.

mod engine;
pub mod kostant;
pub mod poly;
pub mod quasi;
pub mod series;

pub use engine::{chamber_quasipolynomial, ResidueEngine};
pub use kostant::{expand_kostant_term, iterated_residue, KostantTerm};
pub use poly::{Coeff, Monomial, Poly};
pub use quasi::{CharacterSum, QuasiPolynomial, QuasiRecord};
