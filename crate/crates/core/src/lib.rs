//! Binomial representations of Hilbert functions and Hilbert polynomials for
//! monomial submodules of graded free modules over `k[x_0, ..., x_n]`.
//!
//! The crate covers Macaulay representations and their transforms, Gotzmann
//! representations of Hilbert polynomials (standard and rank-and-degree
//! adjusted), exact Hilbert functions/series/polynomials of monomial modules,
//! lex modules, graded Betti numbers and regularity, Chern class extraction,
//! and executable checkers for the Macaulay, Green, Gotzmann regularity and
//! persistence bounds. All arithmetic is exact.

pub mod algebra;
pub mod chern;
pub mod combinatorics;
mod error;
pub mod lex;
pub mod linalg;
pub mod numpoly;
pub mod resolution;
pub(crate) mod serde_util;
pub mod theorems;

pub use algebra::{GradedFreeModule, HilbertSeries, Monomial, MonomialIdeal, MonomialSubmodule};
pub use combinatorics::{binomial, green_transform, macaulay_rep, macaulay_transform, MacaulayRep};
pub use error::{Error, Result};
pub use numpoly::{AdjustedGotzmannRep, GotzmannRep, NumPoly};
pub use resolution::BettiTable;
