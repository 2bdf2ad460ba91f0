//! Monomial ideals, graded free modules and their monomial submodules.

mod hyperplane;
mod ideal;
mod module;
mod monomial;
mod series;

pub use hyperplane::{generic_hyperplane_hf, hyperplane_hf_with, LinearForm, DEFAULT_SAMPLES};
pub use ideal::{IdealJson, MonomialIdeal};
pub use module::{series_matches_direct, GradedFreeModule, ModuleJson, MonomialSubmodule};
pub use monomial::{monomials_of_degree, Monomial};
pub use series::{kpoly, kpoly_capped, HilbertSeries, DEFAULT_NODE_CAP};
