//! Exact arithmetic: rationals, sparse multivariate polynomials, dense
//! univariate polynomials and factored rational functions in `s`.

pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod univariate;

pub use poly::SparsePoly;
pub use ratfunc::{
    divide_by_linear, pole_table, ratfunc_equal, zeta_combine, AsFraction, LinearFactor, NormalizedRatFunc, PoleEntry,
    PoleTable, ZetaExpr, ZetaTerm, S,
};
pub use rational::Rational;
pub use univariate::UniPoly;
