//! Local topological zeta functions of Newton-nondegenerate polynomials in
//! two and three variables, computed exactly from the Newton polyhedron.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod family;
pub mod nondeg;
pub mod parse;
pub mod polytope;
pub mod verify;
pub mod zeta;

pub use algebra::{
    divide_by_linear, pole_table, ratfunc_equal, zeta_combine, LinearFactor, NormalizedRatFunc, PoleTable, Rational,
    SparsePoly, ZetaExpr, ZetaTerm,
};
pub use error::{Error, Result};
pub use family::{end_to_end_instance_check, FamilyParams, InstanceReport};
pub use nondeg::{is_nondegenerate, NondegReport, Verdict};
pub use parse::{parse_polynomial, parse_polynomial_with_vars};
pub use polytope::{build_polytope, NewtonPolytope, SupportedPoly};
pub use zeta::{zeta_local, zeta_local_checked, Certification, LocalZeta};
