//! Fixtures shared by the benchmarks.

use topzeta::family::{family_polynomial, FamilyParams};
use topzeta::{parse_polynomial, SupportedPoly};

/// Polynomials of increasing Newton-polyhedron complexity.
pub fn polynomials() -> Vec<(&'static str, SupportedPoly)> {
    [
        ("cusp", "x^2 + y^3"),
        ("brieskorn", "x^2 + y^3 + z^5"),
        ("cubic", "x^3 + y^3 + z^3 + x*y*z"),
        ("staircase", "x^7 + x^4*y^2 + x^2*y^3*z + y^6 + x*z^4 + z^9 + y^2*z^3"),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_polynomial(text).expect("fixture parses")))
    .collect()
}

pub fn family_instance(a: i64, b: i64, r: i64) -> SupportedPoly {
    let p = FamilyParams::with_default_roots(a, b, r, 1, 1, 1).expect("valid fixture");
    family_polynomial(&p).expect("fixture expands")
}
