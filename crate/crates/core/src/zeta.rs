//! The local topological zeta function of a Newton-nondegenerate polynomial
//! from its Newton polyhedron:
//!
//! `Z(s) = sum_{dim 0} J(s) + s/(s+1) * sum_{dim > 0} (-1)^dim * vol(face) * J(s)`
//!
//! where `vol` is the normalized volume and `J` depends on the facets
//! containing the face.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{pole_table, zeta_combine, LinearFactor, Rational, SparsePoly, ZetaExpr, ZetaTerm};
use crate::error::{Error, Result};
use crate::nondeg::{is_nondegenerate, NondegReport, Verdict};
use crate::polytope::{
    build_polytope, mult2, mult3, normalized_volume, order_facets_around_vertex, CompactFace, Facet, NewtonPolytope,
    SupportedPoly,
};

/// The contribution `J` of one compact face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JTerm {
    /// Index into [`NewtonPolytope::compact_faces`].
    pub face: usize,
    pub value: ZetaExpr,
}

fn factor_of(f: &Facet) -> LinearFactor {
    LinearFactor::numeric(f.distance, f.nu)
}

fn weighted(weight: u64, facets: &[&Facet]) -> ZetaTerm {
    ZetaTerm::new(SparsePoly::from_int(weight as i64), facets.iter().map(|f| factor_of(f)))
}

/// `1/(N s + nu)` for a compact face of top dimension.
pub fn j_facet(poly: &NewtonPolytope, face: &CompactFace) -> Result<ZetaExpr> {
    let n = poly.ambient();
    let facet = poly.own_facet(face).ok_or(Error::WrongDim {
        expected: n - 1,
        found: face.dim,
    })?;
    Ok(ZetaExpr::new(vec![weighted(1, &[facet])]))
}

/// `mult(l1, l2) / ((N1 s + nu1)(N2 s + nu2))` for a compact edge in three variables.
pub fn j_edge(poly: &NewtonPolytope, face: &CompactFace) -> Result<ZetaExpr> {
    if poly.ambient() != 3 || face.dim != 1 || face.containing.len() != 2 {
        return Err(Error::WrongDim {
            expected: 1,
            found: face.dim,
        });
    }
    let fs: Vec<&Facet> = poly.containing_facets(face).collect();
    let m = mult2(&fs[0].normal, &fs[1].normal)?;
    Ok(ZetaExpr::new(vec![weighted(m, &fs)]))
}

/// `J` of a vertex. In two variables the vertex lies on exactly two edges
/// and `J = |det(l1, l2)| / ((N1 s + nu1)(N2 s + nu2))`; in three variables
/// the cone of facet normals is fan-triangulated from the first facet of
/// the cyclic order.
pub fn j_vertex(poly: &NewtonPolytope, face: &CompactFace) -> Result<ZetaExpr> {
    if face.dim != 0 {
        return Err(Error::WrongDim {
            expected: 0,
            found: face.dim,
        });
    }
    if poly.ambient() == 2 {
        if face.containing.len() != 2 {
            return Err(Error::BrokenFan);
        }
        let fs: Vec<&Facet> = poly.containing_facets(face).collect();
        let m = mult2(&fs[0].normal, &fs[1].normal)?;
        return Ok(ZetaExpr::new(vec![weighted(m, &fs)]));
    }
    let cycle = order_facets_around_vertex(poly, face)?;
    Ok(j_vertex_from_cycle(poly, &cycle))
}

/// Fan triangulation of the cone spanned by the facet normals, listed in
/// cyclic order, with apex `cycle[0]`. Coplanar triples contribute nothing
/// and are dropped.
pub fn j_vertex_from_cycle(poly: &NewtonPolytope, cycle: &[usize]) -> ZetaExpr {
    let apex = poly.facet(cycle[0]);
    let mut out = ZetaExpr::default();
    for t in 2..cycle.len() {
        let (prev, cur) = (poly.facet(cycle[t - 1]), poly.facet(cycle[t]));
        let m = mult3(&apex.normal, &prev.normal, &cur.normal);
        if m > 0 {
            out.push(weighted(m, &[apex, prev, cur]));
        }
    }
    out
}

pub fn j_term(poly: &NewtonPolytope, face_idx: usize) -> Result<JTerm> {
    let face = &poly.compact_faces()[face_idx];
    let value = match face.dim {
        0 => j_vertex(poly, face)?,
        d if d + 1 == poly.ambient() => j_facet(poly, face)?,
        _ => j_edge(poly, face)?,
    };
    Ok(JTerm { face: face_idx, value })
}

/// Assembles the zeta function from an already built polyhedron.
pub fn zeta_from_polytope(poly: &NewtonPolytope) -> Result<ZetaExpr> {
    let mut out = ZetaExpr::default();
    for (idx, face) in poly.compact_faces().iter().enumerate() {
        let j = j_term(poly, idx)?;
        if face.dim == 0 {
            out.extend(j.value);
            continue;
        }
        let vol = normalized_volume(poly, face)? as i64;
        let sign = if face.dim % 2 == 0 { 1 } else { -1 };
        let weight = SparsePoly::from_int(sign * vol);
        for t in j.value.scale(&weight).terms() {
            out.push(t.clone().times_s_over_s_plus_one());
        }
    }
    Ok(out)
}

/// The local topological zeta function at the origin, assuming `f` is
/// Newton nondegenerate (see [`zeta_local_checked`]).
pub fn zeta_local(f: &SupportedPoly) -> Result<ZetaExpr> {
    zeta_from_polytope(&build_polytope(f)?)
}

/// Whether the nondegeneracy hypothesis behind a zeta computation was verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified,
    Uncertified,
    Degenerate,
    Skipped,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::Certified => "certified",
            Certification::Uncertified => "uncertified",
            Certification::Degenerate => "degenerate",
            Certification::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl From<Verdict> for Certification {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Nondegenerate => Certification::Certified,
            Verdict::PossiblyDegenerate => Certification::Uncertified,
            Verdict::Degenerate => Certification::Degenerate,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalZeta {
    pub polytope: NewtonPolytope,
    pub expr: ZetaExpr,
    pub certification: Certification,
    pub report: Option<NondegReport>,
}

/// [`zeta_local`] together with the nondegeneracy verdict. A degenerate or
/// uncertified input still produces the formula value; the flag records it.
pub fn zeta_local_checked(f: &SupportedPoly, check: bool) -> Result<LocalZeta> {
    let polytope = build_polytope(f)?;
    let expr = zeta_from_polytope(&polytope)?;
    let (certification, report) = if check {
        let report = is_nondegenerate(f)?;
        (report.overall.into(), Some(report))
    } else {
        (Certification::Skipped, None)
    };
    Ok(LocalZeta {
        polytope,
        expr,
        certification,
        report,
    })
}

/// Every pole of `z` is a pole of `z1` or `z2`, or `-1`.
pub fn theorem3_check(z: &ZetaExpr, z1: &ZetaExpr, z2: &ZetaExpr) -> Result<bool> {
    let poles =
        |e: &ZetaExpr| -> Result<BTreeSet<Rational>> { Ok(pole_table(&zeta_combine(e))?.poles().cloned().collect()) };
    if !(z.is_numeric() && z1.is_numeric() && z2.is_numeric()) {
        return Err(Error::NotNumeric);
    }
    let mut allowed = poles(z1)?;
    allowed.extend(poles(z2)?);
    allowed.insert(Rational::from_integer((-1).into()));
    Ok(poles(z)?.is_subset(&allowed))
}
