//! Newton nondegeneracy: for every compact face `F` the logarithmic
//! partials `x_i d/dx_i f_F` have no common zero on the torus.
//!
//! Vertices are always fine. Edges reduce to square-freeness of a
//! univariate polynomial, decided exactly. Two-dimensional faces are
//! flattened to a polynomial `g(u, v)` by a unimodular change of exponents
//! and certified when the resultants `Res_v(g, g_u)` and `Res_v(g, g_v)`
//! share no root with `u != 0`; otherwise the verdict is left open.

use std::fmt;

use num::{Integer, Zero};

use crate::algebra::univariate::is_squarefree;
use crate::algebra::{Rational, UniPoly};
use crate::error::Result;
use crate::polytope::{build_polytope, CompactFace, LatticePoint, NewtonPolytope, SupportedPoly};

/// Ordered from best to worst.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Nondegenerate,
    PossiblyDegenerate,
    Degenerate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Nondegenerate => "nondegenerate",
            Verdict::PossiblyDegenerate => "possibly degenerate",
            Verdict::Degenerate => "degenerate",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCheck {
    pub verdict: Verdict,
    /// For a degenerate edge the repeated factor `gcd(p, p')`; for an
    /// inconclusive 2-face the common factor of the two resultants.
    pub witness: Option<UniPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVerdict {
    /// Index into [`NewtonPolytope::compact_faces`].
    pub face: usize,
    pub dim: usize,
    pub check: FaceCheck,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegReport {
    pub faces: Vec<FaceVerdict>,
    pub overall: Verdict,
}

/// The terms of `f` whose exponents lie on `face`.
pub fn face_polynomial(f: &SupportedPoly, poly: &NewtonPolytope, face: &CompactFace) -> SupportedPoly {
    let on_face = |p: &LatticePoint| poly.containing_facets(face).all(|fa| fa.contains(p));
    let terms: Vec<(LatticePoint, Rational)> = f
        .terms()
        .filter(|(p, _)| on_face(p))
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    SupportedPoly::new(f.dim(), terms).expect("a compact face contains its vertices")
}

/// Verdict for one compact face given its face polynomial.
pub fn check_face(f_face: &SupportedPoly, face: &CompactFace) -> FaceCheck {
    match face.dim {
        0 => FaceCheck {
            verdict: Verdict::Nondegenerate,
            witness: None,
        },
        1 => check_edge(f_face, face),
        _ => check_two_face(f_face, face),
    }
}

/// Writes `f_face = x^v0 * p(x^delta)` with `delta` the primitive direction
/// of the edge and returns `p`.
pub fn edge_polynomial(f_face: &SupportedPoly, face: &CompactFace) -> UniPoly {
    let v0 = face.vertices[0].coords();
    let diff: Vec<i64> = face.vertices[1].coords().iter().zip(v0).map(|(a, b)| a - b).collect();
    let g = diff.iter().fold(0i64, |g, x| g.gcd(x));
    let axis = diff.iter().position(|x| *x != 0).expect("edge has distinct endpoints");
    let step = diff[axis] / g;
    let mut coeffs = vec![Rational::zero(); g as usize + 1];
    for (p, c) in f_face.terms() {
        let t = (p.coords()[axis] - v0[axis]) / step;
        coeffs[t as usize] += c;
    }
    UniPoly::new(coeffs)
}

fn check_edge(f_face: &SupportedPoly, face: &CompactFace) -> FaceCheck {
    let p = edge_polynomial(f_face, face);
    if is_squarefree(&p) {
        FaceCheck {
            verdict: Verdict::Nondegenerate,
            witness: None,
        }
    } else {
        FaceCheck {
            verdict: Verdict::Degenerate,
            witness: Some(p.gcd(&p.derivative())),
        }
    }
}

/// A polynomial in `u, v`: entry `e` is the coefficient of `v^e`, a polynomial in `u`.
pub type Bivariate = Vec<UniPoly>;

fn trim(mut b: Bivariate) -> Bivariate {
    while b.last().is_some_and(UniPoly::is_zero) {
        b.pop();
    }
    b
}

/// Unimodular `U` (and its inverse) with `l * U = (+-gcd(l), 0, 0)`.
fn kernel_basis(l: &[i64]) -> ([[i64; 3]; 3], [[i64; 3]; 3]) {
    let mut row = [l[0], l[1], l[2]];
    let mut u = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut uinv = u;
    loop {
        let nonzero: Vec<usize> = (0..3).filter(|i| row[*i] != 0).collect();
        if nonzero.len() <= 1 {
            let i = nonzero.first().copied().unwrap_or(0);
            if i != 0 {
                row.swap(0, i);
                for r in u.iter_mut() {
                    r.swap(0, i);
                }
                uinv.swap(0, i);
            }
            return (u, uinv);
        }
        let piv = *nonzero.iter().min_by_key(|i| row[**i].abs()).expect("nonempty");
        for j in nonzero.into_iter().filter(|j| *j != piv) {
            let q = Integer::div_floor(&row[j], &row[piv]);
            row[j] -= q * row[piv];
            for r in u.iter_mut() {
                r[j] -= q * r[piv];
            }
            for c in 0..3 {
                uinv[piv][c] += q * uinv[j][c];
            }
        }
    }
}

/// Flattens the face polynomial of a 2-dimensional face to `g(u, v)` with
/// `f_face = monomial * g(x^b1, x^b2)`, shifted so that `g` is divisible by
/// neither `u` nor `v`.
pub fn flatten_two_face(f_face: &SupportedPoly, face: &CompactFace) -> Bivariate {
    let v0 = face.vertices[0].coords();
    let d1: Vec<i64> = face.vertices[1].coords().iter().zip(v0).map(|(a, b)| a - b).collect();
    let d2: Vec<i64> = face.vertices[2].coords().iter().zip(v0).map(|(a, b)| a - b).collect();
    let normal = [
        d1[1] * d2[2] - d1[2] * d2[1],
        d1[2] * d2[0] - d1[0] * d2[2],
        d1[0] * d2[1] - d1[1] * d2[0],
    ];
    let (_, uinv) = kernel_basis(&normal);
    let coords: Vec<(i64, i64, &Rational)> = f_face
        .terms()
        .map(|(p, c)| {
            let w: Vec<i64> = p.coords().iter().zip(v0).map(|(a, b)| a - b).collect();
            let y = |r: usize| (0..3).map(|k| uinv[r][k] * w[k]).sum::<i64>();
            debug_assert_eq!(y(0), 0);
            (y(1), y(2), c)
        })
        .collect();
    let min_u = coords.iter().map(|t| t.0).min().unwrap_or(0);
    let min_v = coords.iter().map(|t| t.1).min().unwrap_or(0);
    let max_u = coords.iter().map(|t| t.0 - min_u).max().unwrap_or(0) as usize;
    let max_v = coords.iter().map(|t| t.1 - min_v).max().unwrap_or(0) as usize;
    let mut grid = vec![vec![Rational::zero(); max_u + 1]; max_v + 1];
    for (a, b, c) in coords {
        grid[(b - min_v) as usize][(a - min_u) as usize] += c;
    }
    trim(grid.into_iter().map(UniPoly::new).collect())
}

pub fn d_du(g: &Bivariate) -> Bivariate {
    trim(g.iter().map(UniPoly::derivative).collect())
}

pub fn d_dv(g: &Bivariate) -> Bivariate {
    trim(
        g.iter()
            .enumerate()
            .skip(1)
            .map(|(e, c)| c.scale(&Rational::from_integer((e as i64).into())))
            .collect(),
    )
}

/// Resultant with respect to `v` (Sylvester determinant over `Q[u]`).
pub fn resultant_v(a: &Bivariate, b: &Bivariate) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return UniPoly::zero();
    }
    let (da, db) = (a.len() - 1, b.len() - 1);
    let size = da + db;
    if size == 0 {
        return UniPoly::one();
    }
    let mut m = vec![vec![UniPoly::zero(); size]; size];
    for i in 0..db {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().rev().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Fraction-free determinant over `Q[u]`.
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|i| !m[*i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

fn check_two_face(f_face: &SupportedPoly, face: &CompactFace) -> FaceCheck {
    let g = flatten_two_face(f_face, face);
    let r1 = resultant_v(&g, &d_du(&g)).strip_x_factors();
    let r2 = resultant_v(&g, &d_dv(&g)).strip_x_factors();
    let common = r1.gcd(&r2);
    if common.degree() == Some(0) {
        FaceCheck {
            verdict: Verdict::Nondegenerate,
            witness: None,
        }
    } else {
        FaceCheck {
            verdict: Verdict::PossiblyDegenerate,
            witness: Some(common),
        }
    }
}

/// Checks every compact face of `Gamma_+(f)`.
pub fn is_nondegenerate(f: &SupportedPoly) -> Result<NondegReport> {
    let poly = build_polytope(f)?;
    Ok(report_for(f, &poly))
}

pub fn report_for(f: &SupportedPoly, poly: &NewtonPolytope) -> NondegReport {
    let faces: Vec<FaceVerdict> = poly
        .compact_faces()
        .iter()
        .enumerate()
        .map(|(idx, face)| FaceVerdict {
            face: idx,
            dim: face.dim,
            check: check_face(&face_polynomial(f, poly, face), face),
        })
        .collect();
    let overall = faces
        .iter()
        .map(|f| f.check.verdict)
        .max()
        .unwrap_or(Verdict::Nondegenerate);
    NondegReport { faces, overall }
}
