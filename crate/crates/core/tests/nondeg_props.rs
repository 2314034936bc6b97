use num::complex::Complex64;
use num::ToPrimitive;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use topzeta::algebra::rational::int;
use topzeta::algebra::{Rational, UniPoly};
use topzeta::nondeg::{d_du, d_dv, face_polynomial, flatten_two_face, is_nondegenerate, Bivariate, Verdict};
use topzeta::parse_polynomial;
use topzeta::polytope::{build_polytope, SupportedPoly};

fn eval(g: &Bivariate, u: Complex64, v: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for coeff in g.iter().rev() {
        let mut c = Complex64::new(0.0, 0.0);
        for q in coeff.coeffs().iter().rev() {
            c = c * u + q.to_f64().unwrap();
        }
        acc = acc * v + c;
    }
    acc
}

/// Searches for `(u, v)` in the torus with `g = g_u = g_v = 0` by Newton
/// iteration on `(g_u, g_v)` from random starts.
fn find_torus_singularity(g: &Bivariate, rng: &mut StdRng) -> Option<(Complex64, Complex64)> {
    let gu = d_du(g);
    let gv = d_dv(g);
    let (guu, guv, gvv) = (d_du(&gu), d_dv(&gu), d_dv(&gv));
    for _ in 0..60 {
        let mut u = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let mut v = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        for _ in 0..80 {
            let (f1, f2) = (eval(&gu, u, v), eval(&gv, u, v));
            let (a, b, d) = (eval(&guu, u, v), eval(&guv, u, v), eval(&gvv, u, v));
            let det = a * d - b * b;
            if det.norm() < 1e-14 {
                break;
            }
            u -= (d * f1 - b * f2) / det;
            v -= (a * f2 - b * f1) / det;
            if !(u.is_finite() && v.is_finite()) || u.norm() > 1e6 || v.norm() > 1e6 {
                break;
            }
        }
        let residual = eval(g, u, v).norm() + eval(&gu, u, v).norm() + eval(&gv, u, v).norm();
        if residual < 1e-9 && u.norm() > 1e-4 && v.norm() > 1e-4 {
            return Some((u, v));
        }
    }
    None
}

fn two_face_singularities(f: &SupportedPoly, seed: u64) -> Vec<Option<(Complex64, Complex64)>> {
    let poly = build_polytope(f).unwrap();
    let mut rng = StdRng::seed_from_u64(seed);
    poly.compact_faces()
        .iter()
        .filter(|face| face.dim == 2)
        .map(|face| find_torus_singularity(&flatten_two_face(&face_polynomial(f, &poly, face), face), &mut rng))
        .collect()
}

/// `prod (x + t y)` as a binary form.
fn binary_form(roots: &[i64]) -> SupportedPoly {
    let mut coeffs = vec![int(1)];
    for t in roots {
        let mut next = vec![int(0); coeffs.len() + 1];
        for (e, c) in coeffs.iter().enumerate() {
            next[e] += c;
            next[e + 1] += c * int(*t);
        }
        coeffs = next;
    }
    let deg = roots.len() as i64;
    let terms = coeffs
        .into_iter()
        .enumerate()
        .map(|(e, c)| (vec![deg - e as i64, e as i64], c));
    SupportedPoly::new(2, terms).unwrap()
}

/// Roots in the torus; a repeated root at 0 only contributes a monomial.
fn nonzero_root() -> impl Strategy<Value = i64> {
    prop_oneof![-3i64..0, 1i64..4]
}

fn support3() -> impl Strategy<Value = SupportedPoly> {
    prop::collection::vec(((0i64..4, 0i64..4, 0i64..4), -3i64..4), 3..8).prop_filter_map("origin", |pts| {
        SupportedPoly::new(3, pts.into_iter().map(|((x, y, z), c)| (vec![x, y, z], int(c)))).ok()
    })
}

#[test]
fn newton_search_finds_a_planted_singularity() {
    // (x - z)^2 + (y - z)^2 is singular along x = y = z
    let f = parse_polynomial("x^2 + y^2 + 2*z^2 - 2*x*z - 2*y*z").unwrap();
    assert_ne!(is_nondegenerate(&f).unwrap().overall, Verdict::Nondegenerate);
    assert!(two_face_singularities(&f, 1).iter().any(Option::is_some));
}

#[test]
fn generic_cubic_face_is_certified() {
    let f = parse_polynomial("x^3 + y^3 + z^3 + x*y*z").unwrap();
    assert_eq!(is_nondegenerate(&f).unwrap().overall, Verdict::Nondegenerate);
    assert!(two_face_singularities(&f, 2).iter().all(Option::is_none));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn binary_forms_match_root_multiplicity(roots in prop::collection::vec(nonzero_root(), 1..7)) {
        let mut sorted = roots.clone();
        sorted.sort();
        let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
        let verdict = is_nondegenerate(&binary_form(&roots)).unwrap().overall;
        prop_assert_eq!(verdict == Verdict::Nondegenerate, distinct);
    }

    #[test]
    fn irreducible_quadratic_factors(q in prop::collection::vec(1i64..6, 1..3), lin in prop::collection::vec(nonzero_root(), 0..3)) {
        // prod (x^2 + q y^2) * prod (x + t y); squarefree unless a factor repeats
        let mut p = UniPoly::one();
        for c in &q {
            p = &p * &UniPoly::from_ints(&[*c, 0, 1]);
        }
        for t in &lin {
            p = &p * &UniPoly::from_ints(&[*t, 1]);
        }
        let deg = p.degree().unwrap() as i64;
        let terms: Vec<(Vec<i64>, Rational)> = p.coeffs().iter().enumerate().map(|(e, c)| (vec![e as i64, deg - e as i64], c.clone())).collect();
        let f = SupportedPoly::new(2, terms).unwrap();
        let mut qs = q.clone();
        qs.sort();
        let mut ls = lin.clone();
        ls.sort();
        let distinct = qs.windows(2).all(|w| w[0] != w[1]) && ls.windows(2).all(|w| w[0] != w[1]);
        prop_assert_eq!(is_nondegenerate(&f).unwrap().overall == Verdict::Nondegenerate, distinct);
    }

    #[test]
    fn certified_two_faces_have_no_torus_singularity(f in support3(), seed in 0u64..1000) {
        let poly = build_polytope(&f).unwrap();
        let report = is_nondegenerate(&f).unwrap();
        let found = two_face_singularities(&f, seed);
        let two_faces: Vec<_> = report.faces.iter().filter(|v| v.dim == 2).collect();
        prop_assert_eq!(two_faces.len(), found.len());
        for (verdict, hit) in two_faces.iter().zip(found) {
            if verdict.check.verdict == Verdict::Nondegenerate {
                prop_assert!(hit.is_none(), "face {:?} of {} certified but singular at {:?}", poly.compact_faces()[verdict.face].vertices, f, hit);
            }
        }
    }

    #[test]
    fn verdict_is_invariant_under_permuting_variables(f in support3()) {
        let base = is_nondegenerate(&f).unwrap().overall;
        for perm in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            let g = SupportedPoly::new(3, f.terms().map(|(p, c)| (perm.iter().map(|i| p.coords()[*i]).collect::<Vec<i64>>(), c.clone()))).unwrap();
            prop_assert_eq!(is_nondegenerate(&g).unwrap().overall, base);
        }
    }
}
