//! Randomized checks of the identities the zeta formula relies on.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::rational::int;
use crate::algebra::{pole_table, ratfunc_equal, zeta_combine, AsFraction, LinearFactor, Rational, SparsePoly};
use crate::algebra::{ZetaExpr, ZetaTerm};
use crate::error::Result;
use crate::family::{family_polynomial, FamilyParams};
use crate::polytope::{build_polytope, order_facets_around_vertex, NewtonPolytope, SupportedPoly};
use crate::zeta::j_vertex_from_cycle;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub pass: bool,
    pub detail: String,
}

/// `1/(s+alpha) - 1/(s+beta) = (beta-alpha)/((s+alpha)(s+beta))` for random
/// distinct rationals, with both simple poles surviving.
pub fn two_pole_identity(pairs: usize, seed: u64) -> CheckOutcome {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..pairs {
        let (alpha, beta) = loop {
            let a = Rational::new(rng.gen_range(-50..50).into(), rng.gen_range(1..12).into());
            let b = Rational::new(rng.gen_range(-50..50).into(), rng.gen_range(1..12).into());
            if a != b {
                break (a, b);
            }
        };
        let factor = |x: &Rational| LinearFactor::new(SparsePoly::one(), SparsePoly::constant(x.clone()));
        let diff = ZetaExpr::new(vec![
            ZetaTerm::new(SparsePoly::one(), [factor(&alpha)]),
            ZetaTerm::new(-SparsePoly::one(), [factor(&beta)]),
        ]);
        let claimed = ZetaExpr::new(vec![ZetaTerm::new(
            SparsePoly::constant(&beta - &alpha),
            [factor(&alpha), factor(&beta)],
        )]);
        let numerator_ok = diff.as_fraction().numerator().constant_value() == Some(&beta - &alpha);
        let poles_ok = pole_table(&zeta_combine(&diff)).map(|t| t.len() == 2).unwrap_or(false);
        if !(numerator_ok && poles_ok && ratfunc_equal(&diff, &claimed)) {
            failures += 1;
        }
    }
    CheckOutcome {
        pass: failures == 0,
        detail: format!("{pairs} random rational pairs, {failures} failures"),
    }
}

/// Every rotation and reflection of the facet cycle at `vertex` gives the same `J`.
pub fn fan_independent_at(poly: &NewtonPolytope, vertex: &[i64]) -> Result<bool> {
    let face = poly.find_vertex_face(vertex).ok_or(crate::Error::NotAVertex)?;
    if poly.ambient() != 3 {
        return Ok(true);
    }
    let cycle = order_facets_around_vertex(poly, face)?;
    let reference = zeta_combine(&j_vertex_from_cycle(poly, &cycle));
    let mut reversed = cycle.clone();
    reversed.reverse();
    Ok([cycle, reversed].iter().all(|c| {
        (0..c.len()).all(|k| {
            let rotated: Vec<usize> = c[k..].iter().chain(&c[..k]).copied().collect();
            ratfunc_equal(&zeta_combine(&j_vertex_from_cycle(poly, &rotated)), &reference)
        })
    }))
}

fn random_support(rng: &mut StdRng) -> SupportedPoly {
    loop {
        let count = rng.gen_range(3..8);
        let pts: Vec<(Vec<i64>, Rational)> = (0..count)
            .map(|_| ((0..3).map(|_| rng.gen_range(0..5)).collect(), int(rng.gen_range(1..4))))
            .collect();
        if let Ok(f) = SupportedPoly::new(3, pts) {
            return f;
        }
    }
}

/// Fan independence at the vertex `Q = (i, j, k + c r)` of the family
/// instance `(a,b,i,j,k,r) = (2,3,0,0,0,1)` and at every vertex of
/// `supports` random three-variable supports.
pub fn fan_independence(supports: usize, seed: u64) -> Result<CheckOutcome> {
    let p = FamilyParams::with_default_roots(2, 3, 1, 0, 0, 0)?;
    let poly = build_polytope(&family_polynomial(&p)?)?;
    let family_ok = fan_independent_at(&poly, &[p.i(), p.j(), p.k() + p.c() * p.r()])?;
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut vertices, mut wide, mut bad) = (0, 0, 0);
    for _ in 0..supports {
        let poly = build_polytope(&random_support(&mut rng))?;
        for v in poly.vertices() {
            vertices += 1;
            if poly
                .find_vertex_face(v.coords())
                .is_some_and(|f| f.containing.len() > 3)
            {
                wide += 1;
            }
            if !fan_independent_at(&poly, v.coords())? {
                bad += 1;
            }
        }
    }
    Ok(CheckOutcome {
        pass: family_ok && bad == 0,
        detail: format!(
            "vertex Q of the family: {family_ok}; {supports} random supports, {vertices} vertices \
             ({wide} with more than three facets), {bad} disagreements"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_pass() {
        assert!(two_pole_identity(20, 3).pass);
        assert!(fan_independence(5, 3).unwrap().pass);
    }
}
