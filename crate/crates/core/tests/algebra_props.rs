use proptest::prelude::*;

use topzeta::algebra::rational::{int, rat};
use topzeta::algebra::{
    divide_by_linear, pole_table, ratfunc_equal, zeta_combine, AsFraction, LinearFactor, NormalizedRatFunc, Rational,
    SparsePoly, UniPoly, ZetaExpr, ZetaTerm, S,
};

fn sparse_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6), 0..5).prop_map(|terms| {
        SparsePoly::from_terms(
            terms
                .into_iter()
                .map(|((e1, e2, e3), c)| ([("s", e1), ("a", e2), ("b", e3)], int(c))),
        )
    })
}

fn uni_poly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..7, 0..6).prop_map(|c| UniPoly::from_ints(&c))
}

fn factor() -> impl Strategy<Value = (i64, i64)> {
    (1i64..6, 1i64..9)
}

fn numeric_expr() -> impl Strategy<Value = ZetaExpr> {
    prop::collection::vec((-4i64..5, prop::collection::vec(factor(), 0..4), any::<bool>()), 1..5).prop_map(|terms| {
        ZetaExpr::new(
            terms
                .into_iter()
                .map(|(c, fs, prefactor)| {
                    let t = ZetaTerm::new(
                        SparsePoly::from_int(c),
                        fs.into_iter().map(|(n, nu)| LinearFactor::numeric(n, nu)),
                    );
                    if prefactor {
                        t.times_s_over_s_plus_one()
                    } else {
                        t
                    }
                })
                .collect(),
        )
    })
}

/// Sample points away from every pole the generators can produce.
fn samples() -> Vec<Rational> {
    vec![rat(1, 3), rat(2, 1), rat(7, 5), rat(-1, 7), rat(13, 2)]
}

proptest! {
    #[test]
    fn ring_axioms(p in sparse_poly(), q in sparse_poly(), r in sparse_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, SparsePoly::zero());
        prop_assert_eq!(&p * &SparsePoly::one(), p.clone());
    }

    #[test]
    fn exact_division_recovers_factor(p in sparse_poly(), q in sparse_poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }

    #[test]
    fn univariate_division(p in uni_poly(), q in uni_poly()) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn gcd_divides_both(p in uni_poly(), q in uni_poly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        let g = p.gcd(&q);
        prop_assert!(p.div_exact(&g).is_some());
        prop_assert!(q.div_exact(&g).is_some());
    }

    #[test]
    fn difference_of_simple_poles(alpha in -40i64..40, beta in -40i64..40) {
        prop_assume!(alpha != beta);
        let diff = ZetaExpr::new(vec![
            ZetaTerm::new(SparsePoly::one(), [LinearFactor::numeric(1, alpha)]),
            ZetaTerm::new(-SparsePoly::one(), [LinearFactor::numeric(1, beta)]),
        ]);
        let combined = zeta_combine(&diff);
        prop_assert_eq!(combined.numerator().clone(), SparsePoly::from_int(beta - alpha));
        prop_assert_eq!(combined.denominator().count(), 2);
    }

    #[test]
    fn combining_preserves_values(e in numeric_expr()) {
        let combined = zeta_combine(&e);
        let raw = e.as_fraction();
        for s in samples() {
            prop_assert_eq!(combined.evaluate(&s), e.evaluate(&s));
            prop_assert_eq!(raw.evaluate(&s), e.evaluate(&s));
        }
        prop_assert!(ratfunc_equal(&combined, &e));
    }

    #[test]
    fn divide_then_multiply(e in numeric_expr(), (n, nu) in factor()) {
        let lin = LinearFactor::numeric(n, nu);
        let f = e.as_fraction();
        let scaled = NormalizedRatFunc::new(&f.numerator().clone() * &lin.to_poly(), f.denominator().flat_map(|(g, m)| std::iter::repeat_n(g.clone(), m as usize)));
        let back = divide_by_linear(&scaled, &lin).unwrap();
        prop_assert_eq!(back.numerator(), f.numerator());
    }

    #[test]
    fn pole_table_ignores_matched_factors(e in numeric_expr(), (n, nu) in factor()) {
        let lin = LinearFactor::numeric(n, nu);
        let padded = ZetaExpr::new(e.terms().iter().map(|t| {
            let mut t = t.clone();
            t.coefficient = &t.coefficient * &lin.to_poly();
            t.denominator.push(lin.clone());
            t
        }).collect());
        prop_assert_eq!(pole_table(&zeta_combine(&padded)).unwrap(), pole_table(&zeta_combine(&e)).unwrap());
    }

    #[test]
    fn specializing_then_combining_commutes(a in 1i64..5, b in 1i64..5) {
        // (a s + b)/((a s + b)(s + a)) = 1/(s + a)
        let va = SparsePoly::var("a");
        let vb = SparsePoly::var("b");
        let t = ZetaTerm::new(
            &(&va * &SparsePoly::var(S)) + &vb,
            [LinearFactor::new(va.clone(), vb.clone()), LinearFactor::new(SparsePoly::one(), va.clone())],
        );
        let values = [("a", int(a)), ("b", int(b))];
        let special = ZetaExpr::new(vec![t]).specialize(values.iter().map(|(n, q)| (*n, q))).unwrap();
        let expected = ZetaExpr::new(vec![ZetaTerm::new(SparsePoly::one(), [LinearFactor::numeric(1, a)])]);
        prop_assert!(ratfunc_equal(&special, &expected));
        prop_assert_eq!(zeta_combine(&special).to_string(), zeta_combine(&expected).to_string());
    }
}
