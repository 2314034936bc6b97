//! The two-vertex family
//! `f = x^i y^j z^k * prod_t (x^a y^b + lambda_t z^c)`, `c = a + b`,
//! whose support lies on a segment, together with the closed-form zeta
//! functions of `f` and of the two singular points of the projective curve
//! `f = 0`.

use std::collections::BTreeMap;
use std::fmt;

use num::{Integer, One, Zero};

use crate::algebra::rational::int;
use crate::algebra::{
    divide_by_linear, pole_table, ratfunc_equal, zeta_combine, AsFraction, LinearFactor, PoleTable, Rational,
    SparsePoly, ZetaExpr, ZetaTerm,
};
use crate::error::{Error, Result};
use crate::polytope::{build_polytope, SupportedPoly};
use crate::zeta::{theorem3_check, zeta_local};

/// Names of the free parameters of the symbolic expressions.
pub const PARAMS: [&str; 6] = ["a", "b", "i", "j", "k", "r"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    a: i64,
    b: i64,
    r: i64,
    i: i64,
    j: i64,
    k: i64,
    lambdas: Vec<Rational>,
}

impl FamilyParams {
    pub fn new(a: i64, b: i64, r: i64, i: i64, j: i64, k: i64, lambdas: Vec<Rational>) -> Result<Self> {
        let bad = |m: &str| Err(Error::InvalidParams(m.to_string()));
        if a <= 0 || b <= 0 || r <= 0 {
            return bad("a, b, r must be positive");
        }
        if a.gcd(&b) != 1 {
            return bad("a and b must be coprime");
        }
        if [i, j, k].iter().any(|e| !(0..=1).contains(e)) {
            return bad("i, j, k must be 0 or 1");
        }
        if lambdas.len() != r as usize {
            return bad("need exactly r root ratios");
        }
        if lambdas.iter().any(Zero::is_zero) {
            return bad("root ratios must be nonzero");
        }
        for (t, l) in lambdas.iter().enumerate() {
            if lambdas[..t].contains(l) {
                return bad("root ratios must be distinct");
            }
        }
        Ok(FamilyParams {
            a,
            b,
            r,
            i,
            j,
            k,
            lambdas,
        })
    }

    /// Root ratios `1, 2, ..., r`.
    pub fn with_default_roots(a: i64, b: i64, r: i64, i: i64, j: i64, k: i64) -> Result<Self> {
        let lambdas = (1..=r.max(0)).map(int).collect();
        Self::new(a, b, r, i, j, k, lambdas)
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn r(&self) -> i64 {
        self.r
    }
    pub fn i(&self) -> i64 {
        self.i
    }
    pub fn j(&self) -> i64 {
        self.j
    }
    pub fn k(&self) -> i64 {
        self.k
    }
    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn c(&self) -> i64 {
        self.a + self.b
    }

    /// Degree of `f`.
    pub fn d(&self) -> i64 {
        self.i + self.j + self.k + self.c() * self.r
    }

    /// Lattice distance of the facet with normal `(c, 0, a)`.
    pub fn m(&self) -> i64 {
        self.c() * self.i + self.a * self.k + self.a * self.c() * self.r
    }

    /// Lattice distance of the facet with normal `(0, c, b)`.
    pub fn n(&self) -> i64 {
        self.c() * self.j + self.b * self.k + self.b * self.c() * self.r
    }

    /// Parameter values for [`ZetaExpr::specialize`].
    pub fn values(&self) -> Vec<(&'static str, Rational)> {
        let v = [self.a, self.b, self.i, self.j, self.k, self.r];
        PARAMS.iter().zip(v).map(|(name, x)| (*name, int(x))).collect()
    }

    /// The facet normals and `(N, nu)` expected of the Newton polyhedron.
    pub fn expected_facets(&self) -> Vec<(Vec<i64>, i64, i64)> {
        let (a, b, c) = (self.a, self.b, self.c());
        let mut out = vec![
            (vec![1, 0, 0], self.i, 1),
            (vec![0, 1, 0], self.j, 1),
            (vec![0, 0, 1], self.k, 1),
            (vec![c, 0, a], self.m(), a + c),
            (vec![0, c, b], self.n(), b + c),
        ];
        out.sort();
        out
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.lambdas.iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "a={} b={} r={} i={} j={} k={} lambdas=[{}]",
            self.a,
            self.b,
            self.r,
            self.i,
            self.j,
            self.k,
            ls.join(",")
        )
    }
}

/// Every valid parameter choice with `a <= a_max`, `b <= b_max`,
/// `r <= r_max` and `i, j, k` in `{0, 1}`, with default root ratios, in
/// lexicographic order of `(a, b, r, i, j, k)`.
pub fn sweep(a_max: i64, b_max: i64, r_max: i64) -> Vec<FamilyParams> {
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            if a.gcd(&b) != 1 {
                continue;
            }
            for r in 1..=r_max {
                for bits in 0..8 {
                    let (i, j, k) = (bits >> 2 & 1, bits >> 1 & 1, bits & 1);
                    out.push(FamilyParams::with_default_roots(a, b, r, i, j, k).expect("valid by construction"));
                }
            }
        }
    }
    out
}

/// `x^i y^j z^k * prod_t (x^a y^b + lambda_t z^c)`, expanded.
pub fn family_polynomial(p: &FamilyParams) -> Result<SupportedPoly> {
    let mut acc: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    acc.insert(vec![p.i, p.j, p.k], Rational::one());
    for l in &p.lambdas {
        let mut next: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
        for (e, q) in &acc {
            let left = vec![e[0] + p.a, e[1] + p.b, e[2]];
            let right = vec![e[0], e[1], e[2] + p.c()];
            *next.entry(left).or_insert_with(Rational::zero) += q;
            *next.entry(right).or_insert_with(Rational::zero) += q * l;
        }
        acc = next;
    }
    SupportedPoly::new(3, acc)
}

/// The local equations of the curve's two singular points: `y = 1` (the
/// point `[0:1:0]`, variables `x, z`) and `x = 1` (the point `[1:0:0]`,
/// variables `y, z`).
pub fn singular_local_equations(p: &FamilyParams) -> Result<(SupportedPoly, SupportedPoly)> {
    let f = family_polynomial(p)?;
    let chart = |keep: [usize; 2]| {
        SupportedPoly::new(
            2,
            f.terms()
                .map(|(e, q)| (vec![e.coords()[keep[0]], e.coords()[keep[1]]], q.clone())),
        )
    };
    Ok((chart([0, 2])?, chart([1, 2])?))
}

/// The zeta functions of `f` and of its two singular points together with
/// the remaining global contribution, over the parameters `a, b, i, j, k, r`.
#[derive(Clone, Debug)]
pub struct SymbolicQuadruple {
    pub z: ZetaExpr,
    pub z1: ZetaExpr,
    pub z2: ZetaExpr,
    pub rest: ZetaExpr,
}

struct Params {
    a: SparsePoly,
    b: SparsePoly,
    c: SparsePoly,
    r: SparsePoly,
    /// `i s + 1`, `j s + 1`, `k s + 1`
    fi: LinearFactor,
    fj: LinearFactor,
    fk: LinearFactor,
    /// `m s + a + c`, `n s + b + c`
    fm: LinearFactor,
    fn_: LinearFactor,
    d: SparsePoly,
}

fn params() -> Params {
    let v = SparsePoly::var;
    let (a, b, i, j, k, r) = (v("a"), v("b"), v("i"), v("j"), v("k"), v("r"));
    let c = &a + &b;
    let m = &(&(&c * &i) + &(&(&c * &a) * &r)) + &(&a * &k);
    let n = &(&(&c * &j) + &(&(&c * &b) * &r)) + &(&b * &k);
    let d = &(&(&i + &j) + &k) + &(&c * &r);
    let one = SparsePoly::one();
    Params {
        fi: LinearFactor::new(i, one.clone()),
        fj: LinearFactor::new(j, one.clone()),
        fk: LinearFactor::new(k, one),
        fm: LinearFactor::new(m, &a + &c),
        fn_: LinearFactor::new(n, &b + &c),
        a,
        b,
        c,
        r,
        d,
    }
}

fn term(coefficient: SparsePoly, factors: &[&LinearFactor]) -> ZetaTerm {
    ZetaTerm::new(coefficient, factors.iter().map(|f| (*f).clone()))
}

pub fn symbolic_quadruple() -> SymbolicQuadruple {
    let p = params();
    let one = SparsePoly::one();
    let z = ZetaExpr::new(vec![
        term(-(&p.c * &p.r), &[&p.fm, &p.fn_]).times_s_over_s_plus_one(),
        term(p.b.clone(), &[&p.fi, &p.fj, &p.fn_]),
        term(&p.a * &p.c, &[&p.fn_, &p.fm, &p.fi]),
        term(&p.c * &p.c, &[&p.fk, &p.fn_, &p.fm]),
    ]);
    let chart = |f: &LinearFactor, g: &LinearFactor, w: &SparsePoly| {
        ZetaExpr::new(vec![
            term(-p.r.clone(), &[f]).times_s_over_s_plus_one(),
            term(p.c.clone(), &[f, &p.fk]),
            term(w.clone(), &[f, g]),
        ])
    };
    let z1 = chart(&p.fm, &p.fi, &p.a);
    let z2 = chart(&p.fn_, &p.fj, &p.b);
    let rest = ZetaExpr::new(vec![term(one, &[&p.fi, &p.fj])]);
    SymbolicQuadruple { z, z1, z2, rest }
}

/// `d s + 3`
pub fn degree_factor() -> LinearFactor {
    LinearFactor::new(params().d, SparsePoly::from_int(3))
}

/// The numerator of `z1 + z2 + rest` is divisible by `d s + 3` and the
/// quotient equals `z`.
pub fn cancellation_holds(q: &SymbolicQuadruple) -> bool {
    let sum = q.z1.plus(&q.z2).plus(&q.rest).as_fraction();
    match divide_by_linear(&sum, &degree_factor()) {
        Ok(quotient) => ratfunc_equal(&quotient, &q.z),
        Err(_) => false,
    }
}

pub fn verify_cancellation() -> bool {
    cancellation_holds(&symbolic_quadruple())
}

/// The two fan triangulations of the cone of facet normals at the vertex
/// `Q = (i, j, k + c r)`, with apex `(1,0,0)` and apex `(0,1,0)`.
pub fn jq_triangulations() -> (ZetaExpr, ZetaExpr) {
    let p = params();
    let from_x = ZetaExpr::new(vec![
        term(p.b.clone(), &[&p.fi, &p.fj, &p.fn_]),
        term(&p.a * &p.c, &[&p.fn_, &p.fm, &p.fi]),
    ]);
    let from_y = ZetaExpr::new(vec![
        term(&p.b * &p.c, &[&p.fj, &p.fn_, &p.fm]),
        term(p.a.clone(), &[&p.fm, &p.fi, &p.fj]),
    ]);
    (from_x, from_y)
}

pub fn verify_jq_equivalence() -> bool {
    let (lhs, rhs) = jq_triangulations();
    ratfunc_equal(&lhs, &rhs)
}

/// `Z * (d s + 3) = Z1 + Z2 + R` with the parameters specialized to `p`.
pub fn cancellation_holds_at(p: &FamilyParams) -> Result<bool> {
    let q = symbolic_quadruple();
    let values = p.values();
    let vals = || values.iter().map(|(n, x)| (*n, x));
    let sum = q.z1.plus(&q.z2).plus(&q.rest).specialize(vals())?;
    let scaled =
        q.z.specialize(vals())?
            .scale(&LinearFactor::numeric(p.d(), 3).to_poly());
    Ok(ratfunc_equal(&scaled, &sum))
}

/// [`verify_jq_equivalence`] after specializing the parameters to `p`.
pub fn jq_equivalent_at(p: &FamilyParams) -> Result<bool> {
    let (lhs, rhs) = jq_triangulations();
    let values = p.values();
    let vals = || values.iter().map(|(n, x)| (*n, x));
    Ok(ratfunc_equal(&lhs.specialize(vals())?, &rhs.specialize(vals())?))
}

/// How the candidate pole `-3/d` relates to the poles of `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidatePole {
    /// Not a pole of `Z`.
    Absent,
    /// A pole of `Z`, but equal to a pole of a singular point's zeta function.
    CoincidesWithChartPole,
    /// A pole of `Z` not explained by the singular points.
    Present,
}

#[derive(Clone, Debug)]
pub struct InstanceReport {
    pub params: FamilyParams,
    /// The Newton polyhedron has exactly the five expected facets.
    pub facet_table: bool,
    /// The three-variable zeta function equals the specialized `Z`.
    pub zeta_matches: bool,
    /// The chart zeta functions equal the specialized `Z1`, `Z2`.
    pub charts_match: bool,
    pub poles_explained: bool,
    pub candidate: CandidatePole,
    pub poles: PoleTable,
}

impl InstanceReport {
    pub fn passed(&self) -> bool {
        self.facet_table
            && self.zeta_matches
            && self.charts_match
            && self.poles_explained
            && self.candidate != CandidatePole::Present
    }

    /// `-3/d`
    pub fn candidate_pole(&self) -> Rational {
        Rational::new((-3).into(), self.params.d().into())
    }

    pub fn candidate_line(&self) -> String {
        let p = self.candidate_pole();
        match self.candidate {
            CandidatePole::Absent => format!("cancellation at s={p}: CONFIRMED ABSENT"),
            CandidatePole::CoincidesWithChartPole => {
                format!("cancellation at s={p}: CONFIRMED (coincides with singular-point pole)")
            }
            CandidatePole::Present => format!("cancellation at s={p}: FAILED (pole present)"),
        }
    }
}

fn poles_of(e: &ZetaExpr) -> Result<PoleTable> {
    pole_table(&zeta_combine(e))
}

/// Recomputes one family instance from scratch and compares it against the
/// closed forms.
pub fn end_to_end_instance_check(p: &FamilyParams) -> Result<InstanceReport> {
    let quad = symbolic_quadruple();
    let values = p.values();
    let vals = || values.iter().map(|(n, q)| (*n, q));
    let f = family_polynomial(p)?;

    let polytope = build_polytope(&f)?;
    let mut found: Vec<(Vec<i64>, i64, i64)> = polytope
        .facets()
        .iter()
        .map(|f| (f.normal.clone(), f.distance, f.nu))
        .collect();
    found.sort();
    let facet_table = found == p.expected_facets();

    let z = zeta_local(&f)?;
    let zeta_matches = ratfunc_equal(&z, &quad.z.specialize(vals())?);

    let (h1, h2) = singular_local_equations(p)?;
    let (z1, z2) = (zeta_local(&h1)?, zeta_local(&h2)?);
    let charts_match =
        ratfunc_equal(&z1, &quad.z1.specialize(vals())?) && ratfunc_equal(&z2, &quad.z2.specialize(vals())?);

    let poles_explained = theorem3_check(&z, &z1, &z2)?;
    let poles = poles_of(&z)?;
    let target = Rational::new((-3).into(), p.d().into());
    let candidate = if !poles.contains(&target) {
        CandidatePole::Absent
    } else if poles_of(&z1)?.contains(&target) || poles_of(&z2)?.contains(&target) {
        CandidatePole::CoincidesWithChartPole
    } else {
        CandidatePole::Present
    };
    Ok(InstanceReport {
        params: p.clone(),
        facet_table,
        zeta_matches,
        charts_match,
        poles_explained,
        candidate,
        poles,
    })
}
