//! Rational functions in the zeta variable `s` with denominators kept as
//! products of linear factors `N*s + nu`.
//!
//! A [`ZetaExpr`] is a formal sum of terms `c * s^e / prod(N_j*s + nu_j)`.
//! [`zeta_combine`] brings it over a common denominator. In numeric mode
//! (no free parameters) factors are made primitive and common factors between
//! numerator and denominator are cancelled; in symbolic mode the result is
//! left uncancelled and equalities are decided by cross-multiplication.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use super::poly::SparsePoly;
use super::rational::Rational;
use super::univariate::UniPoly;
use crate::error::{Error, Result};

/// Name of the zeta variable.
pub const S: &str = "s";

/// The factor `n*s + nu`. Neither part may involve `s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearFactor {
    n: SparsePoly,
    nu: SparsePoly,
}

impl LinearFactor {
    pub fn new(n: SparsePoly, nu: SparsePoly) -> Self {
        debug_assert!(!n.contains_var(S) && !nu.contains_var(S));
        LinearFactor { n, nu }
    }

    pub fn numeric(n: i64, nu: i64) -> Self {
        Self::new(SparsePoly::from_int(n), SparsePoly::from_int(nu))
    }

    pub fn n(&self) -> &SparsePoly {
        &self.n
    }

    pub fn nu(&self) -> &SparsePoly {
        &self.nu
    }

    /// `0*s + 1`
    pub fn is_identity(&self) -> bool {
        self.n.is_zero() && self.nu.constant_value().is_some_and(|q| q.is_one())
    }

    pub fn is_numeric(&self) -> bool {
        self.n.is_constant() && self.nu.is_constant()
    }

    /// `(N, nu)` for a numeric factor.
    pub fn numeric_parts(&self) -> Option<(Rational, Rational)> {
        Some((self.n.constant_value()?, self.nu.constant_value()?))
    }

    pub fn to_poly(&self) -> SparsePoly {
        &(&self.n * &SparsePoly::var(S)) + &self.nu
    }

    /// `-nu/N` for a numeric factor with `N != 0`.
    pub fn pole(&self) -> Option<Rational> {
        let (n, nu) = self.numeric_parts()?;
        if n.is_zero() {
            return None;
        }
        Some(-nu / n)
    }

    /// True when both factors vanish at the same value of `s`:
    /// `N*nu' == N'*nu`.
    pub fn same_pole(&self, other: &LinearFactor) -> bool {
        &self.n * &other.nu == &other.n * &self.nu
    }

    pub fn specialize<'a, I>(&self, values: I) -> LinearFactor
    where
        I: IntoIterator<Item = (&'a str, &'a Rational)> + Clone,
    {
        LinearFactor::new(self.n.specialize(values.clone()), self.nu.specialize(values))
    }

    /// Writes a numeric factor as `scale * (N'*s + nu')` with `N', nu'`
    /// coprime integers and `N' > 0`. Returns `None` for the primitive part
    /// when `N = 0` (the factor is the constant `scale`).
    fn primitive_numeric(&self) -> Result<(Rational, Option<LinearFactor>)> {
        let (n, nu) = self.numeric_parts().ok_or(Error::NotNumeric)?;
        if n.is_zero() {
            if nu.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok((nu, None));
        }
        let l = n.denom().lcm(nu.denom());
        let ni = (&n * Rational::from_integer(l.clone())).to_integer();
        let nui = (&nu * Rational::from_integer(l)).to_integer();
        let mut g = ni.gcd(&nui);
        if ni.is_negative() {
            g = -g;
        }
        let (pn, pnu) = (&ni / &g, &nui / &g);
        let scale = n / Rational::from_integer(pn.clone());
        let factor = LinearFactor::new(
            SparsePoly::constant(Rational::from_integer(pn)),
            SparsePoly::constant(Rational::from_integer(pnu)),
        );
        Ok((scale, Some(factor)))
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_poly())
    }
}

/// One summand `coefficient * s^s_power / prod(denominator)`.
///
/// `s_power = 1` arises from the `s/(s+1)` prefactor, in which case `(s+1)`
/// is among the denominator factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTerm {
    pub coefficient: SparsePoly,
    pub s_power: u32,
    pub denominator: Vec<LinearFactor>,
}

impl ZetaTerm {
    pub fn new(coefficient: SparsePoly, denominator: impl IntoIterator<Item = LinearFactor>) -> Self {
        ZetaTerm {
            coefficient,
            s_power: 0,
            denominator: denominator.into_iter().filter(|f| !f.is_identity()).collect(),
        }
    }

    /// Multiplies the term by `s/(s+1)`.
    pub fn times_s_over_s_plus_one(mut self) -> Self {
        self.s_power += 1;
        self.denominator.push(LinearFactor::numeric(1, 1));
        self
    }

    pub fn numerator(&self) -> SparsePoly {
        &self.coefficient * &SparsePoly::var(S).pow(self.s_power)
    }

    /// No parameters other than `s`.
    pub fn is_numeric(&self) -> bool {
        self.coefficient.vars().iter().all(|v| v == S) && self.denominator.iter().all(LinearFactor::is_numeric)
    }

    /// Substitutes parameter values; factors that become constants are
    /// folded into the coefficient.
    pub fn specialize<'a, I>(&self, values: I) -> Result<ZetaTerm>
    where
        I: IntoIterator<Item = (&'a str, &'a Rational)> + Clone,
    {
        let mut coefficient = self.coefficient.specialize(values.clone());
        let mut denominator = Vec::new();
        for f in &self.denominator {
            let f = f.specialize(values.clone());
            if f.n.is_zero() {
                if let Some(q) = f.nu.constant_value() {
                    if q.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    coefficient = coefficient.scale(&q.recip());
                    continue;
                }
            }
            denominator.push(f);
        }
        Ok(ZetaTerm {
            coefficient,
            s_power: self.s_power,
            denominator,
        })
    }

    /// Value at a rational `s`; `None` at a pole or for symbolic terms.
    pub fn evaluate(&self, s: &Rational) -> Option<Rational> {
        let mut den = Rational::one();
        for f in &self.denominator {
            let (n, nu) = f.numeric_parts()?;
            den *= n * s + nu;
        }
        if den.is_zero() {
            return None;
        }
        let mut num = self.coefficient.evaluate([(S, s)])?;
        for _ in 0..self.s_power {
            num *= s;
        }
        Some(num / den)
    }
}

impl fmt::Display for ZetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = if self.coefficient.num_terms() > 1 {
            format!("({})", self.coefficient)
        } else {
            self.coefficient.to_string()
        };
        let num = match self.s_power {
            0 => coeff,
            p => {
                let sp = if p == 1 { "s".to_string() } else { format!("s^{p}") };
                match coeff.as_str() {
                    "1" => sp,
                    "-1" => format!("-{sp}"),
                    _ => format!("{coeff}*{sp}"),
                }
            }
        };
        write!(f, "{num}")?;
        match self.denominator.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", self.denominator[0]),
            _ => {
                let parts: Vec<String> = self.denominator.iter().map(|d| d.to_string()).collect();
                write!(f, "/({})", parts.join("*"))
            }
        }
    }
}

/// A formal sum of [`ZetaTerm`]s. The representation is not unique.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaExpr {
    terms: Vec<ZetaTerm>,
}

impl ZetaExpr {
    pub fn new(terms: Vec<ZetaTerm>) -> Self {
        ZetaExpr { terms }
    }

    pub fn terms(&self) -> &[ZetaTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn push(&mut self, term: ZetaTerm) {
        self.terms.push(term);
    }

    pub fn extend(&mut self, other: ZetaExpr) {
        self.terms.extend(other.terms);
    }

    /// Concatenation, i.e. the sum of the two functions.
    pub fn plus(&self, other: &ZetaExpr) -> ZetaExpr {
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out
    }

    pub fn scale(&self, c: &SparsePoly) -> ZetaExpr {
        ZetaExpr {
            terms: self
                .terms
                .iter()
                .map(|t| ZetaTerm {
                    coefficient: &t.coefficient * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn is_numeric(&self) -> bool {
        self.terms.iter().all(ZetaTerm::is_numeric)
    }

    pub fn specialize<'a, I>(&self, values: I) -> Result<ZetaExpr>
    where
        I: IntoIterator<Item = (&'a str, &'a Rational)> + Clone,
    {
        let terms = self
            .terms
            .iter()
            .map(|t| t.specialize(values.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(ZetaExpr { terms })
    }

    /// Sum of the term values at `s`; `None` if any term has a pole there.
    pub fn evaluate(&self, s: &Rational) -> Option<Rational> {
        self.terms
            .iter()
            .try_fold(Rational::zero(), |acc, t| Some(acc + t.evaluate(s)?))
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let text = t.to_string();
            if idx > 0 {
                match text.strip_prefix('-') {
                    Some(rest) => write!(f, " - {rest}")?,
                    None => write!(f, " + {text}")?,
                }
            } else {
                write!(f, "{text}")?;
            }
        }
        Ok(())
    }
}

/// `numerator / prod(factor^multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedRatFunc {
    numerator: SparsePoly,
    denominator: BTreeMap<LinearFactor, u32>,
    cleared: bool,
}

impl NormalizedRatFunc {
    pub fn new(numerator: SparsePoly, factors: impl IntoIterator<Item = LinearFactor>) -> Self {
        let mut denominator = BTreeMap::new();
        for f in factors.into_iter().filter(|f| !f.is_identity()) {
            *denominator.entry(f).or_insert(0) += 1;
        }
        NormalizedRatFunc {
            numerator,
            denominator,
            cleared: false,
        }
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.numerator
    }

    /// Distinct factors with their multiplicities.
    pub fn denominator(&self) -> impl Iterator<Item = (&LinearFactor, u32)> {
        self.denominator.iter().map(|(f, m)| (f, *m))
    }

    pub fn denominator_poly(&self) -> SparsePoly {
        self.denominator
            .iter()
            .fold(SparsePoly::one(), |acc, (f, m)| &acc * &f.to_poly().pow(*m))
    }

    pub fn cleared(&self) -> bool {
        self.cleared
    }

    pub fn is_numeric(&self) -> bool {
        self.numerator.vars().iter().all(|v| v == S) && self.denominator.keys().all(LinearFactor::is_numeric)
    }

    /// Numerator as a dense polynomial in `s` (numeric mode only).
    pub fn numerator_univariate(&self) -> Option<UniPoly> {
        UniPoly::from_sparse(&self.numerator, S)
    }

    pub fn evaluate(&self, s: &Rational) -> Option<Rational> {
        let num = self.numerator.evaluate([(S, s)])?;
        let den = self.denominator_poly().evaluate([(S, s)])?;
        if den.is_zero() {
            return None;
        }
        Some(num / den)
    }
}

impl fmt::Display for NormalizedRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.to_string();
        if !self.denominator.is_empty() && (self.numerator.num_terms() > 1 || num.contains('/')) {
            write!(f, "({num})")?;
        } else {
            write!(f, "{num}")?;
        }
        let parts: Vec<String> = self
            .denominator
            .iter()
            .map(|(fac, m)| if *m == 1 { fac.to_string() } else { format!("{fac}^{m}") })
            .collect();
        match parts.len() {
            0 => Ok(()),
            1 => write!(f, "/{}", parts[0]),
            _ => write!(f, "/({})", parts.join("*")),
        }
    }
}

/// Anything that denotes a rational function in `s`.
pub trait AsFraction {
    fn as_fraction(&self) -> NormalizedRatFunc;
}

impl AsFraction for NormalizedRatFunc {
    fn as_fraction(&self) -> NormalizedRatFunc {
        self.clone()
    }
}

impl AsFraction for ZetaExpr {
    fn as_fraction(&self) -> NormalizedRatFunc {
        let terms = self
            .terms
            .iter()
            .map(|t| (t.numerator(), count_factors(&t.denominator)))
            .collect();
        over_common_denominator(terms)
    }
}

fn count_factors(factors: &[LinearFactor]) -> BTreeMap<LinearFactor, u32> {
    let mut out = BTreeMap::new();
    for f in factors.iter().filter(|f| !f.is_identity()) {
        *out.entry(f.clone()).or_insert(0) += 1;
    }
    out
}

/// Sums `numerator_t / prod(factors_t)` over the least common multiset of factors.
fn over_common_denominator(terms: Vec<(SparsePoly, BTreeMap<LinearFactor, u32>)>) -> NormalizedRatFunc {
    let mut lcm: BTreeMap<LinearFactor, u32> = BTreeMap::new();
    for (_, factors) in &terms {
        for (f, m) in factors {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*m);
        }
    }
    let polys: BTreeMap<&LinearFactor, SparsePoly> = lcm.keys().map(|f| (f, f.to_poly())).collect();
    let mut numerator = SparsePoly::zero();
    for (num, factors) in terms {
        if num.is_zero() {
            continue;
        }
        let mut t = num;
        for (f, m) in &lcm {
            let missing = m - factors.get(f).copied().unwrap_or(0);
            if missing > 0 {
                t = &t * &polys[f].pow(missing);
            }
        }
        numerator = &numerator + &t;
    }
    NormalizedRatFunc {
        numerator,
        denominator: lcm,
        cleared: false,
    }
}

/// Cancels every denominator factor that divides the numerator (numeric mode).
fn clear_common_factors(f: &mut NormalizedRatFunc) {
    let Some(mut num) = f.numerator_univariate() else {
        return;
    };
    if num.is_zero() {
        f.denominator.clear();
        f.cleared = true;
        return;
    }
    for (fac, mult) in f.denominator.iter_mut() {
        let lin = UniPoly::from_sparse(&fac.to_poly(), S).expect("numeric factor");
        while *mult > 0 {
            match num.div_exact(&lin) {
                Some(q) => {
                    num = q;
                    *mult -= 1;
                }
                None => break,
            }
        }
    }
    f.denominator.retain(|_, m| *m > 0);
    f.numerator = num.to_sparse(S);
    f.cleared = true;
}

/// Brings all terms over a common denominator.
///
/// Numeric input additionally has its factors made primitive (`gcd(N, nu) = 1`,
/// `N > 0`, constants folded into the numerator) and common factors cancelled.
pub fn zeta_combine(z: &ZetaExpr) -> NormalizedRatFunc {
    if !z.is_numeric() {
        return z.as_fraction();
    }
    let mut terms = Vec::with_capacity(z.len());
    for t in &z.terms {
        let mut num = t.numerator();
        let mut factors = BTreeMap::new();
        for f in &t.denominator {
            // Numeric terms built from lattice data never hit N = nu = 0.
            let (scale, prim) = f.primitive_numeric().expect("numeric factor with nonzero value");
            num = num.scale(&scale.recip());
            if let Some(p) = prim {
                *factors.entry(p).or_insert(0) += 1;
            }
        }
        terms.push((num, factors));
    }
    let mut out = over_common_denominator(terms);
    clear_common_factors(&mut out);
    out
}

/// Equality of rational functions by cross-multiplication.
pub fn ratfunc_equal(x: &impl AsFraction, y: &impl AsFraction) -> bool {
    let x = x.as_fraction();
    let y = y.as_fraction();
    let mut lcm = x.denominator.clone();
    for (f, m) in &y.denominator {
        let e = lcm.entry(f.clone()).or_insert(0);
        *e = (*e).max(*m);
    }
    let lift = |g: &NormalizedRatFunc| {
        lcm.iter().fold(g.numerator.clone(), |acc, (f, m)| {
            let have = g.denominator.get(f).copied().unwrap_or(0);
            if *m > have {
                &acc * &f.to_poly().pow(m - have)
            } else {
                acc
            }
        })
    };
    lift(&x) == lift(&y)
}

/// Exact division of the numerator by `divisor` (as a polynomial in `s`
/// whose coefficients are parameter polynomials). The denominator is unchanged.
pub fn divide_by_linear(f: &NormalizedRatFunc, divisor: &LinearFactor) -> Result<NormalizedRatFunc> {
    if divisor.n.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let not_divisible = || Error::NotDivisible(divisor.to_string());
    let coeffs = f.numerator.coefficients_in(S);
    let deg = coeffs.len() - 1;
    if f.numerator.is_zero() {
        return Ok(f.clone());
    }
    if deg == 0 {
        return Err(not_divisible());
    }
    // Synthetic division from the top: (N s + nu) * sum q_e s^e.
    let mut rem = coeffs;
    let mut quot = vec![SparsePoly::zero(); deg];
    for e in (1..=deg).rev() {
        let q = rem[e].div_exact(&divisor.n).ok_or_else(not_divisible)?;
        rem[e - 1] = &rem[e - 1] - &(&divisor.nu * &q);
        quot[e - 1] = q;
    }
    if !rem[0].is_zero() {
        return Err(not_divisible());
    }
    Ok(NormalizedRatFunc {
        numerator: SparsePoly::from_coefficients_in(S, &quot),
        denominator: f.denominator.clone(),
        cleared: f.cleared,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleEntry {
    pub pole: Rational,
    pub order: u32,
}

/// Poles with their orders, sorted by pole value descending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleTable {
    entries: Vec<PoleEntry>,
}

impl PoleTable {
    pub fn entries(&self) -> &[PoleEntry] {
        &self.entries
    }

    pub fn poles(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter().map(|e| &e.pole)
    }

    pub fn contains(&self, pole: &Rational) -> bool {
        self.entries.iter().any(|e| &e.pole == pole)
    }

    pub fn order_of(&self, pole: &Rational) -> u32 {
        self.entries.iter().find(|e| &e.pole == pole).map_or(0, |e| e.order)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for PoleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{} (order {})", e.pole, e.order))
            .collect();
        if parts.is_empty() {
            write!(f, "none")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Poles of a numeric rational function: for each candidate `-nu/N`, the
/// denominator multiplicity minus the vanishing order of the numerator.
pub fn pole_table(f: &NormalizedRatFunc) -> Result<PoleTable> {
    if !f.is_numeric() {
        return Err(Error::NotNumeric);
    }
    let num = f.numerator_univariate().ok_or(Error::NotNumeric)?;
    if num.is_zero() {
        return Ok(PoleTable::default());
    }
    let mut candidates: BTreeMap<Rational, u32> = BTreeMap::new();
    for (fac, mult) in &f.denominator {
        if let Some(p) = fac.pole() {
            *candidates.entry(p).or_insert(0) += mult;
        }
    }
    let mut entries: Vec<PoleEntry> = candidates
        .into_iter()
        .filter_map(|(pole, mult)| {
            let vanish = num.vanishing_order(&pole);
            (mult > vanish).then(|| PoleEntry {
                order: mult - vanish,
                pole,
            })
        })
        .collect();
    entries.sort_by(|x, y| y.pole.cmp(&x.pole));
    Ok(PoleTable { entries })
}

/// Integer `(N, nu)` of a numeric factor, if both are integers.
pub fn integer_parts(f: &LinearFactor) -> Option<(BigInt, BigInt)> {
    let (n, nu) = f.numeric_parts()?;
    (n.is_integer() && nu.is_integer()).then(|| (n.to_integer(), nu.to_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn lf(n: i64, nu: i64) -> LinearFactor {
        LinearFactor::numeric(n, nu)
    }

    fn term(c: i64, factors: &[(i64, i64)]) -> ZetaTerm {
        ZetaTerm::new(SparsePoly::from_int(c), factors.iter().map(|(n, nu)| lf(*n, *nu)))
    }

    fn spoly(coeffs: &[i64]) -> SparsePoly {
        UniPoly::from_ints(coeffs).to_sparse(S)
    }

    #[test]
    fn difference_of_simple_fractions() {
        let z = ZetaExpr::new(vec![term(1, &[(1, 1)]), term(-1, &[(1, 2)])]);
        let f = zeta_combine(&z);
        assert_eq!(f.numerator(), &SparsePoly::from_int(1));
        let den: Vec<_> = f.denominator().map(|(f, m)| (f.clone(), m)).collect();
        assert_eq!(den, vec![(lf(1, 1), 1), (lf(1, 2), 1)]);
        assert!(f.cleared());
    }

    #[test]
    fn single_term_is_identity() {
        let f = zeta_combine(&ZetaExpr::new(vec![term(5, &[(10, 7)])]));
        assert_eq!(f.numerator(), &SparsePoly::from_int(5));
        assert_eq!(f.to_string(), "5/(10*s+7)");
    }

    #[test]
    fn non_primitive_factors_are_normalized() {
        // 2/(2s+2) - 2s/((2s+2)(s+1)) = 1/(s+1)^2
        let a = term(2, &[(2, 2)]);
        let b = term(-2, &[(2, 2)]).times_s_over_s_plus_one();
        let f = zeta_combine(&ZetaExpr::new(vec![a, b]));
        assert_eq!(f.to_string(), "1/(s+1)^2");
    }

    #[test]
    fn zero_factor_folds_into_constant() {
        let f = zeta_combine(&ZetaExpr::new(vec![term(3, &[(0, 3), (1, 1)])]));
        assert_eq!(f.to_string(), "1/(s+1)");
    }

    #[test]
    fn division_by_linear() {
        let f = NormalizedRatFunc::new(&spoly(&[3, 5]) * &spoly(&[1, 1]), [lf(1, 2)]);
        let q = divide_by_linear(&f, &lf(5, 3)).unwrap();
        assert_eq!(q.numerator(), &spoly(&[1, 1]));
        let f = NormalizedRatFunc::new(spoly(&[1, 0, 1]), []);
        assert!(matches!(divide_by_linear(&f, &lf(1, 1)), Err(Error::NotDivisible(_))));
        assert!(matches!(divide_by_linear(&f, &lf(0, 1)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn symbolic_division() {
        let a = SparsePoly::var("a");
        let s = SparsePoly::var(S);
        let div = LinearFactor::new(&a + &SparsePoly::one(), SparsePoly::from_int(3));
        let other = &(&s * &a) - &SparsePoly::one();
        let f = NormalizedRatFunc::new(&div.to_poly() * &other, []);
        let q = divide_by_linear(&f, &div).unwrap();
        assert_eq!(q.numerator(), &other);
    }

    #[test]
    fn double_pole() {
        let f = NormalizedRatFunc::new(SparsePoly::one(), [lf(1, 1), lf(1, 1)]);
        let t = pole_table(&f).unwrap();
        assert_eq!(
            t.entries(),
            &[PoleEntry {
                pole: int(-1),
                order: 2
            }]
        );
    }

    #[test]
    fn cusp_poles_sorted_descending() {
        let f = NormalizedRatFunc::new(spoly(&[5, 4]), [lf(1, 1), lf(6, 5)]);
        let t = pole_table(&f).unwrap();
        let poles: Vec<_> = t.poles().cloned().collect();
        assert_eq!(poles, vec![rat(-5, 6), int(-1)]);
    }

    #[test]
    fn instance_poles() {
        let f = NormalizedRatFunc::new(spoly(&[56, 81, 30]), [lf(1, 1), lf(10, 7), lf(15, 8)]);
        let t = pole_table(&f).unwrap();
        let poles: Vec<_> = t.poles().cloned().collect();
        assert_eq!(poles, vec![rat(-8, 15), rat(-7, 10), int(-1)]);
        assert!(t.entries().iter().all(|e| e.order == 1));
        assert!(!t.contains(&rat(-3, 5)));
    }

    #[test]
    fn pole_cancelled_by_numerator() {
        let f = NormalizedRatFunc::new(spoly(&[1, 1]), [lf(1, 1), lf(2, 1)]);
        let t = pole_table(&f).unwrap();
        assert_eq!(
            t.entries(),
            &[PoleEntry {
                pole: rat(-1, 2),
                order: 1
            }]
        );
    }

    #[test]
    fn symbolic_input_rejected_by_pole_table() {
        let f = NormalizedRatFunc::new(SparsePoly::var("a"), [lf(1, 1)]);
        assert_eq!(pole_table(&f), Err(Error::NotNumeric));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let z = ZetaExpr::new(vec![term(1, &[(1, 1)]), term(-1, &[(1, 2)])]);
        let y = NormalizedRatFunc::new(SparsePoly::one(), [lf(1, 1), lf(1, 2)]);
        assert!(ratfunc_equal(&z, &y));
        assert!(ratfunc_equal(&z, &z));
        let w = ZetaExpr::new(vec![term(2, &[(1, 1)]), term(-1, &[(1, 2)])]);
        assert!(!ratfunc_equal(&z, &w));
        // same function written with a non-primitive factor
        let v = ZetaExpr::new(vec![term(2, &[(2, 2)]), term(-1, &[(1, 2)])]);
        assert!(ratfunc_equal(&z, &v));
    }

    #[test]
    fn same_pole_test() {
        assert!(lf(2, 2).same_pole(&lf(1, 1)));
        assert!(!lf(10, 7).same_pole(&lf(15, 8)));
    }

    #[test]
    fn term_display() {
        let t = term(-5, &[(10, 7), (15, 8)]).times_s_over_s_plus_one();
        assert_eq!(t.to_string(), "-5*s/((10*s+7)*(15*s+8)*(s+1))");
        let z = ZetaExpr::new(vec![term(3, &[(15, 8)]), t]);
        assert_eq!(z.to_string(), "3/(15*s+8) - 5*s/((10*s+7)*(15*s+8)*(s+1))");
    }

    #[test]
    fn specialize_drops_trivial_factors() {
        let i = SparsePoly::var("i");
        let t = ZetaTerm::new(SparsePoly::var("b"), [LinearFactor::new(i, SparsePoly::one())]);
        let zero = int(0);
        let three = int(3);
        let spec = t.specialize([("i", &zero), ("b", &three)]).unwrap();
        assert!(spec.denominator.is_empty());
        assert_eq!(spec.coefficient, SparsePoly::from_int(3));
    }
}
