//! Sparse multivariate polynomials with rational coefficients.
//!
//! Every value is kept in a canonical form: variables are listed in a fixed
//! global order (`s < a < b < i < j < k < r`, then any other name
//! alphabetically), only variables that actually occur are listed, and no
//! zero coefficient is stored. Structural equality is therefore polynomial
//! equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::rational::{pow, Rational};

/// Variables that get a fixed position in the ordering.
const KNOWN_VARS: [&str; 7] = ["s", "a", "b", "i", "j", "k", "r"];

fn var_cmp(x: &str, y: &str) -> Ordering {
    let rank = |v: &str| KNOWN_VARS.iter().position(|k| *k == v).unwrap_or(KNOWN_VARS.len());
    rank(x).cmp(&rank(y)).then_with(|| x.cmp(y))
}

fn union_vars(x: &[String], y: &[String]) -> Vec<String> {
    let mut out: Vec<String> = x.iter().chain(y).cloned().collect();
    out.sort_by(|p, q| var_cmp(p, q));
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Vec::new(), q);
        }
        SparsePoly {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::rational::int(n))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        SparsePoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(variable powers, coefficient)` pairs. Like
    /// monomials are collected.
    pub fn from_terms<'a, I, M>(terms: I) -> Self
    where
        I: IntoIterator<Item = (M, Rational)>,
        M: IntoIterator<Item = (&'a str, u32)>,
    {
        let mut acc = SparsePoly::zero();
        for (mono, coeff) in terms {
            let mut t = SparsePoly::constant(coeff);
            for (v, e) in mono {
                t = &t * &SparsePoly::var(v).pow(e);
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Iterates `(exponent vector, coefficient)` with exponents aligned to [`Self::vars`].
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn contains_var(&self, name: &str) -> bool {
        self.vars.iter().any(|v| v == name)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(idx) => self.terms.keys().map(|e| e[idx]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Re-expresses the exponent vectors over a superset of the variables.
    fn aligned_terms(&self, target: &[String]) -> BTreeMap<Vec<u32>, Rational> {
        if target == self.vars.as_slice() {
            return self.terms.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .expect("target must contain all variables")
            })
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0u32; target.len()];
                for (src, dst) in map.iter().enumerate() {
                    out[*dst] = e[src];
                }
                (out, c.clone())
            })
            .collect()
    }

    /// Restores the canonical form: drops zero coefficients and unused variables.
    fn from_raw(vars: Vec<String>, mut terms: BTreeMap<Vec<u32>, Rational>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len()).map(|i| terms.keys().any(|e| e[i] != 0)).collect();
        if used.iter().all(|u| *u) {
            return SparsePoly { vars, terms };
        }
        let keep: Vec<usize> = (0..vars.len()).filter(|i| used[*i]).collect();
        let new_vars = keep.iter().map(|i| vars[*i].clone()).collect();
        let new_terms = terms
            .into_iter()
            .map(|(e, c)| (keep.iter().map(|i| e[*i]).collect(), c))
            .collect();
        SparsePoly {
            vars: new_vars,
            terms: new_terms,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = SparsePoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `value` for the variable `name`.
    pub fn substitute(&self, name: &str, value: &SparsePoly) -> Self {
        if !self.contains_var(name) {
            return self.clone();
        }
        // Group by the power of `name`, then evaluate by Horner's rule.
        let coeffs = self.coefficients_in(name);
        let mut acc = SparsePoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Substitutes rational values for the named variables (partial evaluation).
    pub fn specialize<'a, I>(&self, values: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, &'a Rational)>,
    {
        let values: Vec<(usize, &Rational)> = values
            .into_iter()
            .filter_map(|(v, q)| self.var_index(v).map(|i| (i, q)))
            .collect();
        if values.is_empty() {
            return self.clone();
        }
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exp = e.clone();
            for (i, q) in &values {
                coeff *= pow(q, exp[*i]);
                exp[*i] = 0;
            }
            *terms.entry(exp).or_insert_with(Rational::zero) += coeff;
        }
        SparsePoly::from_raw(self.vars.clone(), terms)
    }

    /// Full evaluation; variables missing from `values` are treated as errors.
    pub fn evaluate<'a, I>(&self, values: I) -> Option<Rational>
    where
        I: IntoIterator<Item = (&'a str, &'a Rational)>,
    {
        self.specialize(values).constant_value()
    }

    /// Coefficients of this polynomial viewed as a polynomial in `name`;
    /// entry `e` is the coefficient of `name^e`.
    pub fn coefficients_in(&self, name: &str) -> Vec<SparsePoly> {
        let Some(idx) = self.var_index(name) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(name) as usize;
        let mut buckets: Vec<BTreeMap<Vec<u32>, Rational>> = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[idx] = 0;
            buckets[e[idx] as usize].insert(rest, c.clone());
        }
        buckets
            .into_iter()
            .map(|t| SparsePoly::from_raw(self.vars.clone(), t))
            .collect()
    }

    /// Inverse of [`Self::coefficients_in`].
    pub fn from_coefficients_in(name: &str, coeffs: &[SparsePoly]) -> Self {
        let x = SparsePoly::var(name);
        let mut acc = SparsePoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        acc
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact division in the polynomial ring, `None` when `divisor` does not
    /// divide `self`. Uses the division algorithm in lexicographic order; for
    /// a single divisor the remainder vanishes iff the division is exact.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        if divisor.is_zero() {
            return None;
        }
        if let Some(q) = divisor.constant_value() {
            return Some(self.scale(&q.recip()));
        }
        let vars = union_vars(&self.vars, &divisor.vars);
        let g = SparsePoly {
            vars: vars.clone(),
            terms: divisor.aligned_terms(&vars),
        };
        let mut rem = SparsePoly {
            vars: vars.clone(),
            terms: self.aligned_terms(&vars),
        };
        let (g_exp, g_coeff) = {
            let (e, c) = g.leading().expect("nonzero divisor");
            (e.clone(), c.clone())
        };
        let mut quot: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        while let Some((e, c)) = rem.leading() {
            if e.iter().zip(&g_exp).any(|(x, y)| x < y) {
                return None;
            }
            let t_exp: Vec<u32> = e.iter().zip(&g_exp).map(|(x, y)| x - y).collect();
            let t_coeff = c / &g_coeff;
            for (ge, gc) in &g.terms {
                let exp: Vec<u32> = ge.iter().zip(&t_exp).map(|(x, y)| x + y).collect();
                let entry = rem.terms.entry(exp.clone()).or_insert_with(Rational::zero);
                *entry -= gc * &t_coeff;
                if entry.is_zero() {
                    rem.terms.remove(&exp);
                }
            }
            quot.insert(t_exp, t_coeff);
        }
        Some(SparsePoly::from_raw(vars, quot))
    }

    fn combine(&self, other: &SparsePoly, negate: bool) -> SparsePoly {
        let vars = union_vars(&self.vars, &other.vars);
        let mut terms = self.aligned_terms(&vars);
        for (e, c) in other.aligned_terms(&vars) {
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        SparsePoly::from_raw(vars, terms)
    }

    fn product(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        let vars = union_vars(&self.vars, &other.vars);
        let lhs = self.aligned_terms(&vars);
        let rhs = other.aligned_terms(&vars);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &lhs {
            for (e2, c2) in &rhs {
                let exp: Vec<u32> = e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                *terms.entry(exp).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        SparsePoly::from_raw(vars, terms)
    }

    /// Terms in printing order: higher total degree first, ties broken
    /// lexicographically with `s` most significant.
    fn display_order(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(e1, _), (e2, _)| {
            let d1: u32 = e1.iter().sum();
            let d2: u32 = e2.iter().sum();
            d2.cmp(&d1).then_with(|| e2.cmp(e1))
        });
        terms
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (exp, coeff)) in self.display_order().into_iter().enumerate() {
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { "-" } else { "+" })?;
            }
            let mono: Vec<String> = exp
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, false)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.combine(rhs, true)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.product(rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl From<Rational> for SparsePoly {
    fn from(q: Rational) -> Self {
        SparsePoly::constant(q)
    }
}

impl From<i64> for SparsePoly {
    fn from(n: i64) -> Self {
        SparsePoly::from_int(n)
    }
}
