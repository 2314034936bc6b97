//! Text input for polynomials.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := [coeff ['*']] factor ('*' factor)* | coeff
//! factor := var ['^' uint]
//! coeff  := ['-'] uint ['/' uint]
//! ```
//!
//! Whitespace is ignored and like monomials are collected. With the default
//! variables `x, y, z` the ambient dimension is that of the highest variable
//! used (at least 2).

use std::collections::BTreeMap;

use num::{BigInt, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::polytope::SupportedPoly;

pub const DEFAULT_VARS: [&str; 3] = ["x", "y", "z"];

pub fn parse_polynomial(text: &str) -> Result<SupportedPoly> {
    let (terms, highest) = Parser::new(text, &DEFAULT_VARS).poly()?;
    let dim = highest.map_or(2, |h| (h + 1).max(2));
    finish(terms, dim)
}

/// Parses with the variables `vars` (2 or 3 names) in that coordinate order;
/// the ambient dimension is `vars.len()`.
pub fn parse_polynomial_with_vars(text: &str, vars: &[&str]) -> Result<SupportedPoly> {
    if !(2..=3).contains(&vars.len()) {
        return Err(Error::UnsupportedDimension(vars.len()));
    }
    for (idx, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok || vars[..idx].contains(v) {
            return Err(Error::Syntax {
                position: 0,
                message: format!("bad variable name {v:?}"),
            });
        }
    }
    let (terms, _) = Parser::new(text, vars).poly()?;
    finish(terms, vars.len())
}

type Terms = Vec<(Vec<i64>, Rational)>;

fn finish(terms: Terms, dim: usize) -> Result<SupportedPoly> {
    let mut collected: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
    for (mut e, c) in terms {
        e.resize(dim, 0);
        *collected.entry(e).or_insert_with(Rational::zero) += c;
    }
    collected.retain(|_, c| !c.is_zero());
    if collected.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    SupportedPoly::new(dim, collected)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    vars: &'a [&'a str],
    highest: Option<usize>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, vars: &'a [&'a str]) -> Self {
        Parser {
            text,
            pos: 0,
            vars,
            highest: None,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a number");
        }
        let n = rest[..len].parse().expect("digits");
        self.pos += len;
        Ok(n)
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic()) {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        Some(&rest[..len])
    }

    fn poly(mut self) -> Result<(Terms, Option<usize>)> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, c * Rational::from_integer(sign.into())));
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else if self.peek().is_none() {
                break;
            } else {
                return self.err("expected '+', '-' or end of input");
            }
        }
        Ok((terms, self.highest))
    }

    fn term(&mut self) -> Result<(Vec<i64>, Rational)> {
        let mut coeff = Rational::from_integer(1.into());
        let mut exps = vec![0i64; self.vars.len()];
        let negative = self.eat('-');
        let has_coeff = self.peek().is_some_and(|c| c.is_ascii_digit());
        if negative && !has_coeff {
            return self.err("expected a number after '-'");
        }
        if has_coeff {
            let num = self.uint()?;
            let den = if self.eat('/') { self.uint()? } else { BigInt::from(1) };
            if den.is_zero() {
                return self.err("zero denominator");
            }
            coeff = Rational::new(num, den);
            if negative {
                coeff = -coeff;
            }
            let star = self.eat('*');
            let next_is_var = self.peek().is_some_and(|c| c.is_ascii_alphabetic());
            if !next_is_var {
                if star {
                    return self.err("expected a variable");
                }
                return Ok((exps, coeff));
            }
        }
        loop {
            self.factor(&mut exps)?;
            if !self.eat('*') {
                break;
            }
        }
        Ok((exps, coeff))
    }

    fn factor(&mut self, exps: &mut [i64]) -> Result<()> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let Some(name) = self.ident() else {
            return self.err("expected a variable");
        };
        let Some(idx) = self.vars.iter().position(|v| *v == name) else {
            self.pos = start;
            return self.err(format!("unknown variable {name:?}"));
        };
        let exp = if self.eat('^') {
            let e = self.uint()?;
            i64::try_from(e).or_else(|_| self.err("exponent too large"))?
        } else {
            1
        };
        exps[idx] = exps[idx]
            .checked_add(exp)
            .map_or_else(|| self.err("exponent too large"), Ok)?;
        if exp > 0 {
            self.highest = self.highest.max(Some(idx));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::polytope::LatticePoint;

    fn coeff(p: &SupportedPoly, e: &[i64]) -> Option<Rational> {
        p.coefficient(&LatticePoint::new(e.to_vec())).cloned()
    }

    #[test]
    fn basic() {
        let p = parse_polynomial("x^2*y^3 + z^5").unwrap();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.len(), 2);
        assert_eq!(coeff(&p, &[2, 3, 0]), Some(int(1)));
        let p = parse_polynomial("x^2 + 2*x*y + y^2").unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(coeff(&p, &[1, 1]), Some(int(2)));
        assert_eq!(parse_polynomial("x").unwrap().dim(), 2);
    }

    #[test]
    fn coefficients_and_signs() {
        let p = parse_polynomial("-3/4 x^2 - 1/2*y + 5y^7").unwrap();
        assert_eq!(coeff(&p, &[2, 0]), Some(rat(-3, 4)));
        assert_eq!(coeff(&p, &[0, 1]), Some(rat(-1, 2)));
        assert_eq!(coeff(&p, &[0, 7]), Some(int(5)));
        let p = parse_polynomial("x*x*y + x^2 * y").unwrap();
        assert_eq!(coeff(&p, &[2, 1]), Some(int(2)));
    }

    #[test]
    fn collection() {
        let p = parse_polynomial("x^2*y^3 + z^5 - z^5").unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.dim(), 3);
        assert_eq!(parse_polynomial("x - x"), Err(Error::ZeroPolynomial));
        assert_eq!(parse_polynomial("x + 1"), Err(Error::OriginInSupport));
        assert_eq!(parse_polynomial("x^0 + y"), Err(Error::OriginInSupport));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (text, pos) in [
            ("x +", 3),
            ("x ++ y", 3),
            ("x^", 2),
            ("2*", 2),
            ("x + w", 4),
            ("x y", 2),
            ("1/0 x", 3),
        ] {
            match parse_polynomial(text) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(parse_polynomial(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn custom_vars() {
        let p = parse_polynomial_with_vars("u^2 + v^3", &["u", "v"]).unwrap();
        assert_eq!(p.to_string(), "x^2 + y^3");
        let p = parse_polynomial_with_vars("c^2", &["a", "b", "c"]).unwrap();
        assert_eq!(p.dim(), 3);
        assert!(parse_polynomial_with_vars("x", &["x"]).is_err());
        assert!(parse_polynomial_with_vars("x", &["x", "x"]).is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in ["x^2*y^3 - 2*z^5", "-1/3*x + y^4", "7/2*x^3 + x*y*z"] {
            assert_eq!(parse_polynomial(text).unwrap().to_string(), text);
        }
    }
}
