//! Plain-text grammar for polynomials, Laurent polynomials and rational
//! functions.
//!
//! Rendering is canonical: terms are ordered by increasing `|exponent|`
//! (nonnegative exponent first on ties), so `9 + 6*x^-2 + 9*x^-4` and
//! `1 + 2*x + x^2` are both in normal form. Coefficients render as `p/q`,
//! `r/s*i` or `(p/q + r/s*i)`; a rational function with a non-monomial
//! denominator renders as `(num)/(den)`.
//!
//! The parser accepts a small arithmetic language (`+ - * / ^`, integers,
//! parentheses, the variable `x` (or `t`) and the literal `i`), so every
//! rendered string parses back to the same value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::LaurentPolynomial;
use super::poly::Polynomial;
use super::ratfunc::RationalFunction;
use super::scalar::{GaussianRational, Rational};
use super::AlgebraError;

const MAX_EXPONENT: i64 = 512;
const MAX_DEPTH: usize = 128;
const MAX_DEGREE: usize = 512;

fn render_term(c: &GaussianRational, k: i64, var: &str) -> String {
    if k == 0 {
        return c.to_string();
    }
    let pow = if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    };
    if c.is_one() {
        pow
    } else if (-c).is_one() {
        format!("-{pow}")
    } else {
        format!("{c}*{pow}")
    }
}

/// Render `(exponent, coefficient)` terms in canonical order.
pub fn render_terms<'a, I>(terms: I, var: &str) -> String
where
    I: IntoIterator<Item = (i64, &'a GaussianRational)>,
{
    let mut terms: Vec<(i64, &GaussianRational)> =
        terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|(k, _)| (k.abs(), *k < 0));
    let mut out = String::new();
    for (idx, (k, c)) in terms.into_iter().enumerate() {
        let t = render_term(c, k, var);
        if idx == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

pub fn render_polynomial(p: &Polynomial, var: &str) -> String {
    render_terms(
        p.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c)),
        var,
    )
}

pub fn render_rational_function(r: &RationalFunction, var: &str) -> String {
    if let Some(l) = r.to_laurent() {
        return render_terms(l.terms(), var);
    }
    format!(
        "({})/({})",
        render_polynomial(r.num(), var),
        render_polynomial(r.den(), var)
    )
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_polynomial(self, "x"))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms(), "x"))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_rational_function(self, "x"))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> AlgebraError {
        AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn check_size(&self, r: RationalFunction) -> Result<RationalFunction, AlgebraError> {
        let deg = r.num().degree().unwrap_or(0).max(r.den().degree().unwrap_or(0));
        if deg > MAX_DEGREE {
            return Err(self.err(format!("degree exceeds {MAX_DEGREE}")));
        }
        Ok(r)
    }

    fn enter(&mut self) -> Result<(), AlgebraError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<RationalFunction, AlgebraError> {
        self.enter()?;
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let f = self.unary()?;
                acc = self.check_size(&acc * &f)?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).ok_or(AlgebraError::Parse {
                    pos: at,
                    msg: "division by zero".into(),
                })?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction, AlgebraError> {
        self.enter()?;
        let out = if self.eat(b'-') {
            -self.unary()?
        } else if self.eat(b'+') {
            self.unary()?
        } else {
            self.power()?
        };
        self.depth -= 1;
        Ok(out)
    }

    fn power(&mut self) -> Result<RationalFunction, AlgebraError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let at = self.pos;
        let e = self.integer()?;
        if paren && !self.eat(b')') {
            return Err(self.err("expected ')' after exponent"));
        }
        let e: i64 = e
            .try_into()
            .ok()
            .filter(|v: &i64| *v <= MAX_EXPONENT)
            .ok_or(AlgebraError::Parse {
                pos: at,
                msg: format!("exponent exceeds {MAX_EXPONENT}"),
            })?;
        let mut acc = RationalFunction::one();
        for _ in 0..e {
            acc = self.check_size(&acc * &base)?;
        }
        if neg {
            acc = acc.inv().ok_or(AlgebraError::Parse {
                pos: at,
                msg: "negative power of zero".into(),
            })?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<RationalFunction, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(b'x') | Some(b't') => {
                self.pos += 1;
                Ok(RationalFunction::x())
            }
            Some(b'i') => {
                self.pos += 1;
                Ok(RationalFunction::constant(GaussianRational::i()))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction::constant(GaussianRational::real(
                    Rational::from_integer(n),
                )))
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse a rational function in the text grammar.
pub fn parse_rational_function(s: &str) -> Result<RationalFunction, AlgebraError> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
        depth: 0,
    };
    let r = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Ok(r)
}

/// Parse a Laurent polynomial (a rational function whose denominator is a
/// power of `x`).
pub fn parse_laurent(s: &str) -> Result<LaurentPolynomial, AlgebraError> {
    let r = parse_rational_function(s)?;
    r.to_laurent().ok_or(AlgebraError::NotLaurent(s.to_string()))
}

pub fn parse_polynomial(s: &str) -> Result<Polynomial, AlgebraError> {
    let r = parse_rational_function(s)?;
    if !r.is_polynomial() {
        return Err(AlgebraError::NotPolynomial(s.to_string()));
    }
    Ok(r.num().clone())
}

/// Parse a constant (e.g. `3/4`, `(1/2 + i)`).
pub fn parse_scalar(s: &str) -> Result<GaussianRational, AlgebraError> {
    let r = parse_rational_function(s)?;
    if !r.is_polynomial() || r.num().degree().unwrap_or(0) > 0 {
        return Err(AlgebraError::NotConstant(s.to_string()));
    }
    Ok(r.num().coeff(0))
}
