//! Polynomial expression parser.
//!
//! ```text
//! expr   = term { ("+" | "-") term } ;
//! term   = unary { ("*" | "/") unary } ;
//! unary  = ("+" | "-") unary | power ;
//! power  = atom [ "^" integer ] ;
//! atom   = number | identifier | "I" | "(" expr ")" ;
//! number = digits [ "." digits ] ;
//! ```
//!
//! Division is only allowed by nonzero constants. `I` is the imaginary unit
//! unless it is declared as a variable. Error columns are 1-based character
//! positions.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::MPoly;
use crate::error::{Error, Result};
use crate::numeric::rational::parse_decimal;
use crate::numeric::{Field, GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
    End,
}

fn lex(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = parse_decimal(&text)
                .ok_or_else(|| Error::Parse { column: col, message: format!("malformed number '{text}'") })?;
            out.push((Tok::Num(v), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(Error::Parse { column: col, message: format!("unexpected character '{c}'") });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
}

type G = MPoly<GaussianRational>;

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { column: self.col(), message: message.into() })
    }

    fn n(&self) -> usize {
        self.names.len()
    }

    fn expr(&mut self) -> Result<G> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Op('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<G> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Op('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Op('/') => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.unary()?;
                    match d.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.inv()),
                        Some(_) => return Err(Error::Parse { column: col, message: "division by zero".into() }),
                        None => {
                            return Err(Error::Parse { column: col, message: "division by a non-constant".into() })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<G> {
        match self.peek() {
            Tok::Op('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Tok::Op('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<G> {
        let base = self.atom()?;
        if self.peek() == &Tok::Op('^') {
            self.pos += 1;
            let Tok::Num(e) = self.peek().clone() else {
                return self.err("expected a non-negative integer exponent");
            };
            if !e.is_integer() {
                return self.err("expected a non-negative integer exponent");
            }
            let e: u32 = match u32::try_from(e.to_integer()) {
                Ok(v) if v <= 1000 => v,
                _ => return self.err("exponent out of range"),
            };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<G> {
        let n = self.n();
        match self.peek().clone() {
            Tok::Num(v) => {
                self.pos += 1;
                Ok(G::constant(n, GaussianRational::from_rational(&v)))
            }
            Tok::Ident(name) => {
                if let Some(i) = self.names.iter().position(|x| *x == name) {
                    self.pos += 1;
                    Ok(G::var(n, i))
                } else if name == "I" {
                    self.pos += 1;
                    Ok(G::constant(n, GaussianRational::i()))
                } else {
                    self.err(format!("undeclared variable '{name}'"))
                }
            }
            Tok::Op('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != &Tok::Op(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Tok::End => self.err("unexpected end of expression"),
            Tok::Op(c) => self.err(format!("unexpected '{c}'")),
        }
    }
}

/// Parses an expression over the Gaussian rationals.
pub fn parse_gaussian(s: &str, names: &[String]) -> Result<MPoly<GaussianRational>> {
    let toks = lex(s)?;
    let mut p = Parser { toks, pos: 0, names };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parses an expression with rational coefficients.
pub fn parse_poly(s: &str, names: &[String]) -> Result<MPoly<Rational>> {
    let g = parse_gaussian(s, names)?;
    g.to_rational().ok_or_else(|| Error::Parse { column: 1, message: "imaginary unit in a real polynomial".into() })
}

/// Convenience for tests and examples: variable names given as `&str`.
pub fn poly(s: &str, names: &[&str]) -> Result<MPoly<Rational>> {
    let names: Vec<String> = names.iter().map(|s| String::from(*s)).collect();
    parse_poly(s, &names)
}

/// Field-generic monomial constructor used by callers that build polynomials
/// term by term.
pub fn monomial<F: Field>(c: F, exps: &[u32]) -> MPoly<F> {
    MPoly::term(c, Monomial(exps.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::rat;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn decimals_are_exact() {
        let p = parse_poly("0.5*x + 1.25", &names()).unwrap();
        assert_eq!(p.coeff_of(&Monomial(alloc::vec![1, 0, 0])), rat(1, 2));
        assert_eq!(p.coeff_of(&Monomial(alloc::vec![0, 0, 0])), rat(5, 4));
    }

    #[test]
    fn error_columns() {
        assert_eq!(
            parse_poly("x^^2", &names()),
            Err(Error::Parse { column: 3, message: "expected a non-negative integer exponent".into() })
        );
        match parse_poly("x + w", &names()) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x/y", &names()).is_err());
        assert!(parse_poly("(x+1", &names()).is_err());
        assert!(parse_poly("", &names()).is_err());
    }

    #[test]
    fn precedence() {
        let n = names();
        assert_eq!(parse_poly("-x^2", &n).unwrap(), parse_poly("-(x*x)", &n).unwrap());
        assert_eq!(parse_poly("2*x/4 - y", &n).unwrap(), parse_poly("1/2*x - y", &n).unwrap());
        assert_eq!(parse_poly("(x+y)^2", &n).unwrap(), parse_poly("x^2+2*x*y+y^2", &n).unwrap());
        assert!(parse_poly("x + I", &n).is_err());
        assert!(parse_gaussian("x + I*y", &n).is_ok());
    }
}
