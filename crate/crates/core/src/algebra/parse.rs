//! Text parser for polynomials and rational functions.
//!
//! Grammar: sums and differences of products/quotients of powers of
//! integers, `i`, variable names and parenthesized expressions.

use std::sync::Arc;

use num_bigint::BigInt;

use super::poly::{vars_of, Poly};
use super::rational::RationalFunction;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(format!("bad integer '{text}'")))?));
        } else if c.is_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Tok::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            k += 1;
        } else if c == '−' {
            out.push(Tok::Op('-'));
            k += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}' in '{s}'")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Num(BigInt),
    I,
    Var(String),
    Neg(Box<Ast>),
    Bin(char, Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Ast::Bin('+', Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Ast::Bin('-', Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Ast::Bin('*', Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Ast::Bin('/', Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Ast> {
        if self.eat('-') {
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                Some(Tok::Op('(')) => {
                    // allow ^(n)
                    self.pos += 1;
                    let Some(Tok::Num(n)) = self.toks.get(self.pos).cloned() else {
                        return Err(Error::Parse("exponent must be a nonnegative integer".into()));
                    };
                    self.pos += 1;
                    if !self.eat(')') {
                        return Err(Error::Parse("missing ')' after exponent".into()));
                    }
                    let e: u32 = n.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    Ok(Ast::Pow(Box::new(base), e))
                }
                _ => Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Ast::Num(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(if name == "i" { Ast::I } else { Ast::Var(name) })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(e)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

fn parse_ast(s: &str) -> Result<Ast> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(ast)
}

fn collect_idents(ast: &Ast, out: &mut Vec<String>) {
    match ast {
        Ast::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Ast::Neg(a) | Ast::Pow(a, _) => collect_idents(a, out),
        Ast::Bin(_, a, b) => {
            collect_idents(a, out);
            collect_idents(b, out);
        }
        Ast::Num(_) | Ast::I => {}
    }
}

fn eval_rf(ast: &Ast, vars: &Arc<[String]>) -> Result<RationalFunction> {
    Ok(match ast {
        Ast::Num(n) => RationalFunction::from_poly(Poly::constant(vars.clone(), Scalar::from_bigint(n.clone()))),
        Ast::I => RationalFunction::from_poly(Poly::constant(vars.clone(), Scalar::i())),
        Ast::Var(v) => RationalFunction::from_poly(Poly::var(vars.clone(), v)?),
        Ast::Neg(a) => eval_rf(a, vars)?.neg(),
        Ast::Pow(a, e) => eval_rf(a, vars)?.pow(*e),
        Ast::Bin(op, a, b) => {
            let (a, b) = (eval_rf(a, vars)?, eval_rf(b, vars)?);
            match op {
                '+' => a.add(&b),
                '-' => a.sub(&b),
                '*' => a.mul(&b),
                _ => a.div(&b)?,
            }
        }
    })
}

fn eval_poly(ast: &Ast, vars: &Arc<[String]>) -> Result<Poly> {
    Ok(match ast {
        Ast::Num(n) => Poly::constant(vars.clone(), Scalar::from_bigint(n.clone())),
        Ast::I => Poly::constant(vars.clone(), Scalar::i()),
        Ast::Var(v) => Poly::var(vars.clone(), v)?,
        Ast::Neg(a) => eval_poly(a, vars)?.neg(),
        Ast::Pow(a, e) => eval_poly(a, vars)?.pow(*e),
        Ast::Bin(op, a, b) => {
            let a = eval_poly(a, vars)?;
            let b = eval_poly(b, vars)?;
            match op {
                '+' => a.add(&b),
                '-' => a.sub(&b),
                '*' => a.mul(&b),
                _ => {
                    if !b.is_constant() {
                        return Err(Error::Parse("division by a non-constant in a polynomial".into()));
                    }
                    let inv = b.constant_term().inv().ok_or(Error::ZeroDenominator)?;
                    a.scale(&inv)
                }
            }
        }
    })
}

/// Parses a polynomial in the given variable context.
pub fn parse_poly(s: &str, vars: &[&str]) -> Result<Poly> {
    eval_poly(&parse_ast(s)?, &vars_of(vars))
}

/// Parses a polynomial, taking variables in order of first appearance.
pub fn parse_poly_auto(s: &str) -> Result<Poly> {
    let ast = parse_ast(s)?;
    let mut names = Vec::new();
    collect_idents(&ast, &mut names);
    eval_poly(&ast, &names.into())
}

/// Parses a polynomial in an existing context.
pub fn parse_poly_in(s: &str, vars: &Arc<[String]>) -> Result<Poly> {
    eval_poly(&parse_ast(s)?, vars)
}

/// Parses a rational function in the given variable context.
pub fn parse_rational(s: &str, vars: &[&str]) -> Result<RationalFunction> {
    eval_rf(&parse_ast(s)?, &vars_of(vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_precedence() {
        let p = parse_poly("2*x^2 - 3*x*y + 1/2", &["x", "y"]).unwrap();
        assert_eq!(p.coeff(&[2, 0]), Scalar::from_int(2));
        assert_eq!(p.coeff(&[1, 1]), Scalar::from_int(-3));
        assert_eq!(p.constant_term(), Scalar::ratio(1, 2));
        let q = parse_poly("-(x+1)^2", &["x"]).unwrap();
        assert_eq!(q, parse_poly("-x^2-2*x-1", &["x"]).unwrap());
    }

    #[test]
    fn unknown_variable_is_rejected() {
        assert!(matches!(parse_poly("x+z", &["x"]), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn rational_function_reduces() {
        let f = parse_rational("(u^2-1)/(u-1)", &["u"]).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &parse_poly("u+1", &["u"]).unwrap());
    }

    #[test]
    fn auto_context() {
        let p = parse_poly_auto("Z1^3*Z3^3 + 24*Z1^3*Z3^2").unwrap();
        assert_eq!(p.vars().to_vec(), vec!["Z1".to_string(), "Z3".to_string()]);
    }
}
