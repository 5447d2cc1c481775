//! A small expression language evaluated over dual numbers.
//!
//! ```text
//! expr    = term (("+" | "-") term)*
//! term    = unary (("*" | "/") unary)*
//! unary   = "-" unary | power
//! power   = atom ("^" unary)?
//! atom    = number | name | name "(" expr ")" | "(" expr ")"
//! ```
//!
//! Functions: `exp`, `ln` (alias `log`), `sin`, `cos`, `sqrt`. Constants:
//! `pi`, `e`. Any other name is a variable.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{DualNumber, MultiDualScalar};
use crate::error::{PgaError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Exp,
    Ln,
    Sin,
    Cos,
    Sqrt,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Value and partial derivatives of an expression at a point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Gradient {
    pub value: f64,
    pub variables: Vec<String>,
    pub gradient: Vec<f64>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(PgaError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(b'/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            return Ok(Expr::Pow(Box::new(base), Box::new(self.unary()?)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.name(),
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let start = self.pos;
        let bytes = self.src.as_bytes();
        while self.peek().is_some_and(|c| c.is_ascii_digit() || c == b'.') {
            self.pos += 1;
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let mut p = self.pos + 1;
            if matches!(bytes.get(p), Some(b'+' | b'-')) {
                p += 1;
            }
            if bytes.get(p).is_some_and(|c| c.is_ascii_digit()) {
                self.pos = p;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
            }
        }
        match self.src[start..self.pos].parse::<f64>() {
            Ok(v) => Ok(Expr::Num(v)),
            Err(_) => {
                self.pos = start;
                self.err("malformed number")
            }
        }
    }

    fn name(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
        {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        if self.eat(b'(') {
            let func = match name {
                "exp" => Func::Exp,
                "ln" | "log" => Func::Ln,
                "sin" => Func::Sin,
                "cos" => Func::Cos,
                "sqrt" => Func::Sqrt,
                _ => {
                    self.pos = start;
                    return self.err(format!("unknown function {name:?}"));
                }
            };
            let arg = self.expr()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            return Ok(Expr::Call(func, Box::new(arg)));
        }
        Ok(match name {
            "pi" => Expr::Num(std::f64::consts::PI),
            "e" => Expr::Num(std::f64::consts::E),
            _ => Expr::Var(name.to_owned()),
        })
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }

    /// Variable names in sorted order.
    pub fn variables(&self) -> Vec<String> {
        let mut set = BTreeSet::new();
        self.collect_vars(&mut set);
        set.into_iter().collect()
    }

    fn collect_vars(&self, set: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                set.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Call(_, a) => a.collect_vars(set),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.collect_vars(set);
                b.collect_vars(set);
            }
        }
    }

    /// Evaluate over any dual-number type; `lookup` resolves variables.
    pub fn eval<D: DualNumber>(&self, lookup: &dyn Fn(&str) -> Option<D>) -> Result<D> {
        Ok(match self {
            Expr::Num(v) => D::constant(*v),
            Expr::Var(name) => lookup(name)
                .ok_or_else(|| PgaError::InvalidParameter(format!("no value for variable {name:?}")))?,
            Expr::Neg(a) => -a.eval(lookup)?,
            Expr::Add(a, b) => a.eval(lookup)? + b.eval(lookup)?,
            Expr::Sub(a, b) => a.eval(lookup)? - b.eval(lookup)?,
            Expr::Mul(a, b) => a.eval(lookup)? * b.eval(lookup)?,
            Expr::Div(a, b) => a.eval(lookup)?.checked_div(&b.eval(lookup)?)?,
            Expr::Pow(a, b) => a.eval(lookup)?.try_pow(&b.eval(lookup)?)?,
            Expr::Call(f, a) => {
                let x = a.eval(lookup)?;
                match f {
                    Func::Exp => x.exp(),
                    Func::Ln => x.try_ln()?,
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Sqrt => x.try_sqrt()?,
                }
            }
        })
    }

    /// Value and gradient with respect to every variable, in sorted order.
    pub fn gradient_at(&self, point: &BTreeMap<String, f64>) -> Result<Gradient> {
        let names = self.variables();
        let mut xs = Vec::with_capacity(names.len());
        for n in &names {
            let v = point
                .get(n)
                .ok_or_else(|| PgaError::InvalidParameter(format!("no value for variable {n:?}")))?;
            xs.push(*v);
        }
        let vars = MultiDualScalar::variables(&xs);
        let lookup = |name: &str| names.iter().position(|n| n == name).map(|i| vars[i].clone());
        let out = self.eval(&lookup)?;
        Ok(Gradient {
            value: out.re,
            gradient: out.gradient(names.len()),
            variables: names,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(pairs: &[(&str, f64)]) -> BTreeMap<String, f64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn gradient_of_mixed_expression() {
        let e = Expr::parse("x*y + sin(x)").unwrap();
        assert_eq!(e.variables(), ["x", "y"]);
        let g = e.gradient_at(&at(&[("x", 0.0), ("y", 2.0)])).unwrap();
        assert_eq!(g.value, 0.0);
        assert_eq!(g.gradient, [3.0, 0.0]);
    }

    #[test]
    fn precedence() {
        let e = Expr::parse("-x^2 + 2*x - 3/x").unwrap();
        let g = e.gradient_at(&at(&[("x", 2.0)])).unwrap();
        assert_eq!(g.value, -4.0 + 4.0 - 1.5);
        assert_eq!(g.gradient, [-4.0 + 2.0 + 0.75]);
        let e = Expr::parse("2^3^2").unwrap();
        assert_eq!(e.gradient_at(&at(&[])).unwrap().value, 512.0);
        let e = Expr::parse("1.5e1 + pi*0").unwrap();
        assert_eq!(e.gradient_at(&at(&[])).unwrap().value, 15.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(Expr::parse("x +"), Err(PgaError::Parse { pos: 3, .. })));
        assert!(matches!(Expr::parse("foo(x)"), Err(PgaError::Parse { pos: 0, .. })));
        assert!(matches!(Expr::parse("(x"), Err(PgaError::Parse { .. })));
        assert!(matches!(Expr::parse("x y"), Err(PgaError::Parse { pos: 2, .. })));
        let e = Expr::parse("ln(x)").unwrap();
        assert!(matches!(
            e.gradient_at(&at(&[("x", -1.0)])),
            Err(PgaError::Domain { op: "ln", .. })
        ));
        assert!(e.gradient_at(&at(&[])).is_err());
    }
}
