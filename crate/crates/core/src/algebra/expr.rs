//! A small expression language for writing displayed formulas the way the
//! source displays them: integers, named symbols, `+ - * /`, parentheses,
//! and `^` with integer (possibly negative) exponents.
//!
//! Symbols are resolved through a caller-supplied lookup, so the same
//! expression text can be read over any frame: names may stand for table
//! variables or for previously defined elements.

use std::fmt;
use std::sync::Arc;

use super::field::CoeffField;
use super::ratfunc::RatFunc;
use super::vars::VarTable;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(i64),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    /// Evaluate against a symbol resolver.
    pub fn eval(
        &self,
        field: CoeffField,
        vars: &Arc<VarTable>,
        lookup: &dyn Fn(&str) -> Option<RatFunc>,
    ) -> Result<RatFunc, AlgebraError> {
        match self {
            Expr::Int(n) => Ok(RatFunc::from_i64(field, vars, *n)),
            Expr::Sym(s) => lookup(s).ok_or_else(|| AlgebraError::UnknownVariable(s.clone())),
            Expr::Neg(e) => Ok(e.eval(field, vars, lookup)?.neg()),
            Expr::Add(l, r) => Ok(l.eval(field, vars, lookup)?.add(&r.eval(field, vars, lookup)?)),
            Expr::Sub(l, r) => Ok(l.eval(field, vars, lookup)?.sub(&r.eval(field, vars, lookup)?)),
            Expr::Mul(l, r) => Ok(l.eval(field, vars, lookup)?.mul(&r.eval(field, vars, lookup)?)),
            Expr::Div(l, r) => l.eval(field, vars, lookup)?.div(&r.eval(field, vars, lookup)?),
            Expr::Pow(b, e) => b.eval(field, vars, lookup)?.pow(*e),
        }
    }
}

/// Parse the expression grammar above. Whitespace is insignificant.
pub fn parse_expr(src: &str) -> Result<Expr, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::InvalidArgument(format!(
            "parse error at byte {} of {:?}: {msg}",
            self.pos,
            String::from_utf8_lossy(self.src)
        ))
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expr(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = if self.peek() == Some(b'-') {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                b'-' => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, AlgebraError> {
        let mut lhs = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                b'*' => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                b'/' => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, AlgebraError> {
        if self.peek() == Some(b'-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let atom = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let neg = if self.peek() == Some(b'-') {
                self.bump();
                true
            } else {
                false
            };
            let e = self.integer()? as i64;
            return Ok(Expr::Pow(Box::new(atom), if neg { -e } else { e }));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected )"));
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.integer()? as i64)),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                self.skip_ws();
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Expr::Sym(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
            }
            _ => Err(self.error("expected atom")),
        }
    }

    fn integer(&mut self) -> Result<u64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(l, r) => write!(f, "({l} + {r})"),
            Expr::Sub(l, r) => write!(f, "({l} - {r})"),
            Expr::Mul(l, r) => write!(f, "({l} * {r})"),
            Expr::Div(l, r) => write!(f, "({l} / {r})"),
            Expr::Pow(b, e) => write!(f, "({b})^{e}"),
        }
    }
}
