//! Expression grammar shared by every text input:
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := unary (("*"|"/") unary)*
//! unary  := "-"? factor
//! factor := base ("^" integer)?
//! base   := identifier | integer | "(" expr ")"
//! ```
//!
//! Identifiers are resolved by the evaluation target; `g` is the generator
//! of the coefficient field.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Ident(String, usize),
    Int(i128),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(i128),
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let v = s
                .parse::<i128>()
                .map_err(|_| Error::syntax(start, "integer literal too large"))?;
            out.push((Tok::Int(v), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(Error::syntax(i, format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let at = self.here();
                self.pos += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.factor()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let at = self.here();
            match self.peek().cloned() {
                Some(Tok::Int(v)) => {
                    self.pos += 1;
                    let v =
                        i64::try_from(v).map_err(|_| Error::syntax(at, "exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), if neg { -v } else { v }))
                }
                _ => Err(Error::syntax(at, "expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Ident(name, at))
            }
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::syntax(self.here(), "expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(Error::syntax(at, format!("unexpected token {t:?}"))),
            None => Err(Error::syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses a complete expression.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.chars().count(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::syntax(p.here(), "trailing input"));
    }
    Ok(e)
}

/// A ring (field of fractions) that expressions can be evaluated in.
pub trait ExprTarget: Sized + Clone {
    fn from_int(&self, v: i128) -> Self;
    /// Resolves an identifier, or `None` when it is unknown.
    fn ident(&self, name: &str) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division; `None` when the divisor is zero.
    fn div(&self, other: &Self) -> Option<Self>;
}

/// Evaluates `e` using `ctx` as a prototype for constants and identifiers.
pub fn eval<T: ExprTarget>(e: &Expr, ctx: &T) -> Result<T> {
    Ok(match e {
        Expr::Ident(name, pos) => ctx
            .ident(name)
            .ok_or_else(|| Error::syntax(*pos, format!("unknown identifier {name:?}")))?,
        Expr::Int(v) => ctx.from_int(*v),
        Expr::Neg(a) => eval(a, ctx)?.neg(),
        Expr::Add(a, b) => eval(a, ctx)?.add(&eval(b, ctx)?),
        Expr::Sub(a, b) => eval(a, ctx)?.sub(&eval(b, ctx)?),
        Expr::Mul(a, b) => eval(a, ctx)?.mul(&eval(b, ctx)?),
        Expr::Div(a, b, _) => eval(a, ctx)?
            .div(&eval(b, ctx)?)
            .ok_or(Error::DivisionByZeroPolynomial)?,
        Expr::Pow(a, k) => {
            let base = eval(a, ctx)?;
            let mut acc = ctx.from_int(1);
            let mut sq = if *k < 0 {
                ctx.from_int(1)
                    .div(&base)
                    .ok_or(Error::DivisionByZeroPolynomial)?
            } else {
                base
            };
            let mut m = k.unsigned_abs();
            while m > 0 {
                if m & 1 == 1 {
                    acc = acc.mul(&sq);
                }
                m >>= 1;
                if m > 0 {
                    sq = sq.mul(&sq);
                }
            }
            acc
        }
    })
}

/// Splits on `sep` at parenthesis depth zero.
pub fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Parses `"(x, y)"` into its two top-level components.
pub fn parse_pair(s: &str) -> Result<(&str, &str)> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::syntax(0, format!("expected (a, b), got {t:?}")))?;
    match split_top(inner, ',').as_slice() {
        [a, b] => Ok((a.trim(), b.trim())),
        _ => Err(Error::syntax(
            0,
            format!("expected exactly two entries in {t:?}"),
        )),
    }
}
