//! Line-oriented script language.
//!
//! ```text
//! ring R = poly(QQ, [x, y, z]) mod [x^2 + y^2] weights [1, 1, 2];
//! ideal I = [x^2, y^2];
//! elem f = x^2 + y^2;
//! task weaklift_gor0(ideal = I, f = f);
//! ```
//!
//! `#` and `//` start comments that run to the end of the line.

use std::fmt;

use num_bigint::BigInt;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, CliError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c == '#' || (c == '/' && chars.clone().nth(1) == Some('/')) {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(s), pos));
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(c);
                    bump(&mut chars);
                } else {
                    break;
                }
            }
            out.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if "()[],;=+-*/^".contains(c) || c == '−' {
            bump(&mut chars);
            out.push((Tok::Sym(if c == '−' { '-' } else { c }), pos));
        } else {
            return Err(CliError::Parse { pos, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Name(String, Pos),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Expr(Expr),
    List(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arg {
    pub name: String,
    pub value: Value,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring { name: String, domain: String, modulus: Option<u64>, vars: Vec<String>, relations: Vec<Expr>, weights: Vec<u32> },
    Ideal { name: String, gens: Vec<Expr> },
    Elem { name: String, value: Expr },
    Task { kind: String, args: Vec<Arg> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<(Stmt, Pos)>,
}

impl Script {
    pub fn parse(src: &str) -> Result<Script, CliError> {
        let mut p = Parser { toks: lex(src)?, at: 0 };
        let mut stmts = Vec::new();
        while p.peek() != &Tok::Eof {
            stmts.push(p.stmt()?);
        }
        Ok(Script { stmts })
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, CliError> {
        Err(CliError::Parse { pos: self.pos(), message: format!("expected {expected}, found {}", self.peek()) })
    }

    fn sym(&mut self, c: char) -> Result<(), CliError> {
        if self.peek() == &Tok::Sym(c) {
            self.next();
            Ok(())
        } else {
            self.fail(&format!("`{c}`"))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.peek() == &Tok::Sym(c);
        if hit {
            self.next();
        }
        hit
    }

    fn ident(&mut self) -> Result<String, CliError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.fail("a name"),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        let hit = matches!(self.peek(), Tok::Ident(s) if s == kw);
        if hit {
            self.next();
        }
        hit
    }

    fn small_int<T: TryFrom<u64>>(&mut self, what: &str) -> Result<T, CliError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                u64::try_from(&n)
                    .ok()
                    .and_then(|v| T::try_from(v).ok())
                    .ok_or(CliError::Parse { pos, message: format!("{what} {n} is out of range") })
            }
            _ => self.fail(what),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Parser) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
        self.sym('[')?;
        let mut out = Vec::new();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(']') {
                return Ok(out);
            }
            self.sym(',')?;
        }
    }

    fn stmt(&mut self) -> Result<(Stmt, Pos), CliError> {
        let pos = self.pos();
        let stmt = match self.peek().clone() {
            Tok::Ident(kw) if kw == "ring" => {
                self.next();
                let name = self.ident()?;
                self.sym('=')?;
                if !self.keyword("poly") {
                    return self.fail("`poly`");
                }
                self.sym('(')?;
                let domain = self.ident()?;
                let modulus = if domain == "GF" {
                    self.sym('(')?;
                    let p = self.small_int("a field characteristic")?;
                    self.sym(')')?;
                    Some(p)
                } else {
                    None
                };
                self.sym(',')?;
                let vars = self.list(Parser::ident)?;
                self.sym(')')?;
                let relations = if self.keyword("mod") { self.list(Parser::expr)? } else { Vec::new() };
                let weights = if self.keyword("weights") { self.list(|p| p.small_int("a weight"))? } else { Vec::new() };
                Stmt::Ring { name, domain, modulus, vars, relations, weights }
            }
            Tok::Ident(kw) if kw == "ideal" => {
                self.next();
                let name = self.ident()?;
                self.sym('=')?;
                Stmt::Ideal { name, gens: self.list(Parser::expr)? }
            }
            Tok::Ident(kw) if kw == "elem" => {
                self.next();
                let name = self.ident()?;
                self.sym('=')?;
                Stmt::Elem { name, value: self.expr()? }
            }
            Tok::Ident(kw) if kw == "task" => {
                self.next();
                let kind = self.ident()?;
                self.sym('(')?;
                let mut args = Vec::new();
                if !self.eat(')') {
                    loop {
                        let pos = self.pos();
                        let name = self.ident()?;
                        self.sym('=')?;
                        let value = if self.peek() == &Tok::Sym('[') { Value::List(self.list(Parser::expr)?) } else { Value::Expr(self.expr()?) };
                        args.push(Arg { name, value, pos });
                        if self.eat(')') {
                            break;
                        }
                        self.sym(',')?;
                    }
                }
                Stmt::Task { kind, args }
            }
            _ => return self.fail("`ring`, `ideal`, `elem` or `task`"),
        };
        self.sym(';')?;
        Ok((stmt, pos))
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
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

    fn term(&mut self) -> Result<Expr, CliError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, CliError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.small_int("an exponent")?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, CliError> {
        let (tok, pos) = self.toks[self.at].clone();
        match tok {
            Tok::Int(n) => {
                self.next();
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                self.next();
                Ok(Expr::Name(s, pos))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.sym(')')?;
                Ok(e)
            }
            _ => self.fail("an expression"),
        }
    }
}
