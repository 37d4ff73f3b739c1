//! Text format for ring descriptions.
//!
//! ```text
//! # comments run to the end of the line
//! name F_2[x,y]/(x,y)^2
//! fpalgebra 2 3 labels 1 x y
//!   consts 0 0 0 1  0 1 1 1  1 0 1 1  0 2 2 1  2 0 2 1
//! ```
//!
//! Expressions:
//!
//! * `zmod N`
//! * `gf P K [poly c0 .. cK]`
//! * `matrix K <expr>`
//! * `product <expr> ; <expr> ; ...`
//! * `groupring <expr> cyclic M | dihedral M | sym3`
//! * `fpalgebra P DIM labels L1 .. Ld consts i j k v ...` (indices from 0)
//! * `op <expr>`
//! * `( <expr> )`
//!
//! A `product` takes every `;`-separated factor up to the closing
//! parenthesis or the end of input, so a product nested inside another
//! expression is written in parentheses. Line breaks are whitespace except
//! on a `name` line, whose remainder is the ring name verbatim.

use std::fmt;

use frobring::{GroupSpec, RingExpr};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed ring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpecFile {
    pub name: Option<String>,
    pub expr: RingExpr,
}

impl RingSpecFile {
    /// Canonical text: an optional `name` line and the expression on one line.
    pub fn to_text(&self) -> String {
        match &self.name {
            Some(n) => format!("name {n}\n{}\n", to_spec(&self.expr)),
            None => format!("{}\n", to_spec(&self.expr)),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> (Option<String>, Vec<Token>) {
    let mut name = None;
    let mut tokens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("name") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                name = Some(rest.trim().to_string());
                continue;
            }
        }
        let mut start: Option<usize> = None;
        let mut flush = |start: &mut Option<usize>, end: usize| {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    text: line[s..end].to_string(),
                    line: i + 1,
                    column: line[..s].chars().count() + 1,
                });
            }
        };
        for (j, c) in line.char_indices() {
            if c.is_whitespace() {
                flush(&mut start, j);
            } else if matches!(c, '(' | ')' | ';') {
                flush(&mut start, j);
                start = Some(j);
                flush(&mut start, j + 1);
            } else if start.is_none() {
                start = Some(j);
            }
        }
        flush(&mut start, line.len());
    }
    (name, tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(|t| t.text.as_str())
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self
            .tokens
            .get(self.pos)
            .map_or(self.end, |t| (t.line, t.column));
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<String, ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.text.clone())
            }
            None => Err(self.error_here(format!("expected {what}, found end of input"))),
        }
    }

    fn expect(&mut self, keyword: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == keyword => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.error_here(format!("expected `{keyword}`, found `{t}`"))),
            None => Err(self.error_here(format!("expected `{keyword}`, found end of input"))),
        }
    }

    fn number(&mut self, what: &str) -> Result<u32, ParseError> {
        let at = self.pos;
        let text = self.next(what)?;
        text.parse().map_err(|_| {
            self.pos = at;
            self.error_here(format!("expected {what}, found `{text}`"))
        })
    }

    fn peek_is_number(&self) -> bool {
        self.peek().is_some_and(|t| t.parse::<u32>().is_ok())
    }

    fn expr(&mut self) -> Result<RingExpr, ParseError> {
        let at = self.pos;
        let head = self.next("a ring expression")?;
        match head.as_str() {
            "(" => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            "zmod" => Ok(RingExpr::ZMod(self.number("a modulus")?)),
            "gf" => {
                let p = self.number("a prime")?;
                let k = self.number("a degree")?;
                let poly = if self.peek() == Some("poly") {
                    self.pos += 1;
                    Some(
                        (0..=k)
                            .map(|_| self.number("a polynomial coefficient"))
                            .collect::<Result<_, _>>()?,
                    )
                } else {
                    None
                };
                Ok(RingExpr::GaloisField { p, k, poly })
            }
            "matrix" => {
                let size = self.number("a matrix size")?;
                Ok(RingExpr::matrix(size, self.expr()?))
            }
            "product" => {
                let mut factors = vec![self.expr()?];
                while self.peek() == Some(";") {
                    self.pos += 1;
                    factors.push(self.expr()?);
                }
                Ok(RingExpr::Product(factors))
            }
            "groupring" => {
                let base = self.expr()?;
                let group = match self.next("a group")?.as_str() {
                    "cyclic" => GroupSpec::Cyclic(self.number("a group order")?),
                    "dihedral" => GroupSpec::Dihedral(self.number("a polygon size")?),
                    "sym3" => GroupSpec::Sym3,
                    other => {
                        self.pos -= 1;
                        return Err(self.error_here(format!(
                            "expected `cyclic`, `dihedral` or `sym3`, found `{other}`"
                        )));
                    }
                };
                Ok(RingExpr::group_ring(base, group))
            }
            "fpalgebra" => {
                let p = self.number("a prime")?;
                let dim = self.number("a dimension")?;
                self.expect("labels")?;
                let mut labels = Vec::new();
                for _ in 0..dim {
                    match self.peek() {
                        Some("(" | ")" | ";" | "consts") | None => {
                            return Err(self.error_here(format!("expected {dim} basis labels")))
                        }
                        _ => labels.push(self.next("a label")?),
                    }
                }
                self.expect("consts")?;
                let mut consts = Vec::new();
                while self.peek_is_number() {
                    let i = self.number("an index")?;
                    let j = self.number("an index")?;
                    let k = self.number("an index")?;
                    let v = self.number("a coefficient")?;
                    consts.push((i, j, k, v));
                }
                Ok(RingExpr::FpAlgebra {
                    p,
                    dim,
                    labels,
                    consts,
                })
            }
            "op" => Ok(RingExpr::opposite(self.expr()?)),
            other => {
                self.pos = at;
                Err(self.error_here(format!("unknown ring constructor `{other}`")))
            }
        }
    }
}

/// Parses a ring file: an optional `name` line and exactly one expression.
pub fn parse_ring_file(text: &str) -> Result<RingSpecFile, ParseError> {
    let (name, tokens) = tokenize(text);
    let lines = text.lines().count().max(1);
    let last_len = text.lines().last().map_or(0, |l| l.chars().count());
    let mut p = Parser {
        tokens,
        pos: 0,
        end: (lines, last_len + 1),
    };
    let expr = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.error_here(format!("unexpected `{t}` after the expression")));
    }
    Ok(RingSpecFile { name, expr })
}

/// Parses just the expression, ignoring any `name` line.
pub fn parse_ring_spec(text: &str) -> Result<RingExpr, ParseError> {
    parse_ring_file(text).map(|f| f.expr)
}

struct Spec<'a>(&'a RingExpr, bool);

impl fmt::Display for Spec<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Spec(expr, nested) = *self;
        let sub = |e| Spec(e, true);
        match expr {
            RingExpr::ZMod(n) => write!(f, "zmod {n}"),
            RingExpr::GaloisField { p, k, poly } => {
                write!(f, "gf {p} {k}")?;
                if let Some(c) = poly {
                    write!(f, " poly")?;
                    c.iter().try_for_each(|c| write!(f, " {c}"))?;
                }
                Ok(())
            }
            RingExpr::Matrix { size, base } => write!(f, "matrix {size} {}", sub(base)),
            RingExpr::Product(factors) => {
                if nested {
                    write!(f, "(")?;
                }
                write!(f, "product")?;
                for (i, factor) in factors.iter().enumerate() {
                    let sep = if i == 0 { "" } else { " ;" };
                    write!(f, "{sep} {}", sub(factor))?;
                }
                if nested {
                    write!(f, ")")?;
                }
                Ok(())
            }
            RingExpr::GroupRing { base, group } => {
                write!(f, "groupring {} ", sub(base))?;
                match group {
                    GroupSpec::Cyclic(m) => write!(f, "cyclic {m}"),
                    GroupSpec::Dihedral(m) => write!(f, "dihedral {m}"),
                    GroupSpec::Sym3 => write!(f, "sym3"),
                }
            }
            RingExpr::FpAlgebra {
                p,
                dim,
                labels,
                consts,
            } => {
                write!(f, "fpalgebra {p} {dim} labels {} consts", labels.join(" "))?;
                consts
                    .iter()
                    .try_for_each(|(i, j, k, v)| write!(f, " {i} {j} {k} {v}"))
            }
            RingExpr::Opposite(base) => write!(f, "op {}", sub(base)),
        }
    }
}

/// Single-line text for `expr` that parses back to the same expression.
pub fn to_spec(expr: &RingExpr) -> String {
    Spec(expr, false).to_string()
}
