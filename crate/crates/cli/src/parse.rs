//! Tokenizer and recursive-descent parser for the expression language.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' nat)?
//! primary:= rational | atom | 'theta' '(' expr ')' | '(' expr ')'
//! atom   := ('M'|'F'|'K'|'L') '[' nats? ']'
//!         | ('p'|'q'|'e'|'h') '[' nat ']'
//!         | 'Q' '[' nat ';' nats ']'
//! ```

use std::fmt;

use num_traits::Zero;
use pqsym::qsym::SymmetricFamily;
use pqsym::structure::GeneratorSymbol;
use pqsym::{Composition, Rational};

/// Parsed expression. Atoms carry indices that were validated while parsing.
/// Sums and products are flat, so long canonical outputs do not nest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Atom(Atom),
    Theta(Box<Expr>),
    /// Summands with a flag marking subtraction.
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    M(Composition),
    F(Composition),
    K(Composition),
    L(Composition),
    Symmetric(SymmetricFamily, u32),
    Generator(GeneratorSymbol),
}

/// A parse failure located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(String),
    Ident(String),
    Punct(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Nat(s) => write!(f, "number {s}"),
            Tok::Ident(s) => write!(f, "name {s:?}"),
            Tok::Punct(c) => write!(f, "{c:?}"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

fn locate(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().unwrap_or("").chars().count() + 1;
    (line, column)
}

fn error_at(src: &str, offset: usize, message: impl Into<String>) -> ParseError {
    let (line, column) = locate(src, offset);
    ParseError { line, column, message: message.into() }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            toks.push((Tok::Nat(s), i));
        } else if ch.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_') {
                s.push(d);
                chars.next();
            }
            toks.push((Tok::Ident(s), i));
        } else if "+-*/^()[],;".contains(ch) {
            toks.push((Tok::Punct(ch), i));
            chars.next();
        } else {
            return Err(error_at(src, i, format!("unexpected character {ch:?}")));
        }
    }
    toks.push((Tok::End, src.len()));
    Ok(toks)
}

/// Parse a whole expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, toks: tokenize(src)?, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        t => Err(p.error(format!("unexpected {t} after a complete expression"))),
    }
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        error_at(self.src, self.offset(), message)
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Punct(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}, found {}", self.peek())))
        }
    }

    fn nat(&mut self) -> Result<u32, ParseError> {
        match self.peek().clone() {
            Tok::Nat(s) => {
                let v = s.parse::<u32>().map_err(|_| self.error(format!("{s} does not fit in 32 bits")))?;
                self.pos += 1;
                Ok(v)
            }
            t => Err(self.error(format!("expected a natural number, found {t}"))),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut terms = vec![(negative, self.term()?)];
        loop {
            if self.eat('+') {
                terms.push((false, self.term()?));
            } else if self.eat('-') {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        Ok(match terms.pop() {
            Some((false, only)) if terms.is_empty() => only,
            Some(last) => {
                terms.push(last);
                Expr::Sum(terms)
            }
            None => unreachable!("at least one term"),
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().expect("one factor") } else { Expr::Product(factors) })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            Ok(Expr::Pow(Box::new(base), self.nat()?))
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let start = self.offset();
        match self.bump() {
            Tok::Nat(s) => {
                let num: Rational = s.parse().expect("digits");
                if self.eat('/') {
                    let at = self.offset();
                    let den = match self.bump() {
                        Tok::Nat(d) => d,
                        t => return Err(error_at(self.src, at, format!("expected a denominator, found {t}"))),
                    };
                    let den: Rational = den.parse().expect("digits");
                    if den.is_zero() {
                        return Err(error_at(self.src, at, "division by zero"));
                    }
                    Ok(Expr::Number(num / den))
                } else {
                    Ok(Expr::Number(num))
                }
            }
            Tok::Punct('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => self.named(&name, start),
            t => Err(error_at(self.src, start, format!("expected a number, basis atom or '(', found {t}"))),
        }
    }

    fn named(&mut self, name: &str, start: usize) -> Result<Expr, ParseError> {
        if name == "theta" {
            self.expect('(')?;
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(Expr::Theta(Box::new(e)));
        }
        let invalid = |msg: String| error_at(self.src, start, msg);
        match name {
            "M" | "F" | "K" | "L" => {
                self.expect('[')?;
                let parts = self.nat_list(']')?;
                self.expect(']')?;
                let alpha = Composition::new(parts.clone())
                    .map_err(|_| invalid(format!("invalid index for {name}: parts must be positive, got {parts:?}")))?;
                let atom = match name {
                    "M" => Atom::M(alpha),
                    "F" => Atom::F(alpha),
                    _ if !alpha.is_odd() => {
                        return Err(invalid(format!("invalid index for {name}: {name} indices must have odd parts, got {alpha}")))
                    }
                    "K" => Atom::K(alpha),
                    _ => Atom::L(alpha),
                };
                Ok(Expr::Atom(atom))
            }
            "p" | "q" | "e" | "h" => {
                self.expect('[')?;
                let n = self.nat()?;
                self.expect(']')?;
                let family = SymmetricFamily::from_symbol(name).expect("known family");
                Ok(Expr::Atom(Atom::Symmetric(family, n)))
            }
            "Q" => {
                self.expect('[')?;
                let n = self.nat()?;
                self.expect(';')?;
                let parts = self.nat_list(']')?;
                self.expect(']')?;
                let symbol = Composition::new(parts.clone())
                    .map_err(|e| e.to_string())
                    .and_then(|alpha| GeneratorSymbol::new(n, alpha).map_err(|e| e.to_string()))
                    .map_err(|why| {
                        invalid(format!(
                            "invalid generator Q[{n}; {}]: the degree must be positive and the index an \
                             elementary Lyndon odd composition ({why})",
                            parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
                        ))
                    })?;
                Ok(Expr::Atom(Atom::Generator(symbol)))
            }
            _ => Err(invalid(format!(
                "unknown name {name:?}; expected one of M F K L p q e h Q theta"
            ))),
        }
    }

    /// Comma-separated naturals, possibly empty when `close` follows.
    fn nat_list(&mut self, close: char) -> Result<Vec<u32>, ParseError> {
        let mut out = Vec::new();
        if *self.peek() == Tok::Punct(close) {
            return Ok(out);
        }
        out.push(self.nat()?);
        while self.eat(',') {
            out.push(self.nat()?);
        }
        Ok(out)
    }
}
