//! Text grammar for rings, monomials, ideals and primes.
//!
//! ```text
//! ring    := ident ("," ident)*
//! monom   := "1" | factor ("*" factor)*
//! factor  := ident ("^" uint)?
//! ideal   := "0" | monom ("," monom)*      optionally wrapped in parentheses
//! prime   := "(" ident ("," ident)* ")"
//! ```
//!
//! Whitespace (including newlines) is insignificant. Every error carries the
//! 1-based line and column where it was detected.

use std::fmt;

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::MonomialPrime;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken { found: String, expected: &'static str },
    UnexpectedEnd { expected: &'static str },
    UnknownVariable(String),
    DuplicateVariable(String),
    ExponentOverflow,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            Self::UnexpectedToken { found, expected } => write!(f, "expected {expected}, found `{found}`"),
            Self::UnexpectedEnd { expected } => write!(f, "expected {expected}, found end of input"),
            Self::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            Self::DuplicateVariable(name) => write!(f, "duplicate variable `{name}`"),
            Self::ExponentOverflow => f.write_str("exponent does not fit in 64 bits"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Uint(String),
    Comma,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Uint(s) => f.write_str(s),
            Tok::Comma => f.write_str(","),
            Tok::Star => f.write_str("*"),
            Tok::Caret => f.write_str("^"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<(Vec<(Tok, Pos)>, Pos), ParseError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    let mut pos = Pos { line: 1, column: 1 };
    while let Some(&c) = chars.peek() {
        let start = pos;
        let advance = |pos: &mut Pos, c: char| {
            if c == '\n' {
                pos.line += 1;
                pos.column = 1;
            } else {
                pos.column += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            advance(&mut pos, c);
            continue;
        }
        let single = match c {
            ',' => Some(Tok::Comma),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            advance(&mut pos, c);
            toks.push((t, start));
        } else if c.is_ascii_alphabetic() || c.is_ascii_digit() {
            let word_char: fn(char) -> bool = if c.is_ascii_digit() {
                |c| c.is_ascii_digit()
            } else {
                |c| c.is_ascii_alphanumeric() || c == '_'
            };
            let mut word = String::new();
            while let Some(&d) = chars.peek() {
                if !word_char(d) {
                    break;
                }
                word.push(d);
                chars.next();
                advance(&mut pos, d);
            }
            let tok = if c.is_ascii_digit() { Tok::Uint(word) } else { Tok::Ident(word) };
            toks.push((tok, start));
        } else {
            return Err(ParseError { line: start.line, column: start.column, kind: ParseErrorKind::UnexpectedChar(c) });
        }
    }
    Ok((toks, pos))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    end: Pos,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let (toks, end) = lex(text)?;
        Ok(Self { toks, at: 0, end })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn error_at(&self, pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError { line: pos.line, column: pos.column, kind }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            Some(t) => ParseErrorKind::UnexpectedToken { found: t.to_string(), expected },
            None => ParseErrorKind::UnexpectedEnd { expected },
        };
        self.error_at(self.pos(), kind)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let out = (name.clone(), self.pos());
                self.at += 1;
                Ok(out)
            }
            _ => Err(self.unexpected("a variable name")),
        }
    }

    fn variable(&mut self, ring: &Ring) -> Result<usize, ParseError> {
        let (name, pos) = self.ident()?;
        ring.index_of(&name)
            .ok_or_else(|| self.error_at(pos, ParseErrorKind::UnknownVariable(name)))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at == self.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }

    fn monomial(&mut self, ring: &Ring) -> Result<Monomial, ParseError> {
        if let Some(Tok::Uint(digits)) = self.peek() {
            if digits.parse::<u64>() == Ok(1) {
                self.at += 1;
                return Ok(Monomial::one(ring.nvars()));
            }
            return Err(self.unexpected("a monomial"));
        }
        let mut exps = vec![0u64; ring.nvars()];
        loop {
            let var = self.variable(ring)?;
            let mut exp = 1u64;
            if self.eat(&Tok::Caret) {
                let pos = self.pos();
                match self.peek() {
                    Some(Tok::Uint(digits)) => {
                        exp = digits
                            .parse()
                            .map_err(|_| self.error_at(pos, ParseErrorKind::ExponentOverflow))?;
                        self.at += 1;
                    }
                    _ => return Err(self.unexpected("an exponent")),
                }
            }
            exps[var] = exps[var]
                .checked_add(exp)
                .ok_or_else(|| self.error_at(self.pos(), ParseErrorKind::ExponentOverflow))?;
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn ideal(&mut self, ring: &Ring) -> Result<MonomialIdeal, ParseError> {
        let wrapped = self.eat(&Tok::LParen);
        let ideal = if matches!(self.peek(), Some(Tok::Uint(d)) if d.parse::<u64>() == Ok(0)) {
            self.at += 1;
            MonomialIdeal::zero(ring)
        } else {
            let mut gens = vec![self.monomial(ring)?];
            while self.eat(&Tok::Comma) {
                gens.push(self.monomial(ring)?);
            }
            MonomialIdeal::from_candidates(ring.clone(), gens)
        };
        if wrapped {
            self.expect(&Tok::RParen, "`)` or `,`")?;
        }
        Ok(ideal)
    }
}

pub fn parse_ring(text: &str) -> Result<Ring, ParseError> {
    let mut p = Parser::new(text)?;
    let mut names: Vec<String> = Vec::new();
    loop {
        let (name, pos) = p.ident()?;
        if names.contains(&name) {
            return Err(p.error_at(pos, ParseErrorKind::DuplicateVariable(name)));
        }
        names.push(name);
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.finish()?;
    Ok(Ring::new(names).expect("identifiers validated by the lexer"))
}

pub fn parse_monomial(text: &str, ring: &Ring) -> Result<Monomial, ParseError> {
    let mut p = Parser::new(text)?;
    let m = p.monomial(ring)?;
    p.finish()?;
    Ok(m)
}

/// Parses and minimalizes an ideal.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<MonomialIdeal, ParseError> {
    let mut p = Parser::new(text)?;
    let ideal = p.ideal(ring)?;
    p.finish()?;
    Ok(ideal)
}

pub fn parse_prime(text: &str, ring: &Ring) -> Result<MonomialPrime, ParseError> {
    let mut p = Parser::new(text)?;
    p.expect(&Tok::LParen, "`(`")?;
    let mut vars = Vec::new();
    loop {
        let pos = p.pos();
        let v = p.variable(ring)?;
        if vars.contains(&v) {
            return Err(p.error_at(pos, ParseErrorKind::DuplicateVariable(ring.name(v).to_string())));
        }
        vars.push(v);
        if !p.eat(&Tok::Comma) {
            break;
        }
    }
    p.expect(&Tok::RParen, "`)` or `,`")?;
    p.finish()?;
    Ok(MonomialPrime::new(ring, vars).expect("non-empty, in range"))
}
