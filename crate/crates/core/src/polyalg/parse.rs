//! Recursive-descent parser for polynomial strings.
//!
//! ```text
//! expression := ['-'] term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := base ('^' integer)?
//! base       := integer ('/' integer)? | identifier | '(' expression ')'
//! ```
//!
//! Positions in errors are byte offsets into the input.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, PolyError, Rational, Vars};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(i) => format!("integer `{}`", i),
        Tok::Ident(s) => format!("identifier `{}`", s),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Slash => "`/`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().expect("digits parse as integer");
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(PolyError::Syntax { pos: start, msg: format!("unexpected character `{}`", ch) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expecting: &str) -> PolyError {
        PolyError::Syntax {
            pos: self.pos(),
            msg: format!("expected {}, found {}", expecting, describe(self.peek())),
        }
    }

    fn expression(&mut self) -> Result<Polynomial, PolyError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        let e = match self.bump() {
            Tok::Int(n) => u32::try_from(n).map_err(|_| PolyError::BadExponent { pos })?,
            _ => return Err(PolyError::BadExponent { pos }),
        };
        // `x^2/3` or `x^2(...)` would otherwise surface as a generic syntax error
        if matches!(self.peek(), Tok::Slash) {
            return Err(PolyError::BadExponent { pos });
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut value = Rational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let dpos = self.pos();
                    match self.bump() {
                        Tok::Int(d) if !d.is_zero() => value /= Rational::from_integer(d),
                        Tok::Int(_) => {
                            return Err(PolyError::Syntax { pos: dpos, msg: "division by zero".into() })
                        }
                        _ => {
                            return Err(PolyError::Syntax {
                                pos: dpos,
                                msg: "denominator must be an integer literal".into(),
                            })
                        }
                    }
                }
                Ok(Polynomial::constant(self.vars, value))
            }
            Tok::Ident(name) => {
                self.bump();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(self.vars, i)),
                    None => Err(PolyError::UnknownVariable { name, pos }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expression()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or `(`")),
        }
    }
}

/// Parses `text` into a canonical polynomial over `variables`.
pub fn parse_polynomial(text: &str, variables: &Vars) -> Result<Polynomial, PolyError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, vars: variables };
    let out = p.expression()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(out)
}
