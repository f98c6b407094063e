use thiserror::Error;

use super::formula::{BinOp, Formula, UnOp, RESPONSE_ATOM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("atom `r` at offset {pos} is reserved for the response type")]
    ReservedAtom { pos: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(String),
    Bin(BinOp),
    Prefix(UnOp),
    Postfix(UnOp),
    LParen,
    RParen,
    Arrow,
}

/// `^0`/`^1` are postfix when they follow an operand and prefix otherwise.
fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks: Vec<(usize, Tok)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let after_operand = matches!(toks.last(), Some((_, Tok::Atom(_) | Tok::RParen | Tok::Postfix(_))));
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                if i + 2 < bytes.len() && bytes[i + 2] == b')' && matches!(bytes[i + 1], b'/' | b'\\') {
                    let op = if bytes[i + 1] == b'/' { BinOp::RDiff } else { BinOp::LDiff };
                    toks.push((i, Tok::Bin(op)));
                    i += 3;
                } else {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Bin(BinOp::Prod)));
                i += 1;
            }
            b'+' => {
                toks.push((i, Tok::Bin(BinOp::Coprod)));
                i += 1;
            }
            b'/' => {
                toks.push((i, Tok::Bin(BinOp::Over)));
                i += 1;
            }
            b'\\' => {
                toks.push((i, Tok::Bin(BinOp::Under)));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                toks.push((i, Tok::Arrow));
                i += 2;
            }
            b'^' => {
                let digit = bytes.get(i + 1).copied();
                let tok = match (digit, after_operand) {
                    (Some(b'0'), true) => Tok::Postfix(UnOp::GalR),
                    (Some(b'1'), true) => Tok::Postfix(UnOp::DGalR),
                    (Some(b'0'), false) => Tok::Prefix(UnOp::GalL),
                    (Some(b'1'), false) => Tok::Prefix(UnOp::DGalL),
                    _ => {
                        return Err(ParseError::Syntax { pos: i, msg: "expected `^0` or `^1`".into() });
                    }
                };
                toks.push((i, tok));
                i += 2;
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let name = &text[start..i];
                if name == RESPONSE_ATOM {
                    return Err(ParseError::ReservedAtom { pos: start });
                }
                toks.push((start, Tok::Atom(name.to_string())));
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character `{}`", text[i..].chars().next().unwrap_or('?')),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Formula, ParseError> {
        let left = self.unary()?;
        if let Some(Tok::Bin(op)) = self.peek().cloned() {
            self.pos += 1;
            let right = self.unary()?;
            if let Some(Tok::Bin(next)) = self.peek() {
                return if *next == op {
                    self.err(format!("`{}` does not associate; add parentheses", op.symbol()))
                } else {
                    self.err("mixed binary operators need parentheses")
                };
            }
            return Ok(Formula::binary(op, left, right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if let Some(Tok::Prefix(op)) = self.peek().cloned() {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Formula::unary(op, inner));
        }
        let mut f = self.primary()?;
        while let Some(Tok::Postfix(op)) = self.peek().cloned() {
            self.pos += 1;
            f = Formula::unary(op, f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Atom(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(f)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected an atom, `(` or a prefix negation"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
}

/// Parses a formula in the ASCII concrete syntax.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = parser(text)?;
    let f = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(f)
}

/// Parses an arrow sequent `A -> B`.
pub fn parse_arrow(text: &str) -> Result<(Formula, Formula), ParseError> {
    let mut p = parser(text)?;
    let a = p.expr()?;
    match p.peek() {
        Some(Tok::Arrow) => p.pos += 1,
        _ => return p.err("expected `->`"),
    }
    let b = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok((a, b))
}
