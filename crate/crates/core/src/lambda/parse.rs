use thiserror::Error;

use super::term::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("term syntax error at offset {pos}: {msg}")]
pub struct TermParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Lambda,
    Dot,
    LParen,
    RParen,
    Ident(String),
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TermParseError> {
    let mut toks = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '\\' | 'λ' => {
                chars.next();
                toks.push((i, Tok::Lambda));
            }
            '.' => {
                chars.next();
                toks.push((i, Tok::Dot));
            }
            '(' => {
                chars.next();
                toks.push((i, Tok::LParen));
            }
            ')' => {
                chars.next();
                toks.push((i, Tok::RParen));
            }
            c if is_ident_char(c) => {
                let mut name = String::new();
                while let Some(&(_, c)) = chars.peek() {
                    if !is_ident_char(c) {
                        break;
                    }
                    name.push(c);
                    chars.next();
                }
                toks.push((i, Tok::Ident(name)));
            }
            other => return Err(TermParseError { pos: i, msg: format!("unexpected character `{other}`") }),
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

    fn err<T>(&self, msg: &str) -> Result<T, TermParseError> {
        let pos = self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end);
        Err(TermParseError { pos, msg: msg.to_string() })
    }

    fn term(&mut self) -> Result<Term, TermParseError> {
        if self.peek() == Some(&Tok::Lambda) {
            self.pos += 1;
            let mut vars = Vec::new();
            while let Some(Tok::Ident(x)) = self.peek().cloned() {
                self.pos += 1;
                vars.push(x);
            }
            if vars.is_empty() {
                return self.err("expected a bound variable");
            }
            if self.peek() != Some(&Tok::Dot) {
                return self.err("expected `.`");
            }
            self.pos += 1;
            let body = self.term()?;
            return Ok(vars.into_iter().rev().fold(body, |b, x| Term::abs(x, b)));
        }
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Ident(_)) | Some(Tok::LParen) => t = Term::app(t, self.atom()?),
                Some(Tok::Lambda) => return Ok(Term::app(t, self.term()?)),
                _ => return Ok(t),
            }
        }
    }

    fn atom(&mut self) -> Result<Term, TermParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(x)) => {
                self.pos += 1;
                Ok(Term::Var(x))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let t = self.term()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(t)
            }
            Some(_) => self.err("expected a term"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `\x y. M`, juxtaposition and parentheses. Every identifier comes
/// back as a variable; see [`Term::close_over`] for constants.
pub fn parse_term(text: &str) -> Result<Term, TermParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len() };
    let t = p.term()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(t)
}
