use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::lambda::{check, parse_term, Term};
use crate::syntax::{cps_type, lex_type, parse_formula, Formula, SemType, Type, RESPONSE_ATOM};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("word `{word}`: expected type {expected}, but {actual}")]
    TypeMismatch { word: String, expected: String, actual: String },
    #[error("word `{word}`: {msg}")]
    Untranslatable { word: String, msg: String },
    #[error("the response atom needs a semantic type (`atom r = t`)")]
    MissingResponse,
}

/// One lexical assignment: a syntactic type and a closed semantic recipe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexEntry {
    pub word: String,
    pub source_type: Formula,
    pub sem_term: Term,
    /// `|cps_type(source_type)|_lex`
    pub sem_type: SemType,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    pub atom_map: BTreeMap<String, SemType>,
    pub constants: BTreeMap<String, SemType>,
    /// Entries per word, in file order.
    pub entries: BTreeMap<String, Vec<LexEntry>>,
}

/// Parses `e`, `t`, other atoms, right-associative `->` and parentheses.
pub fn parse_sem_type(text: &str) -> Result<SemType, String> {
    let tokens: Vec<String> = text
        .replace("->", " -> ")
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let mut pos = 0;
    let ty = sem_arrow(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(format!("unexpected `{}` in type", tokens[pos]));
    }
    Ok(ty)
}

fn sem_arrow(tokens: &[String], pos: &mut usize) -> Result<SemType, String> {
    let dom = sem_atom(tokens, pos)?;
    if tokens.get(*pos).map(String::as_str) == Some("->") {
        *pos += 1;
        Ok(Type::arrow(dom, sem_arrow(tokens, pos)?))
    } else {
        Ok(dom)
    }
}

fn sem_atom(tokens: &[String], pos: &mut usize) -> Result<SemType, String> {
    let tok = tokens.get(*pos).ok_or("type ends too early")?;
    *pos += 1;
    if tok == "(" {
        let inner = sem_arrow(tokens, pos)?;
        if tokens.get(*pos).map(String::as_str) != Some(")") {
            return Err("missing `)` in type".into());
        }
        *pos += 1;
        Ok(inner)
    } else if tok.chars().all(|c| c.is_alphanumeric() || c == '_') {
        Ok(Type::atom(tok.clone()))
    } else {
        Err(format!("unexpected `{tok}` in type"))
    }
}

fn split_once_trim(s: &str, sep: char) -> Option<(&str, &str)> {
    s.split_once(sep).map(|(a, b)| (a.trim(), b.trim()))
}

impl Lexicon {
    /// Parses and validates a lexicon file.
    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let mut lex = Lexicon::default();
        let mut words = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| LexiconError::Syntax { line: line_no, msg };
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (kw, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err(format!("cannot read `{line}`")))?;
            match kw {
                "atom" => {
                    let (name, ty) = split_once_trim(rest, '=').ok_or_else(|| err("expected `atom <name> = <type>`".into()))?;
                    lex.atom_map.insert(name.to_string(), parse_sem_type(ty).map_err(err)?);
                }
                "const" => {
                    let (name, ty) = split_once_trim(rest, ':').ok_or_else(|| err("expected `const <name> : <type>`".into()))?;
                    lex.constants.insert(name.to_string(), parse_sem_type(ty).map_err(err)?);
                }
                "word" => {
                    let (word, rest) =
                        split_once_trim(rest, ':').ok_or_else(|| err("expected `word <w> : <formula> = <term>`".into()))?;
                    let (formula, term) =
                        split_once_trim(rest, '=').ok_or_else(|| err("expected `word <w> : <formula> = <term>`".into()))?;
                    let formula = parse_formula(formula).map_err(|e| err(e.to_string()))?;
                    let term = parse_term(term).map_err(|e| err(e.to_string()))?;
                    words.push((word.to_string(), formula, term));
                }
                other => return Err(err(format!("unknown declaration `{other}`"))),
            }
        }
        if !lex.atom_map.contains_key(RESPONSE_ATOM) {
            return Err(LexiconError::MissingResponse);
        }
        for (word, formula, term) in words {
            lex.add(&word, formula, term)?;
        }
        Ok(lex)
    }

    /// Declared constant names.
    pub fn constant_names(&self) -> BTreeSet<String> {
        self.constants.keys().cloned().collect()
    }

    /// Parses a term, reading declared constants as constants.
    pub fn term(&self, text: &str) -> Result<Term, String> {
        Ok(parse_term(text).map_err(|e| e.to_string())?.close_over(&self.constant_names()))
    }

    /// `|cps_type(f)|_lex`
    pub fn sem_type_of(&self, f: &Formula) -> Result<SemType, String> {
        let target = cps_type(f).map_err(|e| e.to_string())?;
        lex_type(&target, &self.atom_map).map_err(|e| e.to_string())
    }

    /// Validates and adds an entry.
    pub fn add(&mut self, word: &str, source_type: Formula, term: Term) -> Result<(), LexiconError> {
        let sem_term = term.close_over(&self.constant_names());
        let untranslatable = |msg: String| LexiconError::Untranslatable { word: word.to_string(), msg };
        let sem_type = self.sem_type_of(&source_type).map_err(untranslatable)?;
        if let Some(x) = sem_term.free_vars().into_iter().next() {
            return Err(untranslatable(format!("`{x}` is neither bound nor a declared constant")));
        }
        check(&sem_term, &self.constants, &sem_type).map_err(|e| LexiconError::TypeMismatch {
            word: word.to_string(),
            expected: sem_type.to_string(),
            actual: e.to_string(),
        })?;
        let entry = LexEntry { word: word.to_string(), source_type, sem_term, sem_type };
        self.entries.entry(word.to_string()).or_default().push(entry);
        Ok(())
    }

    pub fn lookup(&self, word: &str) -> &[LexEntry] {
        self.entries.get(word).map(Vec::as_slice).unwrap_or(&[])
    }
}
