use std::collections::BTreeMap;

use log::debug;
use thiserror::Error;

use super::lexicon::{LexEntry, Lexicon};
use crate::cps::{cps_proof, CpsError, TypedTerm};
use crate::lambda::{alpha_eq, beta_normalize, check, Term};
use crate::prover::{ProveError, Prover};
use crate::structures::{RuleConfig, Sequent, Structure};
use crate::syntax::{lex_type, BinOp, Formula, Type};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemError {
    #[error("unknown word `{0}`")]
    UnknownWord(String),
    #[error("bad bracketing: {0}")]
    Brackets(String),
    #[error("no derivation of the sentence")]
    NoDerivation,
    #[error("no lexical binding for `{0}`")]
    Unbound(String),
    #[error("type error: {0}")]
    Type(String),
    #[error(transparent)]
    Prove(#[from] ProveError),
    #[error(transparent)]
    Cps(#[from] CpsError),
}

/// A bracketed phrase. Siblings combine right-branching by the structural
/// product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phrase {
    Word(String),
    Group(Vec<Phrase>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Raw {
    Token(String),
    Group(Vec<Raw>),
}

fn parse_raw(spec: &str) -> Result<Vec<Raw>, SemError> {
    let spaced = spec.replace('(', " ( ").replace(')', " ) ");
    let mut stack: Vec<Vec<Raw>> = vec![Vec::new()];
    for tok in spaced.split_whitespace() {
        match tok {
            "(" => stack.push(Vec::new()),
            ")" => {
                let group = stack.pop().unwrap();
                let parent = stack.last_mut().ok_or_else(|| SemError::Brackets("unbalanced `)`".into()))?;
                parent.push(Raw::Group(group));
            }
            word => stack.last_mut().unwrap().push(Raw::Token(word.to_string())),
        }
    }
    if stack.len() != 1 {
        return Err(SemError::Brackets("unbalanced `(`".into()));
    }
    Ok(stack.pop().unwrap())
}

/// Groups runs of tokens into lexicon keys, longest match first. A key
/// `picture_of` matches the tokens `picture of`.
fn segment(raw: &[Raw], lex: &Lexicon) -> Result<Vec<Phrase>, SemError> {
    let longest = lex.entries.keys().map(|k| k.split('_').count()).max().unwrap_or(1);
    let mut out = Vec::new();
    let mut i = 0;
    while i < raw.len() {
        match &raw[i] {
            Raw::Group(g) => {
                out.push(Phrase::Group(segment(g, lex)?));
                i += 1;
            }
            Raw::Token(tok) => {
                let mut matched = None;
                for len in (1..=longest).rev() {
                    let run: Option<Vec<&str>> = raw
                        .get(i..i + len)
                        .and_then(|s| s.iter().map(|r| if let Raw::Token(t) = r { Some(t.as_str()) } else { None }).collect());
                    if let Some(run) = run {
                        let key = run.join("_");
                        if !lex.lookup(&key).is_empty() {
                            matched = Some((key, len));
                            break;
                        }
                    }
                }
                let (key, len) = matched.ok_or_else(|| SemError::UnknownWord(tok.clone()))?;
                out.push(Phrase::Word(key));
                i += len;
            }
        }
    }
    if out.is_empty() {
        return Err(SemError::Brackets("empty group".into()));
    }
    Ok(out)
}

/// Reads a sentence with optional parentheses into phrases.
pub fn parse_phrase(text: &str, lex: &Lexicon) -> Result<Phrase, SemError> {
    let raw = parse_raw(text)?;
    let mut items = segment(&raw, lex)?;
    Ok(if items.len() == 1 { items.pop().unwrap() } else { Phrase::Group(items) })
}

impl Phrase {
    /// Words in left-to-right order.
    pub fn words(&self) -> Vec<&str> {
        match self {
            Phrase::Word(w) => vec![w],
            Phrase::Group(items) => items.iter().flat_map(Phrase::words).collect(),
        }
    }

    fn structure(&self, leaves: &mut impl Iterator<Item = Structure>) -> Structure {
        match self {
            Phrase::Word(_) => leaves.next().expect("one leaf per word"),
            Phrase::Group(items) => {
                let parts: Vec<Structure> = items.iter().map(|p| p.structure(leaves)).collect();
                parts.into_iter().rev().reduce(|acc, s| Structure::binary(BinOp::Prod, s, acc)).expect("non-empty")
            }
        }
    }
}

/// Substitutes lexical recipes for the free variables of a compiled term
/// and normalizes; the result is checked at `|type|_lex`.
pub fn lex_term(t: &TypedTerm, lex: &Lexicon, binding: &BTreeMap<String, &LexEntry>) -> Result<Term, SemError> {
    let mut map = BTreeMap::new();
    for name in t.free_env.keys() {
        let entry = binding.get(name).ok_or_else(|| SemError::Unbound(name.clone()))?;
        map.insert(name.clone(), entry.sem_term.clone());
    }
    let term = beta_normalize(&t.term.replace_free(&map));
    let ty = lex_type(&t.ty, &lex.atom_map).map_err(|e| SemError::Type(e.to_string()))?;
    check(&term, &lex.constants, &ty).map_err(|e| SemError::Type(e.to_string()))?;
    Ok(term)
}

/// Options for [`readings`].
#[derive(Clone, Debug)]
pub struct ReadingOptions {
    pub cfg: RuleConfig,
    /// Proofs enumerated per choice of lexical entries.
    pub limit: usize,
    pub max_steps: Option<usize>,
}

impl Default for ReadingOptions {
    fn default() -> Self {
        ReadingOptions { cfg: RuleConfig::default(), limit: 64, max_steps: None }
    }
}

/// The distinct meanings of a phrase at type `goal`: one per proof and
/// choice of lexical entries, up to α-equivalence, in discovery order.
pub fn readings(phrase: &Phrase, goal: &Formula, lex: &Lexicon, opts: &ReadingOptions) -> Result<Vec<Term>, SemError> {
    let words = phrase.words();
    let choices: Vec<&[LexEntry]> = words.iter().map(|w| lex.lookup(w)).collect();
    if let Some(i) = choices.iter().position(|c| c.is_empty()) {
        return Err(SemError::UnknownWord(words[i].to_string()));
    }
    let mut prover = Prover::new(opts.cfg)?;
    if let Some(n) = opts.max_steps {
        prover = prover.with_max_steps(n);
    }
    let mut out: Vec<Term> = Vec::new();
    let mut pick = vec![0usize; words.len()];
    loop {
        let entries: Vec<&LexEntry> = pick.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
        let mut leaves =
            entries.iter().enumerate().map(|(i, e)| Structure::var(i as u32 + 1, e.source_type.clone()));
        let goal_seq = Sequent::Right(phrase.structure(&mut leaves), goal.clone());
        let binding: BTreeMap<String, &LexEntry> =
            entries.iter().enumerate().map(|(i, e)| (format!("x{}", i + 1), *e)).collect();
        let proofs = match prover.enumerate(&goal_seq, opts.limit) {
            Ok(p) => p,
            Err(ProveError::NotDerivable) => Vec::new(),
            Err(e) => return Err(e.into()),
        };
        debug!("{goal_seq}: {} proofs", proofs.len());
        for proof in &proofs {
            let typed = cps_proof(proof)?;
            let term = lex_term(&typed, lex, &binding)?;
            if !out.iter().any(|t| alpha_eq(t, &term)) {
                out.push(term);
            }
        }
        // next combination of entries, last word fastest
        let mut i = words.len();
        loop {
            if i == 0 {
                return if out.is_empty() { Err(SemError::NoDerivation) } else { Ok(out) };
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// Applies a sentence meaning of type `(t -> t) -> t` to the identity
/// continuation.
pub fn evaluate(t: &Term, lex: &Lexicon) -> Result<Term, SemError> {
    let tt = Type::t();
    let expected = Type::arrow(Type::arrow(tt.clone(), tt.clone()), tt);
    check(t, &lex.constants, &expected).map_err(|e| SemError::Type(e.to_string()))?;
    Ok(beta_normalize(&Term::app(t.clone(), Term::abs("p", Term::var("p")))))
}
