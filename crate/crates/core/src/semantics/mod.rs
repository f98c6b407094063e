//! Lexicons, the lexical interpretation of compiled proofs, and sentence
//! readings.

mod lexicon;
mod readings;

pub use lexicon::{parse_sem_type, LexEntry, Lexicon, LexiconError};
pub use readings::{evaluate, lex_term, parse_phrase, readings, Phrase, ReadingOptions, SemError};
