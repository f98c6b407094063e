//! Load a lexicon, list its entries with their semantic types, and show
//! the diagnostic for an ill-typed recipe.

use lg_core::semantics::Lexicon;

const LEXICON: &str = include_str!("../data/illustrations.lg");

fn main() {
    let lex = Lexicon::parse(LEXICON).unwrap();
    for entries in lex.entries.values() {
        for e in entries {
            println!("{:12} {:30} {}", e.word, e.source_type.to_string(), e.sem_type);
        }
    }

    let broken = LEXICON.replace("word left : np \\ s = \\c x. c (left x)", "word left : np \\ s = left");
    println!("\n{}", Lexicon::parse(&broken).unwrap_err());
}
