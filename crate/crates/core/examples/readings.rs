//! Sentence meanings from the bundled lexicon.

use lg_core::semantics::{evaluate, parse_phrase, readings, Lexicon, ReadingOptions};
use lg_core::syntax::parse_formula;

fn main() {
    let lex = Lexicon::parse(include_str!("../data/illustrations.lg")).unwrap();
    let opts = ReadingOptions::default();
    let sentences = [
        ("everyone likes someone", "s"),
        ("every picture of some teacher", "np"),
        ("alice (claims ((some unicorn) left))", "s"),
        ("molly tease+ed leopold", "s"),
        ("john (hopefully left)", "s"),
    ];
    for (text, goal) in sentences {
        let goal = parse_formula(goal).unwrap();
        let phrase = parse_phrase(text, &lex).unwrap();
        println!("{text} |- {goal}");
        for t in readings(&phrase, &goal, &lex, &opts).unwrap() {
            match evaluate(&t, &lex) {
                Ok(v) => println!("  {t}\n    = {v}"),
                Err(_) => println!("  {t}"),
            }
        }
    }
}
