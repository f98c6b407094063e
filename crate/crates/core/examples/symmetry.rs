//! The mirror and dual images of formulas, and what they do to verdicts.

use lg_core::prover::{arrow_goal, Prover};
use lg_core::structures::RuleConfig;
use lg_core::syntax::{bowtie, infinity, parse_arrow, parse_formula, Formula};

fn main() {
    for text in ["np \\ s", "(p * q)^0", "^1 p", "(p (\\) q) * n"] {
        let f = parse_formula(text).unwrap();
        println!("{text:16} mirror {:16} dual {}", bowtie(&f).to_string(), infinity(&f));
    }

    let prover = Prover::new(RuleConfig::default()).unwrap();
    let holds = |a: &Formula, b: &Formula| prover.derivable(&arrow_goal(a, b)).unwrap();
    for text in ["^1 p -> p^0", "(p (\\) q) * n -> p (\\) (q * n)", "p * q -> q * p"] {
        let (a, b) = parse_arrow(text).unwrap();
        println!(
            "{text}: {}  mirrored: {}  dual reversed: {}",
            holds(&a, &b),
            holds(&bowtie(&a), &bowtie(&b)),
            holds(&infinity(&b), &infinity(&a)),
        );
    }
}
