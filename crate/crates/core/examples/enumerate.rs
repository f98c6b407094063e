//! All derivations of the scope example and the term each one denotes.

use std::collections::BTreeMap;

use lg_core::cps::cps_proof;
use lg_core::lambda::Term;
use lg_core::prover::Prover;
use lg_core::structures::{RuleConfig, Sequent, Structure};
use lg_core::syntax::{parse_formula, BinOp};

fn main() {
    let f = |s: &str| parse_formula(s).unwrap();
    let gq = f("^1(np^1)");
    // su .*. (tv .*. do) |- s
    let x = Structure::binary(
        BinOp::Prod,
        Structure::var(1, gq.clone()),
        Structure::binary(BinOp::Prod, Structure::var(2, f("(np \\ s) / np")), Structure::var(3, gq)),
    );
    let goal = Sequent::Right(x, f("s"));
    let proofs = Prover::new(RuleConfig::default()).unwrap().enumerate(&goal, 16).unwrap();
    let names: BTreeMap<String, Term> =
        [("x1", "su"), ("x2", "tv"), ("x3", "do")].map(|(k, v)| (k.to_string(), Term::var(v))).into();
    println!("{} derivations of {goal}", proofs.len());
    for (i, p) in proofs.iter().enumerate() {
        let t = cps_proof(p).unwrap();
        println!("#{} ({} steps)  {}", i + 1, p.size(), t.term.replace_free(&names));
    }
}
