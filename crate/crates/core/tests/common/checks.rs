//! Checks shared by the property suites and the acceptance run.

use std::time::{Duration, Instant};

use lg_core::cps::{cps_proof, cps_raw, leaf_name, sequent_target_type};
use lg_core::lambda::{alpha_eq, check, is_fully_linear, is_normal, Term};
use lg_core::prover::{arrow_goal, replay, Proof, Prover};
use lg_core::semantics::{parse_phrase, readings, Lexicon, ReadingOptions};
use lg_core::structures::RuleConfig;
use lg_core::syntax::{bowtie, infinity, parse_formula, Formula, UnOp};
use proptest::prelude::*;

use super::oracle::{self, Groups};

pub fn inverse_only() -> RuleConfig {
    RuleConfig { distr_binary: false, distr_unary: false, distr_inverse: true, allow_both: false }
}

pub fn groups(cfg: &RuleConfig) -> Groups {
    Groups { distr: cfg.distr_binary, unary: cfg.distr_unary, inverse: cfg.distr_inverse }
}

pub fn verdict(a: &Formula, b: &Formula, cfg: RuleConfig) -> bool {
    Prover::new(cfg).unwrap().derivable(&arrow_goal(a, b)).unwrap()
}

/// The prover's verdict on `text` after checking it against the oracle,
/// replaying the proof and timing the search.
pub fn adjudicated(text: &str, cfg: RuleConfig, limit: Duration) -> Result<bool, String> {
    let (a, b) = super::arrow(text);
    let goal = arrow_goal(&a, &b);
    let start = Instant::now();
    let prover = Prover::new(cfg).unwrap();
    let found = prover.derivable(&goal).unwrap();
    if found && !replay(&prover.prove(&goal).unwrap()) {
        return Err(format!("{text}: proof does not replay"));
    }
    if start.elapsed() >= limit {
        return Err(format!("{text}: took {:?}", start.elapsed()));
    }
    let expected = oracle::derivable(&a, &b, groups(&cfg));
    if found != expected {
        return Err(format!("{text}: prover says {found}, oracle {expected}"));
    }
    Ok(found)
}

/// Every subproof compiles to a linear normal term of its sequent's type
/// whose free names are exactly the conclusion's leaves; structural nodes
/// pass their premise's term through.
pub fn cps_checks(p: &Proof) -> Result<(), TestCaseError> {
    for node in p.nodes() {
        let t = cps_proof(node).unwrap();
        prop_assert_eq!(&t.ty, &sequent_target_type(&node.conclusion).unwrap());
        prop_assert!(check(&t.term, &t.free_env, &t.ty).is_ok(), "{} : {}", t.term, t.ty);
        prop_assert!(is_fully_linear(&t.term), "{}", t.term);
        prop_assert!(is_normal(&t.term));
        let mut leaves: Vec<String> =
            node.conclusion.leaves().iter().map(|l| leaf_name(l.polarity(), l.leaf_label().unwrap())).collect();
        leaves.sort();
        prop_assert_eq!(t.free_env.keys().cloned().collect::<Vec<_>>(), leaves);
        prop_assert_eq!(t.term.free_vars(), t.free_env.keys().cloned().collect());
        if node.rule.is_structural() {
            let (own, below) = (cps_raw(node).unwrap(), cps_raw(&node.premises[0]).unwrap());
            prop_assert!(alpha_eq(&own, &below), "{}: {} vs {}", node.rule.name(), own, below);
        }
    }
    Ok(())
}

pub fn symmetry_configs() -> [RuleConfig; 3] {
    [RuleConfig::default(), RuleConfig::base(), inverse_only()]
}

/// Mirror image preserves the verdict, the dual reverses the arrow, and
/// the four negations are antitone.
pub fn symmetry_checks(a: &Formula, b: &Formula) -> Result<(), TestCaseError> {
    for cfg in symmetry_configs() {
        let v = verdict(a, b, cfg);
        prop_assert_eq!(v, verdict(&bowtie(a), &bowtie(b), cfg), "bowtie {} -> {} under {:?}", a, b, cfg);
        prop_assert_eq!(v, verdict(&infinity(b), &infinity(a), cfg), "infinity {} -> {} under {:?}", a, b, cfg);
    }
    let cfg = RuleConfig::default();
    if verdict(a, b, cfg) {
        for op in [UnOp::GalL, UnOp::GalR, UnOp::DGalL, UnOp::DGalR] {
            let (na, nb) = (Formula::unary(op, a.clone()), Formula::unary(op, b.clone()));
            prop_assert!(verdict(&nb, &na, cfg), "{} -> {}", nb, na);
        }
    }
    Ok(())
}

pub fn lexicon() -> Lexicon {
    Lexicon::parse(super::corpus::LEXICON).unwrap()
}

pub fn read(lex: &Lexicon, sentence: &str, goal: &str) -> Vec<Term> {
    let phrase = parse_phrase(sentence, lex).unwrap();
    readings(&phrase, &parse_formula(goal).unwrap(), lex, &ReadingOptions::default()).unwrap()
}

/// `got` is exactly `expected` up to bound names.
pub fn same_readings(lex: &Lexicon, got: &[Term], expected: &[&str]) -> Result<(), String> {
    let expected: Vec<Term> = expected.iter().map(|t| lex.term(t).unwrap()).collect();
    let shown: Vec<String> = got.iter().map(|t| t.to_string()).collect();
    if got.len() != expected.len() {
        return Err(format!("expected {} readings, got {shown:?}", expected.len()));
    }
    for e in &expected {
        if !got.iter().any(|g| alpha_eq(g, e)) {
            return Err(format!("missing {e} in {shown:?}"));
        }
    }
    Ok(())
}
