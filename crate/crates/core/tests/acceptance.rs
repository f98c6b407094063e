//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::arrow;
use common::checks::*;
use common::corpus::*;
use common::gen::{arrow as random_arrow, cps_arrow};
use common::redex::negation_redex;
use lg_core::cps::cps_proof;
use lg_core::lambda::alpha_eq;
use lg_core::prover::{arrow_goal, reduce_principal_cut, replay, Prover, RuleApp};
use lg_core::semantics::{Lexicon, LexiconError};
use lg_core::structures::RuleConfig;
use lg_core::syntax::{bowtie, Formula, UnOp};
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn runner() -> TestRunner {
    let config = Config { cases: 100, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn expect(text: &str, cfg: RuleConfig, want: bool) -> Result<(), String> {
    match adjudicated(text, cfg, Duration::from_secs(5))? {
        got if got == want => Ok(()),
        got => Err(format!("{text}: expected {want}, got {got} under {cfg:?}")),
    }
}

fn derivability() -> Outcome {
    let default = RuleConfig::default();
    for t in DEFAULT_YES {
        expect(t, default, true)?;
    }
    for t in &DEFAULT_YES[CLOSURE_INTERIOR] {
        expect(t, RuleConfig::base(), true)?;
    }
    let (a, b) = arrow(DEFAULT_YES[DE_MORGAN.start]);
    expect(&format!("{} -> {}", bowtie(&a), bowtie(&b)), default, true)?;
    for t in DEFAULT_NO.iter().chain(INVERSE_ONLY) {
        expect(t, default, false)?;
    }
    Ok(format!("{} verdicts agree with the oracle", DEFAULT_YES.len() + 4 + 1 + DEFAULT_NO.len() + INVERSE_ONLY.len()))
}

fn converse_group() -> Outcome {
    for t in &INVERSE_ONLY[COPRODUCT] {
        expect(t, inverse_only(), true)?;
        let (a, b) = arrow(t);
        expect(&format!("{b} -> {a}"), inverse_only(), false)?;
    }
    Ok("4 arrows provable, converses not".into())
}

fn scope() -> Outcome {
    let lex = lexicon();
    let (sentence, goal, expected) = SCOPE;
    let start = Instant::now();
    let got = read(&lex, sentence, goal);
    same_readings(&lex, &got, expected)?;
    let took = start.elapsed();
    if took >= Duration::from_secs(30) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("2 readings in {took:?}"))
}

fn golden() -> Outcome {
    let lex = lexicon();
    for (sentence, goal, expected) in GOLDEN {
        same_readings(&lex, &read(&lex, sentence, goal), expected).map_err(|e| format!("{sentence}: {e}"))?;
    }
    Ok(format!("{} sentences", GOLDEN.len()))
}

fn cps_suite() -> Outcome {
    let prover = Prover::new(RuleConfig::default()).unwrap();
    let provable = cps_arrow().prop_filter("provable", |(a, b)| verdict(a, b, RuleConfig::default()));
    runner()
        .run(&provable, |(a, b)| {
            for p in prover.enumerate(&arrow_goal(&a, &b), 3).unwrap() {
                cps_checks(&p)?;
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok("100 provable sequents".into())
}

fn symmetry() -> Outcome {
    runner().run(&random_arrow(), |(a, b)| symmetry_checks(&a, &b)).map_err(|e| e.to_string())?;
    Ok("100 arrows, same groups on both sides of the dual".into())
}

fn cut_reduction() -> Outcome {
    let p = Formula::atom("p");
    for op in [UnOp::GalL, UnOp::GalR, UnOp::DGalL, UnOp::DGalR] {
        let before = negation_redex(op);
        let after = reduce_principal_cut(&before).map_err(|e| format!("{op:?}: {e}"))?;
        let cuts: Vec<_> = after.nodes().into_iter().filter(|n| matches!(n.rule, RuleApp::Cut(_))).collect();
        let ok = replay(&before)
            && replay(&after)
            && after.conclusion == before.conclusion
            && cuts.len() == 1
            && cuts[0].rule == RuleApp::Cut(p.clone())
            && alpha_eq(&cps_proof(&before).unwrap().term, &cps_proof(&after).unwrap().term);
        if !ok {
            return Err(format!("{op:?}:\n{}", after.render_text()));
        }
    }
    Ok("4 negation redexes".into())
}

fn lexicon_check() -> Outcome {
    let n: usize = Lexicon::parse(LEXICON).map_err(|e| e.to_string())?.entries.values().map(Vec::len).sum();
    let bad = LEXICON.replace("word left : np \\ s = \\c x. c (left x)", "word left : np \\ s = left");
    match Lexicon::parse(&bad) {
        Err(e @ LexiconError::TypeMismatch { .. }) if e.to_string().contains("`left`") => {
            Ok(format!("{n} entries; corrupted entry rejected: {e}"))
        }
        other => Err(format!("corrupted lexicon gave {other:?}")),
    }
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("derivability suite", derivability),
        ("converse group suite", converse_group),
        ("scope readings", scope),
        ("golden readings", golden),
        ("continuation terms", cps_suite),
        ("symmetries", symmetry),
        ("cut reduction", cut_reduction),
        ("lexicon validation", lexicon_check),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
