//! Compose two proofs with a cut, then eliminate cuts one redex at a
//! time. The continuation term stays the same up to bound names.

use lg_core::cps::cps_proof;
use lg_core::lambda::alpha_eq;
use lg_core::prover::{arrow_goal, compose_arrows, cut, reduce_principal_cut, replay, Proof, Prover, RuleApp};
use lg_core::structures::RuleConfig;
use lg_core::syntax::parse_formula;

/// Reduces the first reducible cut in preorder.
fn step(p: &Proof) -> Option<Proof> {
    if matches!(p.rule, RuleApp::Cut(_)) {
        if let Ok(r) = reduce_principal_cut(p) {
            return Some(r);
        }
    }
    p.premises.iter().enumerate().find_map(|(i, q)| {
        let r = step(q)?;
        let mut out = p.clone();
        out.premises[i] = r;
        Some(out)
    })
}

fn main() {
    let f = |s: &str| parse_formula(s).unwrap();
    let prover = Prover::new(RuleConfig::default()).unwrap();
    let ab = prover.prove(&arrow_goal(&f("p"), &f("^0(p^0)"))).unwrap();
    let bc = prover.prove(&arrow_goal(&f("^0(p^0)"), &f("^0(p^0)"))).unwrap();

    let arrow = compose_arrows(&ab, &bc).unwrap();
    println!("composed, replays: {}", replay(&arrow));
    print!("{}", arrow.render_text());

    let mut current = cut(&ab, &bc).unwrap();
    let term = cps_proof(&current).unwrap().term;
    println!("\n{}  term {term}", current.conclusion);
    while let Some(next) = step(&current) {
        current = next;
        let t = cps_proof(&current).unwrap().term;
        println!(
            "step: {} nodes, cut left: {}, replays {}, same term {}",
            current.size(),
            current.contains_cut(),
            replay(&current),
            alpha_eq(&t, &term)
        );
    }
    print!("{}", current.render_text());
}
