//! Compile proofs to linear lambda terms and type-check them against the
//! sequent's continuation type.

use lg_core::cps::{cps_proof, cps_raw, sequent_target_type};
use lg_core::lambda::{check, is_fully_linear};
use lg_core::prover::{arrow_goal, Prover};
use lg_core::structures::RuleConfig;
use lg_core::syntax::parse_arrow;

fn main() {
    let prover = Prover::new(RuleConfig::default()).unwrap();
    for text in ["p -> p", "^1 p -> p^0", "p -> ^0(p^0)", "^1(p^1) -> p", "p \\ q -> p \\ q", "p -> q / (p \\ q)"] {
        let (a, b) = parse_arrow(text).unwrap();
        let proof = prover.prove(&arrow_goal(&a, &b)).unwrap();
        let t = cps_proof(&proof).unwrap();
        let typed = check(&t.term, &t.free_env, &t.ty).is_ok();
        println!("{text}");
        println!("  raw    {}", cps_raw(&proof).unwrap());
        println!("  normal {}", t.term);
        println!("  type   {}  (checks: {typed}, linear: {})", t.ty, is_fully_linear(&t.term));
        assert_eq!(t.ty, sequent_target_type(&proof.conclusion).unwrap());
    }

    // product and coproduct have no continuation reading
    let (a, b) = parse_arrow("p * q -> p * q").unwrap();
    let proof = prover.prove(&arrow_goal(&a, &b)).unwrap();
    println!("p * q -> p * q: {}", cps_proof(&proof).unwrap_err());
}
