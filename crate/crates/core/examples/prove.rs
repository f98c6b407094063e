//! Prove one arrow and print the derivation as text and as JSON.
//!
//!     cargo run --example prove -- "^1 p -> p^0"

use lg_core::prover::{arrow_goal, Prover};
use lg_core::structures::RuleConfig;
use lg_core::syntax::parse_arrow;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "^1 p -> p^0".into());
    let (a, b) = parse_arrow(&text).expect("arrow");
    let prover = Prover::new(RuleConfig::default()).unwrap();
    match prover.prove(&arrow_goal(&a, &b)) {
        Ok(proof) => {
            print!("{}", proof.render_text());
            println!("{}", serde_json::to_string_pretty(&proof).unwrap());
        }
        Err(e) => println!("{text}: {e}"),
    }
}
