//! The same arrows under different interaction groups.

use lg_core::prover::{arrow_goal, Prover};
use lg_core::structures::RuleConfig;
use lg_core::syntax::parse_arrow;

fn main() {
    let configs = [
        ("none", RuleConfig::base()),
        ("distr,distr-unary", RuleConfig::default()),
        ("distr-inv", RuleConfig::from_groups("distr-inv").unwrap()),
    ];
    let arrows = [
        "p -> ^0(p^0)",
        "^1 p -> p^0",
        "(p (\\) q) * n -> p (\\) (q * n)",
        "(p + q) * n -> p + (q * n)",
        "p * q -> q * p",
    ];
    for text in arrows {
        let (a, b) = parse_arrow(text).unwrap();
        let goal = arrow_goal(&a, &b);
        print!("{text:36}");
        for (name, cfg) in &configs {
            let graph = Prover::new(*cfg).unwrap().graph(&goal).unwrap();
            let mark = if graph.provable() { "yes" } else { "no" };
            print!("  {name}: {mark:3} ({} states)", graph.stats().states);
        }
        println!();
    }

    // a group together with its converse needs an explicit override
    let both = RuleConfig::from_groups("distr,distr-inv").unwrap();
    println!("both groups: {:?}", Prover::new(both).err());
}
