//! The target calculus on its own: parsing, normalization, alpha
//! equivalence, linearity and typing.

use std::collections::BTreeMap;

use lg_core::lambda::{alpha_eq, beta_normalize, is_fully_linear, parse_term, typecheck};
use lg_core::syntax::Type;

fn main() {
    let t = parse_term("(\\k. k x) (\\y. a y)").unwrap();
    let nf = beta_normalize(&t);
    println!("{t}  ->  {nf}");

    let env = BTreeMap::from([
        ("x".to_string(), Type::atom("p")),
        ("a".to_string(), Type::atom("p").perp()),
    ]);
    println!("type {}", typecheck(&nf, &env).unwrap());
    println!("linear {}", is_fully_linear(&t));

    let every = parse_term("\\Q P. forall (\\x. implies (P x) (Q x))").unwrap();
    println!("{every} linear: {}", is_fully_linear(&every));

    let a = parse_term("\\x y. x y").unwrap();
    let b = parse_term("\\y x. y x").unwrap();
    println!("{a} ~ {b}: {}", alpha_eq(&a, &b));
}
