//! Display equivalence: every rewriting of a sequent that brings another
//! part of the structure to the top.

use lg_core::structures::{canonical, display_moves, display_orbit, Sequent, Structure};
use lg_core::syntax::{parse_formula, BinOp, UnOp};

fn main() {
    let f = |s: &str| parse_formula(s).unwrap();
    let x = Structure::binary(BinOp::Prod, Structure::var(1, f("np")), Structure::var(2, f("np \\ s")));
    let y = Structure::unary(UnOp::GalR, Structure::var(3, f("s")));
    let s = Sequent::passive(x, y);
    println!("{s}");
    for (rule, t) in display_moves(&s) {
        println!("  {:4} {t}", rule.name());
    }
    let orbit = display_orbit(&s);
    println!("orbit of {} sequents, representative {}", orbit.len(), canonical(&s));
    for t in orbit {
        println!("  {t}");
    }
}
