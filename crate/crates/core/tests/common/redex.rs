//! Principal cuts on the four negations.

use lg_core::prover::{prove, Conn, Proof, RuleApp, Side};
use lg_core::structures::{RuleConfig, Sequent, Structure};
use lg_core::syntax::{Formula, UnOp};

/// A cut between the right and left rules of `op` on `op(p)`. The side
/// whose rule is invertible comes from the prover, the other one is built
/// over an axiom.
pub fn negation_redex(op: UnOp) -> Proof {
    let p = Formula::atom("p");
    let np = Formula::unary(op, p.clone());
    let cfg = RuleConfig::default();
    let (m, k) = match op {
        UnOp::GalL | UnOp::GalR => {
            let m = prove(&Sequent::Right(Structure::var(1, np.clone()), np.clone()), &cfg).unwrap();
            let ax = Proof::leaf(Sequent::Right(Structure::var(2, p.clone()), p.clone()), RuleApp::Ax);
            let concl = Sequent::Left(np.clone(), Structure::unary(op, Structure::var(2, p.clone())));
            (m, Proof::node(concl, RuleApp::Logical(Conn::Un(op), Side::L), vec![ax]))
        }
        UnOp::DGalL | UnOp::DGalR => {
            let k = prove(&Sequent::Left(np.clone(), Structure::covar(1, np.clone())), &cfg).unwrap();
            let coax = Proof::leaf(Sequent::Left(p.clone(), Structure::covar(2, p.clone())), RuleApp::CoAx);
            let concl = Sequent::Right(Structure::unary(op, Structure::covar(2, p.clone())), np.clone());
            (Proof::node(concl, RuleApp::Logical(Conn::Un(op), Side::R), vec![coax]), k)
        }
    };
    assert_eq!(m.rule, RuleApp::Logical(Conn::Un(op), Side::R), "{}", m.render_text());
    assert_eq!(k.rule, RuleApp::Logical(Conn::Un(op), Side::L), "{}", k.render_text());
    let Sequent::Right(x, _) = &m.conclusion else { unreachable!() };
    let Sequent::Left(_, y) = &k.conclusion else { unreachable!() };
    Proof::node(Sequent::Passive(x.clone(), y.clone()), RuleApp::Cut(np), vec![m, k])
}
