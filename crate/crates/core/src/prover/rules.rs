use super::proof::{Conn, Proof, RuleApp, Side};
use crate::structures::{all_rules, bin_polarity, display_moves, un_polarity, Label, Polarity, Sequent, Structure};
use crate::syntax::{BinOp, Formula, UnOp};

/// Polarity of the structural counterpart of the main connective. Input
/// connectives have invertible left rules, output connectives invertible
/// right rules.
pub(crate) fn main_polarity(f: &Formula) -> Option<Polarity> {
    match f {
        Formula::Atom(_) => None,
        Formula::Binary(op, ..) => Some(bin_polarity(*op).0),
        Formula::Unary(op, _) => Some(un_polarity(*op).0),
    }
}

/// Whether a passive leaf decomposes by an invertible rule.
pub(crate) fn invertible_leaf(leaf: &Structure) -> bool {
    match leaf {
        Structure::Var(_, f) => main_polarity(f) == Some(Polarity::Input),
        Structure::Covar(_, f) => main_polarity(f) == Some(Polarity::Output),
        _ => false,
    }
}

fn var(l: Label, f: &Formula) -> Structure {
    Structure::Var(l, f.clone())
}

fn covar(l: Label, f: &Formula) -> Structure {
    Structure::Covar(l, f.clone())
}

fn sb(op: BinOp, l: Structure, r: Structure) -> Structure {
    Structure::binary(op, l, r)
}

fn su(op: UnOp, a: Structure) -> Structure {
    Structure::unary(op, a)
}

/// Backward application of the logical rule for the active formula of
/// `seq`. Passive premises introduce leaves labelled from `fresh`, in
/// left-to-right order. `None` if the formula is atomic or the structure
/// does not have the shape the rule needs.
pub(crate) fn logical_backward(seq: &Sequent, fresh: [Label; 2]) -> Option<(RuleApp, Vec<Sequent>)> {
    let [f0, f1] = fresh;
    match seq {
        Sequent::Passive(..) => None,
        Sequent::Left(f, y) => {
            let conn = Conn::of(f)?;
            let rule = RuleApp::Logical(conn, Side::L);
            let passive = |s: Structure| Some((rule.clone(), vec![Sequent::Passive(s, y.clone())]));
            match f {
                Formula::Atom(_) => None,
                Formula::Binary(BinOp::Prod, a, b) => passive(sb(BinOp::Prod, var(f0, a), var(f1, b))),
                Formula::Binary(BinOp::RDiff, a, b) => passive(sb(BinOp::RDiff, var(f0, a), covar(f1, b))),
                Formula::Binary(BinOp::LDiff, b, a) => passive(sb(BinOp::LDiff, covar(f0, b), var(f1, a))),
                Formula::Unary(op @ (UnOp::DGalL | UnOp::DGalR), a) => passive(su(*op, covar(f0, a))),
                Formula::Binary(BinOp::Under, a, b) => match y {
                    Structure::Binary(BinOp::Under, x, z) => Some((
                        rule,
                        vec![Sequent::Right((**x).clone(), (**a).clone()), Sequent::Left((**b).clone(), (**z).clone())],
                    )),
                    _ => None,
                },
                Formula::Binary(BinOp::Over, b, a) => match y {
                    Structure::Binary(BinOp::Over, z, x) => Some((
                        rule,
                        vec![Sequent::Right((**x).clone(), (**a).clone()), Sequent::Left((**b).clone(), (**z).clone())],
                    )),
                    _ => None,
                },
                Formula::Binary(BinOp::Coprod, a, b) => match y {
                    Structure::Binary(BinOp::Coprod, x, z) => Some((
                        rule,
                        vec![Sequent::Left((**a).clone(), (**x).clone()), Sequent::Left((**b).clone(), (**z).clone())],
                    )),
                    _ => None,
                },
                Formula::Unary(op @ (UnOp::GalL | UnOp::GalR), a) => match y {
                    Structure::Unary(sop, x) if sop == op => {
                        Some((rule, vec![Sequent::Right((**x).clone(), (**a).clone())]))
                    }
                    _ => None,
                },
            }
        }
        Sequent::Right(x, f) => {
            let conn = Conn::of(f)?;
            let rule = RuleApp::Logical(conn, Side::R);
            let passive = |s: Structure| Some((rule.clone(), vec![Sequent::Passive(x.clone(), s)]));
            match f {
                Formula::Atom(_) => None,
                Formula::Binary(BinOp::Coprod, a, b) => passive(sb(BinOp::Coprod, covar(f0, a), covar(f1, b))),
                Formula::Binary(BinOp::Under, a, b) => passive(sb(BinOp::Under, var(f0, a), covar(f1, b))),
                Formula::Binary(BinOp::Over, b, a) => passive(sb(BinOp::Over, covar(f0, b), var(f1, a))),
                Formula::Unary(op @ (UnOp::GalL | UnOp::GalR), a) => passive(su(*op, var(f0, a))),
                Formula::Binary(BinOp::Prod, a, b) => match x {
                    Structure::Binary(BinOp::Prod, l, r) => Some((
                        rule,
                        vec![Sequent::Right((**l).clone(), (**a).clone()), Sequent::Right((**r).clone(), (**b).clone())],
                    )),
                    _ => None,
                },
                Formula::Binary(BinOp::RDiff, a, b) => match x {
                    Structure::Binary(BinOp::RDiff, l, r) => Some((
                        rule,
                        vec![Sequent::Right((**l).clone(), (**a).clone()), Sequent::Left((**b).clone(), (**r).clone())],
                    )),
                    _ => None,
                },
                Formula::Binary(BinOp::LDiff, b, a) => match x {
                    Structure::Binary(BinOp::LDiff, l, r) => Some((
                        rule,
                        vec![Sequent::Right((**r).clone(), (**a).clone()), Sequent::Left((**b).clone(), (**l).clone())],
                    )),
                    _ => None,
                },
                Formula::Unary(op @ (UnOp::DGalL | UnOp::DGalR), a) => match x {
                    Structure::Unary(sop, y) if sop == op => {
                        Some((rule, vec![Sequent::Left((**a).clone(), (**y).clone())]))
                    }
                    _ => None,
                },
            }
        }
    }
}

/// Labels of the leaves a passive premise introduces, read back from the
/// premise for checking.
fn introduced_labels(conclusion: &Sequent, premise: &Sequent) -> [Label; 2] {
    let side = match (conclusion, premise) {
        (Sequent::Left(..), Sequent::Passive(a, _)) => Some(a),
        (Sequent::Right(..), Sequent::Passive(_, s)) => Some(s),
        _ => None,
    };
    let mut out = [Label(0); 2];
    if let Some(s) = side {
        for (slot, leaf) in out.iter_mut().zip(s.leaves()) {
            *slot = leaf.leaf_label().unwrap();
        }
    }
    out
}

fn node_ok(p: &Proof) -> bool {
    let prem: Vec<&Sequent> = p.premises.iter().map(|q| &q.conclusion).collect();
    match (&p.rule, &p.conclusion) {
        (RuleApp::Ax, Sequent::Right(Structure::Var(_, a), f)) => prem.is_empty() && a == f,
        (RuleApp::CoAx, Sequent::Left(f, Structure::Covar(_, a))) => prem.is_empty() && a == f,
        (RuleApp::AxLink, Sequent::Passive(Structure::Var(_, a), Structure::Covar(_, b))) => {
            prem.is_empty() && a == b && a.is_atom()
        }
        (RuleApp::Cut(f), Sequent::Passive(x, y)) => {
            prem.len() == 2
                && *prem[0] == Sequent::Right(x.clone(), f.clone())
                && *prem[1] == Sequent::Left(f.clone(), y.clone())
        }
        (RuleApp::DeactL, Sequent::Passive(Structure::Var(_, a), y)) => {
            prem.len() == 1 && *prem[0] == Sequent::Left(a.clone(), y.clone())
        }
        (RuleApp::DeactR, Sequent::Passive(x, Structure::Covar(_, a))) => {
            prem.len() == 1 && *prem[0] == Sequent::Right(x.clone(), a.clone())
        }
        (RuleApp::Mu(l), Sequent::Right(x, a)) => {
            prem.len() == 1 && *prem[0] == Sequent::Passive(x.clone(), Structure::Covar(*l, a.clone()))
        }
        (RuleApp::MuTilde(l), Sequent::Left(a, y)) => {
            prem.len() == 1 && *prem[0] == Sequent::Passive(Structure::Var(*l, a.clone()), y.clone())
        }
        (RuleApp::Structural(r), Sequent::Passive(..)) => {
            if prem.len() != 1 {
                return false;
            }
            if r.is_display() {
                display_moves(&p.conclusion).iter().any(|(r2, s)| r2 == r && s == prem[0])
            } else {
                all_rules()
                    .iter()
                    .find(|d| d.name == *r)
                    .and_then(|d| d.forward(prem[0]))
                    .is_some_and(|c| c == p.conclusion)
            }
        }
        (RuleApp::Logical(..), Sequent::Left(..) | Sequent::Right(..)) => {
            let fresh = prem.first().map(|q| introduced_labels(&p.conclusion, q)).unwrap_or([Label(0); 2]);
            match logical_backward(&p.conclusion, fresh) {
                Some((rule, expected)) => {
                    rule == p.rule && expected.len() == prem.len() && expected.iter().zip(&prem).all(|(e, q)| e == *q)
                }
                None => false,
            }
        }
        _ => false,
    }
}

/// Checks every node against its rule schema, including polarities and
/// label freshness.
pub fn replay(p: &Proof) -> bool {
    p.conclusion.well_formed() && node_ok(p) && p.premises.iter().all(replay)
}
