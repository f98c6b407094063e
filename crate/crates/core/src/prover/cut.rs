use std::collections::HashSet;

use thiserror::Error;

use super::proof::{Conn, Proof, RuleApp, Side};
use crate::structures::{Label, Polarity, Sequent, StructRule, Structure};
use crate::syntax::{Formula, UnOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut formulas differ: {left} vs {right}")]
    Mismatch { left: Formula, right: Formula },
    #[error("expected a proof of {0}")]
    WrongShape(&'static str),
    #[error("not a reducible cut")]
    NotARedex,
}

fn leaf_key(leaf: &Structure) -> (Polarity, Label) {
    (leaf.polarity(), leaf.leaf_label().expect("leaf"))
}

/// Renames every label of `p` outside `keep` by adding `offset`.
fn freshen(p: &Proof, keep: &HashSet<(Polarity, Label)>, offset: u32) -> Proof {
    p.relabel(&|pol, l| if keep.contains(&(pol, l)) { l } else { Label(l.0 + offset) })
}

fn conclusion_keys(s: &Sequent) -> HashSet<(Polarity, Label)> {
    s.leaves().into_iter().map(leaf_key).collect()
}

fn contains(s: &Sequent, key: (Polarity, Label)) -> bool {
    s.leaves().into_iter().any(|l| leaf_key(l) == key)
}

fn replace_leaf(s: &Sequent, key: (Polarity, Label), by: &Structure) -> Sequent {
    s.map_leaves(&mut |leaf| if leaf_key(leaf) == key { by.clone() } else { leaf.clone() })
}

/// Substitutes the continuation `k : A ⊢ Y` for the covariable `a` in `s`.
fn subst_covar(s: &Proof, a: Label, k: &Proof) -> Proof {
    let key = (Polarity::Output, a);
    if !contains(&s.conclusion, key) {
        return s.clone();
    }
    let Sequent::Left(_, y) = &k.conclusion else { unreachable!("continuation proof") };
    let conclusion = replace_leaf(&s.conclusion, key, y);
    match &s.rule {
        RuleApp::CoAx => k.clone(),
        RuleApp::AxLink => Proof::node(conclusion, RuleApp::DeactL, vec![k.clone()]),
        RuleApp::DeactR if matches!(&s.conclusion, Sequent::Passive(_, Structure::Covar(l, _)) if *l == a) => {
            let f = k.conclusion.active_formula().unwrap().clone();
            Proof::node(conclusion, RuleApp::Cut(f), vec![s.premises[0].clone(), k.clone()])
        }
        rule => Proof::node(conclusion, rule.clone(), s.premises.iter().map(|q| subst_covar(q, a, k)).collect()),
    }
}

/// Substitutes the computation `m : X ⊢ A` for the variable `x` in `s`.
fn subst_var(s: &Proof, x: Label, m: &Proof) -> Proof {
    let key = (Polarity::Input, x);
    if !contains(&s.conclusion, key) {
        return s.clone();
    }
    let Sequent::Right(xs, _) = &m.conclusion else { unreachable!("computation proof") };
    let conclusion = replace_leaf(&s.conclusion, key, xs);
    match &s.rule {
        RuleApp::Ax => m.clone(),
        RuleApp::AxLink => Proof::node(conclusion, RuleApp::DeactR, vec![m.clone()]),
        RuleApp::DeactL if matches!(&s.conclusion, Sequent::Passive(Structure::Var(l, _), _) if *l == x) => {
            let f = m.conclusion.active_formula().unwrap().clone();
            Proof::node(conclusion, RuleApp::Cut(f), vec![m.clone(), s.premises[0].clone()])
        }
        rule => Proof::node(conclusion, rule.clone(), s.premises.iter().map(|q| subst_var(q, x, m)).collect()),
    }
}

/// Turns a proof of `x:A ⊢ B` into a proof of `A ⊢ α:B` by deactivating
/// the succedent and activating the hypothesis.
fn as_continuation(q: &Proof, alpha: Label) -> Result<Proof, CutError> {
    let Sequent::Right(Structure::Var(x, a), b) = &q.conclusion else {
        return Err(CutError::WrongShape("A ⊢ Y or x:A ⊢ B"));
    };
    let out = Structure::Covar(alpha, b.clone());
    let passive = Proof::node(Sequent::Passive(Structure::Var(*x, a.clone()), out.clone()), RuleApp::DeactR, vec![q.clone()]);
    Ok(Proof::node(Sequent::Left(a.clone(), out), RuleApp::MuTilde(*x), vec![passive]))
}

/// Composes `left : X ⊢ A` with `right : A ⊢ Y` into `X ⊢ Y`. An arrow
/// proof `x:A ⊢ B` is accepted on the right and used as `A ⊢ α:B`. The
/// right proof is relabelled apart from the left.
pub fn cut(left: &Proof, right: &Proof) -> Result<Proof, CutError> {
    let Sequent::Right(x, a) = &left.conclusion else {
        return Err(CutError::WrongShape("X ⊢ A"));
    };
    let right = freshen(right, &HashSet::new(), left.max_label());
    let right = match &right.conclusion {
        Sequent::Left(..) => right,
        Sequent::Right(..) => as_continuation(&right, Label(left.max_label().max(right.max_label()) + 1))?,
        Sequent::Passive(..) => return Err(CutError::WrongShape("A ⊢ Y")),
    };
    let Sequent::Left(b, y) = &right.conclusion else { unreachable!() };
    if a != b {
        return Err(CutError::Mismatch { left: a.clone(), right: b.clone() });
    }
    Ok(Proof::node(Sequent::Passive(x.clone(), y.clone()), RuleApp::Cut(a.clone()), vec![left.clone(), right]))
}

/// From proofs of `A -> B` and `B -> C`, a proof of `A -> C` with a cut on `B`.
pub fn compose_arrows(ab: &Proof, bc: &Proof) -> Result<Proof, CutError> {
    if !matches!(bc.conclusion, Sequent::Right(Structure::Var(..), _)) {
        return Err(CutError::WrongShape("x:B ⊢ C"));
    }
    let c = cut(ab, bc)?;
    let Sequent::Passive(x, Structure::Covar(alpha, f)) = &c.conclusion else { unreachable!() };
    Ok(Proof::node(Sequent::Right(x.clone(), f.clone()), RuleApp::Mu(*alpha), vec![c.clone()]))
}

fn structural(conclusion: Sequent, rule: StructRule, premise: Proof) -> Proof {
    Proof::node(conclusion, RuleApp::Structural(rule), vec![premise])
}

/// One reduction step at the root: a principal cut on a negation, or a
/// cut against a μ / μ̃ premise, which is eliminated by substitution.
pub fn reduce_principal_cut(p: &Proof) -> Result<Proof, CutError> {
    let (RuleApp::Cut(_), [m, k]) = (&p.rule, p.premises.as_slice()) else {
        return Err(CutError::NotARedex);
    };
    let Sequent::Passive(_, _) = &p.conclusion else { return Err(CutError::NotARedex) };
    // keep the cut conclusion's labels, push everything else out of the way
    let keep = conclusion_keys(&p.conclusion);
    let offset = p.max_label();
    match (&m.rule, &k.rule) {
        (RuleApp::Mu(a), _) => {
            let body = freshen(&m.premises[0], &keep, offset);
            let a = if keep.contains(&(Polarity::Output, *a)) { *a } else { Label(a.0 + offset) };
            return Ok(subst_covar(&body, a, k));
        }
        (_, RuleApp::MuTilde(x)) => {
            let body = freshen(&k.premises[0], &keep, offset);
            let x = if keep.contains(&(Polarity::Input, *x)) { *x } else { Label(x.0 + offset) };
            return Ok(subst_var(&body, x, m));
        }
        _ => {}
    }
    let (RuleApp::Logical(Conn::Un(op), Side::R), RuleApp::Logical(Conn::Un(op2), Side::L)) = (&m.rule, &k.rule) else {
        return Err(CutError::NotARedex);
    };
    if op != op2 {
        return Err(CutError::NotARedex);
    }
    let Sequent::Passive(xs, ys) = &p.conclusion else { unreachable!() };
    match op {
        UnOp::GalL | UnOp::GalR => {
            // m: X ⊢ ⁰A from S: X ⊢ ⁰·(x:A); k: ⁰A ⊢ ⁰·Y from N: Y ⊢ A
            let s = freshen(&m.premises[0], &keep, offset);
            let n = &k.premises[0];
            let concl = s.conclusion.clone();
            let Sequent::Passive(_, Structure::Unary(_, xleaf)) = &concl else { unreachable!() };
            let Structure::Var(x, a) = &**xleaf else { unreachable!() };
            let Structure::Unary(_, y) = ys else { unreachable!() };
            let other = if *op == UnOp::GalL { UnOp::GalR } else { UnOp::GalL };
            let xs_neg = Structure::unary(other, xs.clone());
            let gc_s = structural(Sequent::Passive((**xleaf).clone(), xs_neg.clone()), StructRule::Gc, s);
            let mut_ = Proof::node(Sequent::Left(a.clone(), xs_neg.clone()), RuleApp::MuTilde(*x), vec![gc_s]);
            let c = Proof::node(Sequent::Passive((**y).clone(), xs_neg), RuleApp::Cut(a.clone()), vec![n.clone(), mut_]);
            Ok(structural(p.conclusion.clone(), StructRule::Gc, c))
        }
        UnOp::DGalL | UnOp::DGalR => {
            // m: Y·¹ ⊢ A¹ from K: A ⊢ Y; k: A¹ ⊢ Z from S: (α:A)·¹ ⊢ Z
            let s = freshen(&k.premises[0], &keep, offset);
            let kk = &m.premises[0];
            let concl = s.conclusion.clone();
            let Sequent::Passive(Structure::Unary(_, aleaf), _) = &concl else { unreachable!() };
            let Structure::Covar(alpha, a) = &**aleaf else { unreachable!() };
            let Structure::Unary(_, y) = xs else { unreachable!() };
            let other = if *op == UnOp::DGalR { UnOp::DGalL } else { UnOp::DGalR };
            let zs_neg = Structure::unary(other, ys.clone());
            let dgc_s = structural(Sequent::Passive(zs_neg.clone(), (**aleaf).clone()), StructRule::Dgc, s);
            let mu = Proof::node(Sequent::Right(zs_neg.clone(), a.clone()), RuleApp::Mu(*alpha), vec![dgc_s]);
            let c = Proof::node(Sequent::Passive(zs_neg, (**y).clone()), RuleApp::Cut(a.clone()), vec![mu, kk.clone()]);
            Ok(structural(p.conclusion.clone(), StructRule::Dgc, c))
        }
    }
}
