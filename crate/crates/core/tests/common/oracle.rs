//! Brute-force derivability oracle. Structures carry no labels, display
//! equivalents are separate states, every rule is tried everywhere.

use std::collections::HashMap;

use lg_core::syntax::{BinOp, Formula, UnOp};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum S {
    In(Formula),
    Out(Formula),
    B(BinOp, Box<S>, Box<S>),
    U(UnOp, Box<S>),
}

fn b(op: BinOp, l: &S, r: &S) -> S {
    S::B(op, Box::new(l.clone()), Box::new(r.clone()))
}

fn u(op: UnOp, a: &S) -> S {
    S::U(op, Box::new(a.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Seq {
    P(S, S),
    R(S, Formula),
    L(Formula, S),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Groups {
    pub distr: bool,
    pub unary: bool,
    pub inverse: bool,
}

impl Groups {
    pub fn default_rules() -> Self {
        Groups { distr: true, unary: true, inverse: false }
    }

    pub fn none() -> Self {
        Groups::default()
    }

    pub fn inverse_only() -> Self {
        Groups { distr: false, unary: false, inverse: true }
    }
}

use BinOp::*;
use UnOp::*;

/// Both directions of every display postulate.
fn display(x: &S, y: &S) -> Vec<(S, S)> {
    let mut out = Vec::new();
    // X*Y |- Z  <=>  X |- Z/Y  <=>  Y |- X\Z
    if let S::B(Prod, p, q) = x {
        out.push(((**p).clone(), b(Over, y, q)));
        out.push(((**q).clone(), b(Under, p, y)));
    }
    if let S::B(Over, z, q) = y {
        out.push((b(Prod, x, q), (**z).clone()));
    }
    if let S::B(Under, p, z) = y {
        out.push((b(Prod, p, x), (**z).clone()));
    }
    // Y |- X+Z  <=>  X(\)Y |- Z  <=>  Y(/)Z |- X
    if let S::B(Coprod, p, z) = y {
        out.push((b(LDiff, p, x), (**z).clone()));
        out.push((b(RDiff, x, z), (**p).clone()));
    }
    if let S::B(LDiff, p, q) = x {
        out.push(((**q).clone(), b(Coprod, p, y)));
    }
    if let S::B(RDiff, q, z) = x {
        out.push(((**q).clone(), b(Coprod, y, z)));
    }
    // X |- Y^0  <=>  Y |- ^0 X
    if let S::U(GalR, q) = y {
        out.push(((**q).clone(), u(GalL, x)));
    }
    if let S::U(GalL, p) = y {
        out.push(((**p).clone(), u(GalR, x)));
    }
    // ^1 Y |- X  <=>  X^1 |- Y
    if let S::U(DGalL, q) = x {
        out.push((u(DGalR, y), (**q).clone()));
    }
    if let S::U(DGalR, p) = x {
        out.push((u(DGalL, y), (**p).clone()));
    }
    out
}

/// Premises from which `x |- y` follows by one interaction rule.
fn interaction_premises(x: &S, y: &S, g: Groups) -> Vec<(S, S)> {
    let mut out = Vec::new();
    if g.distr {
        // premise X*Y |- Z+W
        match (x, y) {
            (S::B(LDiff, z, xx), S::B(Over, w, yy)) => out.push((b(Prod, xx, yy), b(Coprod, z, w))),
            (S::B(RDiff, yy, w), S::B(Under, xx, z)) => out.push((b(Prod, xx, yy), b(Coprod, z, w))),
            _ => {}
        }
        match (x, y) {
            (S::B(LDiff, z, yy), S::B(Under, xx, w)) => out.push((b(Prod, xx, yy), b(Coprod, z, w))),
            (S::B(RDiff, xx, w), S::B(Over, z, yy)) => out.push((b(Prod, xx, yy), b(Coprod, z, w))),
            _ => {}
        }
    }
    if g.inverse {
        if let (S::B(Prod, xx, yy), S::B(Coprod, z, w)) = (x, y) {
            out.push((b(LDiff, z, xx), b(Over, w, yy)));
            out.push((b(RDiff, yy, w), b(Under, xx, z)));
            out.push((b(LDiff, z, yy), b(Under, xx, w)));
            out.push((b(RDiff, xx, w), b(Over, z, yy)));
        }
    }
    if g.unary {
        // from A |- B: ^1 B |- A^0, ^1 B |- ^0 A, B^1 |- ^0 A, B^1 |- A^0
        if let (S::U(DGalL | DGalR, bb), S::U(GalR | GalL, aa)) = (x, y) {
            out.push(((**aa).clone(), (**bb).clone()));
        }
        // from A |- B+C: B^1 |- A\C, B^1 |- C/A, ^1 C |- A\B, ^1 C |- B/A
        match (x, y) {
            (S::U(DGalR, bb), S::B(Under, aa, cc)) => out.push(((**aa).clone(), b(Coprod, bb, cc))),
            (S::U(DGalR, bb), S::B(Over, cc, aa)) => out.push(((**aa).clone(), b(Coprod, bb, cc))),
            (S::U(DGalL, cc), S::B(Under, aa, bb)) => out.push(((**aa).clone(), b(Coprod, bb, cc))),
            (S::U(DGalL, cc), S::B(Over, bb, aa)) => out.push(((**aa).clone(), b(Coprod, bb, cc))),
            _ => {}
        }
        // from A*B |- C: C(\)A |- ^0 B, A(/)C |- ^0 B, C(\)B |- A^0, B(/)C |- A^0
        match (x, y) {
            (S::B(LDiff, cc, aa), S::U(GalL, bb)) => out.push((b(Prod, aa, bb), (**cc).clone())),
            (S::B(RDiff, aa, cc), S::U(GalL, bb)) => out.push((b(Prod, aa, bb), (**cc).clone())),
            (S::B(LDiff, cc, bb), S::U(GalR, aa)) => out.push((b(Prod, aa, bb), (**cc).clone())),
            (S::B(RDiff, bb, cc), S::U(GalR, aa)) => out.push((b(Prod, aa, bb), (**cc).clone())),
            _ => {}
        }
    }
    out
}

/// Backward logical rule for an active formula, if its shape fits.
fn logical(seq: &Seq) -> Option<Vec<Seq>> {
    let inn = |f: &Formula| S::In(f.clone());
    let out = |f: &Formula| S::Out(f.clone());
    match seq {
        Seq::L(f, y) => match f {
            Formula::Atom(_) => None,
            Formula::Binary(Prod, a1, a2) => Some(vec![Seq::P(b(Prod, &inn(a1), &inn(a2)), y.clone())]),
            Formula::Binary(RDiff, a1, a2) => Some(vec![Seq::P(b(RDiff, &inn(a1), &out(a2)), y.clone())]),
            Formula::Binary(LDiff, a1, a2) => Some(vec![Seq::P(b(LDiff, &out(a1), &inn(a2)), y.clone())]),
            Formula::Unary(op @ (DGalL | DGalR), a) => Some(vec![Seq::P(u(*op, &out(a)), y.clone())]),
            Formula::Binary(Under, a1, a2) => match y {
                S::B(Under, p, q) => Some(vec![Seq::R((**p).clone(), (**a1).clone()), Seq::L((**a2).clone(), (**q).clone())]),
                _ => None,
            },
            Formula::Binary(Over, a2, a1) => match y {
                S::B(Over, q, p) => Some(vec![Seq::R((**p).clone(), (**a1).clone()), Seq::L((**a2).clone(), (**q).clone())]),
                _ => None,
            },
            Formula::Binary(Coprod, a1, a2) => match y {
                S::B(Coprod, p, q) => Some(vec![Seq::L((**a1).clone(), (**p).clone()), Seq::L((**a2).clone(), (**q).clone())]),
                _ => None,
            },
            Formula::Unary(op @ (GalL | GalR), a) => match y {
                S::U(o, p) if o == op => Some(vec![Seq::R((**p).clone(), (**a).clone())]),
                _ => None,
            },
        },
        Seq::R(x, f) => match f {
            Formula::Atom(_) => None,
            Formula::Binary(Coprod, a1, a2) => Some(vec![Seq::P(x.clone(), b(Coprod, &out(a1), &out(a2)))]),
            Formula::Binary(Under, a1, a2) => Some(vec![Seq::P(x.clone(), b(Under, &inn(a1), &out(a2)))]),
            Formula::Binary(Over, a1, a2) => Some(vec![Seq::P(x.clone(), b(Over, &out(a1), &inn(a2)))]),
            Formula::Unary(op @ (GalL | GalR), a) => Some(vec![Seq::P(x.clone(), u(*op, &inn(a)))]),
            Formula::Binary(Prod, a1, a2) => match x {
                S::B(Prod, p, q) => Some(vec![Seq::R((**p).clone(), (**a1).clone()), Seq::R((**q).clone(), (**a2).clone())]),
                _ => None,
            },
            Formula::Binary(RDiff, a1, a2) => match x {
                S::B(RDiff, p, q) => Some(vec![Seq::R((**p).clone(), (**a1).clone()), Seq::L((**a2).clone(), (**q).clone())]),
                _ => None,
            },
            Formula::Binary(LDiff, a2, a1) => match x {
                S::B(LDiff, q, p) => Some(vec![Seq::R((**p).clone(), (**a1).clone()), Seq::L((**a2).clone(), (**q).clone())]),
                _ => None,
            },
            Formula::Unary(op @ (DGalL | DGalR), a) => match x {
                S::U(o, q) if o == op => Some(vec![Seq::L((**a).clone(), (**q).clone())]),
                _ => None,
            },
        },
        Seq::P(..) => None,
    }
}

fn rules(seq: &Seq, g: Groups) -> Vec<Vec<Seq>> {
    let mut out = Vec::new();
    match seq {
        Seq::P(x, y) => {
            for (x2, y2) in display(x, y) {
                out.push(vec![Seq::P(x2, y2)]);
            }
            for (x2, y2) in interaction_premises(x, y, g) {
                out.push(vec![Seq::P(x2, y2)]);
            }
            // deactivation: cut against an axiom
            if let S::In(f) = x {
                out.push(vec![Seq::L(f.clone(), y.clone())]);
            }
            if let S::Out(f) = y {
                out.push(vec![Seq::R(x.clone(), f.clone())]);
            }
        }
        Seq::R(x, f) => {
            if *x == S::In(f.clone()) {
                out.push(vec![]);
            }
            out.push(vec![Seq::P(x.clone(), S::Out(f.clone()))]);
            out.extend(logical(seq));
        }
        Seq::L(f, y) => {
            if *y == S::Out(f.clone()) {
                out.push(vec![]);
            }
            out.push(vec![Seq::P(S::In(f.clone()), y.clone())]);
            out.extend(logical(seq));
        }
    }
    out
}

/// Derivability of `a -> b`, or `None` if more than `cap` states are
/// reachable.
pub fn derivable_capped(a: &Formula, b: &Formula, g: Groups, cap: usize) -> Option<bool> {
    let goal = Seq::R(S::In(a.clone()), b.clone());
    let mut ids: HashMap<Seq, usize> = HashMap::new();
    let mut seqs = vec![goal.clone()];
    let mut moves: Vec<Vec<Vec<usize>>> = Vec::new();
    ids.insert(goal, 0);
    let mut i = 0;
    while i < seqs.len() {
        if seqs.len() > cap {
            return None;
        }
        let mut ms = Vec::new();
        for prems in rules(&seqs[i].clone(), g) {
            let mut pids = Vec::new();
            for p in prems {
                let next = seqs.len();
                let id = *ids.entry(p.clone()).or_insert(next);
                if id == next {
                    seqs.push(p);
                }
                pids.push(id);
            }
            ms.push(pids);
        }
        moves.push(ms);
        i += 1;
    }
    // naive least fixpoint
    let mut proved = vec![false; seqs.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for s in 0..seqs.len() {
            if !proved[s] && moves[s].iter().any(|m| m.iter().all(|&p| proved[p])) {
                proved[s] = true;
                changed = true;
            }
        }
    }
    Some(proved[0])
}

pub fn derivable(a: &Formula, b: &Formula, g: Groups) -> bool {
    derivable_capped(a, b, g, usize::MAX).expect("uncapped")
}
