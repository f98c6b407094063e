use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::structure::{Label, Polarity, Sequent, Structure};
use crate::syntax::{BinOp, UnOp};

/// Structural rule names: the display families and the numbered
/// distributivity rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StructRule {
    Rp,
    Drp,
    Gc,
    Dgc,
    /// Binary interaction `D1`..`D4`.
    Distr(u8),
    /// Negation interaction `U1`..`U12`.
    DistrUnary(u8),
    /// Converse binary interaction `I1`..`I4`.
    DistrInv(u8),
}

impl StructRule {
    pub fn name(&self) -> String {
        match self {
            StructRule::Rp => "rp".into(),
            StructRule::Drp => "drp".into(),
            StructRule::Gc => "gc".into(),
            StructRule::Dgc => "dgc".into(),
            StructRule::Distr(n) => format!("D{n}"),
            StructRule::DistrUnary(n) => format!("U{n}"),
            StructRule::DistrInv(n) => format!("I{n}"),
        }
    }

    pub fn is_display(&self) -> bool {
        matches!(self, StructRule::Rp | StructRule::Drp | StructRule::Gc | StructRule::Dgc)
    }
}

fn b(op: BinOp, l: &Structure, r: &Structure) -> Structure {
    Structure::binary(op, l.clone(), r.clone())
}

fn u(op: UnOp, a: &Structure) -> Structure {
    Structure::unary(op, a.clone())
}

/// One-step display postulate rewrites of a passive sequent, in either
/// direction. Active sequents have none.
pub fn display_moves(seq: &Sequent) -> Vec<(StructRule, Sequent)> {
    let Sequent::Passive(a, s) = seq else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut push = |rule, x: Structure, y: Structure| out.push((rule, Sequent::Passive(x, y)));
    match a {
        Structure::Binary(BinOp::Prod, x, y) => {
            push(StructRule::Rp, (**x).clone(), b(BinOp::Over, s, y));
            push(StructRule::Rp, (**y).clone(), b(BinOp::Under, x, s));
        }
        Structure::Binary(BinOp::LDiff, x, y) => {
            push(StructRule::Drp, (**y).clone(), b(BinOp::Coprod, x, s));
        }
        Structure::Binary(BinOp::RDiff, y, z) => {
            push(StructRule::Drp, (**y).clone(), b(BinOp::Coprod, s, z));
        }
        Structure::Unary(UnOp::DGalL, y) => push(StructRule::Dgc, u(UnOp::DGalR, s), (**y).clone()),
        Structure::Unary(UnOp::DGalR, x) => push(StructRule::Dgc, u(UnOp::DGalL, s), (**x).clone()),
        _ => {}
    }
    match s {
        Structure::Binary(BinOp::Over, z, y) => push(StructRule::Rp, b(BinOp::Prod, a, y), (**z).clone()),
        Structure::Binary(BinOp::Under, x, z) => push(StructRule::Rp, b(BinOp::Prod, x, a), (**z).clone()),
        Structure::Binary(BinOp::Coprod, x, z) => {
            push(StructRule::Drp, b(BinOp::LDiff, x, a), (**z).clone());
            push(StructRule::Drp, b(BinOp::RDiff, a, z), (**x).clone());
        }
        Structure::Unary(UnOp::GalR, y) => push(StructRule::Gc, (**y).clone(), u(UnOp::GalL, a)),
        Structure::Unary(UnOp::GalL, x) => push(StructRule::Gc, (**x).clone(), u(UnOp::GalR, a)),
        _ => {}
    }
    out
}

/// All sequents reachable by display postulates, in breadth-first order
/// starting from `seq` itself.
pub fn display_orbit(seq: &Sequent) -> Vec<Sequent> {
    if !seq.is_passive() {
        return vec![seq.clone()];
    }
    let mut seen: HashSet<Sequent> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(seq.clone());
    queue.push_back(seq.clone());
    while let Some(cur) = queue.pop_front() {
        for (_, next) in display_moves(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        order.push(cur);
    }
    order
}

/// Orbit representative with the least label-free rendering; ties are
/// broken by the labelled rendering.
pub fn canonical(seq: &Sequent) -> Sequent {
    display_orbit(seq)
        .into_iter()
        .min_by_key(|s| (s.render(false), s.render(true)))
        .expect("orbit contains the sequent itself")
}

/// Whether the given leaf stands alone on one side of the sequent.
pub fn displays(seq: &Sequent, polarity: Polarity, label: Label) -> bool {
    let Sequent::Passive(a, s) = seq else {
        return false;
    };
    let side = if polarity == Polarity::Input { a } else { s };
    side.is_leaf() && side.leaf_label() == Some(label)
}

/// Display postulate path bringing the leaf `(polarity, label)` to the
/// surface, as the list of intermediate steps ending in the displayed sequent.
pub fn display_leaf(seq: &Sequent, polarity: Polarity, label: Label) -> Option<Vec<(StructRule, Sequent)>> {
    display_search(seq, |s| displays(s, polarity, label))
}

/// Shortest display postulate path from `from` to `to`.
pub fn display_path(from: &Sequent, to: &Sequent) -> Option<Vec<(StructRule, Sequent)>> {
    display_search(from, |s| s == to)
}

fn display_search(seq: &Sequent, goal: impl Fn(&Sequent) -> bool) -> Option<Vec<(StructRule, Sequent)>> {
    if goal(seq) {
        return Some(Vec::new());
    }
    let mut parent: HashMap<Sequent, (StructRule, Sequent)> = HashMap::new();
    let mut queue = VecDeque::new();
    parent.insert(seq.clone(), (StructRule::Rp, seq.clone()));
    queue.push_back(seq.clone());
    while let Some(cur) = queue.pop_front() {
        for (rule, next) in display_moves(&cur) {
            if parent.contains_key(&next) {
                continue;
            }
            parent.insert(next.clone(), (rule, cur.clone()));
            if goal(&next) {
                let mut path = vec![(rule, next.clone())];
                let mut at = cur.clone();
                while at != *seq {
                    let (r, prev) = parent[&at].clone();
                    path.push((r, at));
                    at = prev;
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(next);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Formula;

    fn at(s: &str) -> Formula {
        Formula::atom(s)
    }

    fn x(n: u32) -> Structure {
        Structure::var(n, at(&format!("p{n}")))
    }

    fn a(n: u32) -> Structure {
        Structure::covar(n, at(&format!("q{n}")))
    }

    #[test]
    fn residuation_triangle() {
        let seq = Sequent::passive(b(BinOp::Prod, &x(1), &x(2)), a(1));
        let orbit = display_orbit(&seq);
        assert_eq!(orbit.len(), 3);
        assert!(orbit.contains(&Sequent::passive(x(1), b(BinOp::Over, &a(1), &x(2)))));
        assert!(orbit.contains(&Sequent::passive(x(2), b(BinOp::Under, &x(1), &a(1)))));
    }

    #[test]
    fn dual_residuation_triangle() {
        let seq = Sequent::passive(x(1), b(BinOp::Coprod, &a(1), &a(2)));
        let orbit = display_orbit(&seq);
        assert_eq!(orbit.len(), 3);
        assert!(orbit.contains(&Sequent::passive(b(BinOp::LDiff, &a(1), &x(1)), a(2))));
        assert!(orbit.contains(&Sequent::passive(b(BinOp::RDiff, &x(1), &a(2)), a(1))));
    }

    #[test]
    fn galois_pairs() {
        let seq = Sequent::passive(x(1), u(UnOp::GalR, &x(2)));
        let orbit = display_orbit(&seq);
        assert_eq!(orbit, vec![seq.clone(), Sequent::passive(x(2), u(UnOp::GalL, &x(1)))]);
        let dual = Sequent::passive(u(UnOp::DGalL, &a(2)), a(1));
        let orbit = display_orbit(&dual);
        assert_eq!(orbit, vec![dual.clone(), Sequent::passive(u(UnOp::DGalR, &a(1)), a(2))]);
    }

    #[test]
    fn moves_preserve_well_formedness() {
        let seq = Sequent::passive(
            b(BinOp::Prod, &x(1), &u(UnOp::DGalL, &a(2))),
            b(BinOp::Coprod, &a(1), &u(UnOp::GalR, &x(2))),
        );
        assert!(seq.well_formed());
        let orbit = display_orbit(&seq);
        for s in &orbit {
            assert!(s.well_formed(), "{s}");
        }
        // one member per edge of the unrooted tree: 4 leaves + 4 nodes - 1
        assert_eq!(orbit.len(), 7);
    }

    #[test]
    fn leaf_display_path() {
        let seq = Sequent::passive(b(BinOp::Prod, &x(1), &x(2)), b(BinOp::Coprod, &a(1), &a(2)));
        for (pol, l) in [(Polarity::Input, 1), (Polarity::Input, 2), (Polarity::Output, 1), (Polarity::Output, 2)] {
            let path = display_leaf(&seq, pol, Label(l)).unwrap();
            let last = &path.last().unwrap().1;
            assert!(displays(last, pol, Label(l)));
        }
    }

    #[test]
    fn canonical_is_orbit_invariant() {
        let seq = Sequent::passive(b(BinOp::Prod, &x(1), &x(2)), b(BinOp::Coprod, &a(1), &a(2)));
        let c = canonical(&seq);
        for s in display_orbit(&seq) {
            assert_eq!(canonical(&s), c);
        }
    }
}
