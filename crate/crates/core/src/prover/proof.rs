use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::structures::{Label, Polarity, Sequent, StructRule, Structure};
use crate::syntax::{BinOp, Formula, UnOp};

/// A logical connective, binary or unary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Conn {
    Bin(BinOp),
    Un(UnOp),
}

impl Conn {
    pub fn of(f: &Formula) -> Option<Conn> {
        match f {
            Formula::Atom(_) => None,
            Formula::Binary(op, ..) => Some(Conn::Bin(*op)),
            Formula::Unary(op, _) => Some(Conn::Un(*op)),
        }
    }

    /// Name in rule labels; negations show the operand position with a dot.
    pub fn symbol(&self) -> String {
        match self {
            Conn::Bin(op) => op.symbol().to_string(),
            Conn::Un(op) if op.is_prefix() => format!("^{}.", op.digit()),
            Conn::Un(op) => format!(".^{}", op.digit()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    L,
    R,
}

/// The rule applied at a proof node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleApp {
    /// `x:A ⊢ A`
    Ax,
    /// `A ⊢ α:A`
    CoAx,
    /// `x:p ⊢ α:p` for an atom `p`: a cut of `Ax` against `CoAx`.
    AxLink,
    Cut(Formula),
    /// `x:A ⊢ Y` from `A ⊢ Y`: a cut against `Ax`.
    DeactL,
    /// `X ⊢ α:A` from `X ⊢ A`: a cut against `CoAx`.
    DeactR,
    /// Activates the output leaf with this label.
    Mu(Label),
    /// Activates the input leaf with this label.
    MuTilde(Label),
    Structural(StructRule),
    Logical(Conn, Side),
}

impl RuleApp {
    pub fn name(&self) -> String {
        match self {
            RuleApp::Ax => "Ax".into(),
            RuleApp::CoAx => "CoAx".into(),
            RuleApp::AxLink => "AxLink".into(),
            RuleApp::Cut(_) => "Cut".into(),
            RuleApp::DeactL => "DeactL".into(),
            RuleApp::DeactR => "DeactR".into(),
            RuleApp::Mu(_) => "mu".into(),
            RuleApp::MuTilde(_) => "mu~".into(),
            RuleApp::Structural(r) => r.name(),
            RuleApp::Logical(c, s) => format!("{}{:?}", c.symbol(), s),
        }
    }

    pub fn is_structural(&self) -> bool {
        matches!(self, RuleApp::Structural(_))
    }
}

/// A derivation tree. Premises are listed in rule-schema order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub conclusion: Sequent,
    pub rule: RuleApp,
    pub premises: Vec<Proof>,
}

#[derive(Serialize)]
struct ProofView {
    rule: String,
    conclusion: String,
    premises: Vec<ProofView>,
}

fn view(p: &Proof) -> ProofView {
    ProofView {
        rule: p.rule.name(),
        conclusion: p.conclusion.to_string(),
        premises: p.premises.iter().map(view).collect(),
    }
}

impl Serialize for Proof {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        view(self).serialize(s)
    }
}

impl Proof {
    pub fn leaf(conclusion: Sequent, rule: RuleApp) -> Proof {
        Proof { conclusion, rule, premises: Vec::new() }
    }

    pub fn node(conclusion: Sequent, rule: RuleApp, premises: Vec<Proof>) -> Proof {
        Proof { conclusion, rule, premises }
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(Proof::depth).max().unwrap_or(0)
    }

    pub fn contains_cut(&self) -> bool {
        matches!(self.rule, RuleApp::Cut(_)) || self.premises.iter().any(Proof::contains_cut)
    }

    /// Nodes in preorder.
    pub fn nodes(&self) -> Vec<&Proof> {
        let mut out = vec![self];
        for p in &self.premises {
            out.extend(p.nodes());
        }
        out
    }

    /// Indented text rendering, one node per line, conclusion first.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        writeln!(out, "{:indent$}[{}] {}", "", self.rule.name(), self.conclusion, indent = depth * 2).unwrap();
        for p in &self.premises {
            p.render_into(out, depth + 1);
        }
    }

    /// Renames every (co)variable label through `f`.
    pub fn relabel(&self, f: &impl Fn(Polarity, Label) -> Label) -> Proof {
        let seq = self.conclusion.map_leaves(&mut |leaf| match leaf {
            Structure::Var(l, a) => Structure::Var(f(Polarity::Input, *l), a.clone()),
            Structure::Covar(l, a) => Structure::Covar(f(Polarity::Output, *l), a.clone()),
            _ => unreachable!("map_leaves visits leaves only"),
        });
        let rule = match &self.rule {
            RuleApp::Mu(l) => RuleApp::Mu(f(Polarity::Output, *l)),
            RuleApp::MuTilde(l) => RuleApp::MuTilde(f(Polarity::Input, *l)),
            r => r.clone(),
        };
        Proof { conclusion: seq, rule, premises: self.premises.iter().map(|p| p.relabel(f)).collect() }
    }

    pub fn max_label(&self) -> u32 {
        self.nodes().iter().map(|n| n.conclusion.max_label()).max().unwrap_or(0)
    }

    /// Keeps the labels of the conclusion and numbers every other label in
    /// order of first appearance, per polarity.
    pub fn normalize_labels(&self) -> Proof {
        let mut map: HashMap<(Polarity, Label), Label> = HashMap::new();
        let mut next = [0u32; 2];
        for leaf in self.conclusion.leaves() {
            let l = leaf.leaf_label().unwrap();
            let pol = leaf.polarity();
            map.insert((pol, l), l);
            let slot = &mut next[pol as usize];
            *slot = (*slot).max(l.0);
        }
        for node in self.nodes() {
            let mut seen: Vec<(Polarity, Label)> =
                node.conclusion.leaves().iter().map(|l| (l.polarity(), l.leaf_label().unwrap())).collect();
            match &node.rule {
                RuleApp::Mu(l) => seen.push((Polarity::Output, *l)),
                RuleApp::MuTilde(l) => seen.push((Polarity::Input, *l)),
                _ => {}
            }
            for key in seen {
                map.entry(key).or_insert_with(|| {
                    let slot = &mut next[key.0 as usize];
                    *slot += 1;
                    Label(*slot)
                });
            }
        }
        self.relabel(&|pol, l| map.get(&(pol, l)).copied().unwrap_or(l))
    }
}
