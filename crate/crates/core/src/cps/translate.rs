use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::lambda::{beta_normalize, Term};
use crate::prover::{Conn, Proof, RuleApp, Side};
use crate::structures::{Label, Polarity, Sequent, Structure};
use crate::syntax::{cps_type, BinOp, TargetType, Type, TypeMapError, UnOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CpsError {
    #[error("rule {0} has no continuation interpretation")]
    UnsupportedRule(String),
    #[error(transparent)]
    Fragment(#[from] TypeMapError),
}

/// A compiled proof: its term, the term's type and the types of its free
/// (co)variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypedTerm {
    pub term: Term,
    #[serde(rename = "type")]
    pub ty: TargetType,
    pub free_env: BTreeMap<String, TargetType>,
}

/// Term-level name of a passive leaf: `x<n>` for variables, `a<n>` for
/// covariables.
pub fn leaf_name(polarity: Polarity, label: Label) -> String {
    match polarity {
        Polarity::Input => format!("x{}", label.0),
        Polarity::Output => format!("a{}", label.0),
    }
}

fn leaf_term(leaf: &Structure) -> Term {
    Term::var(leaf_name(leaf.polarity(), leaf.leaf_label().expect("leaf")))
}

/// `r` for `X ⊢ Y`, `|A|⊥⊥` for `X ⊢ A`, `|A|⊥` for `A ⊢ Y`. Every
/// formula in the sequent must lie in the translatable fragment.
pub fn sequent_target_type(s: &Sequent) -> Result<TargetType, CpsError> {
    for leaf in s.leaves() {
        cps_type(leaf.leaf_formula().expect("leaf"))?;
    }
    Ok(match s {
        Sequent::Passive(..) => Type::response(),
        Sequent::Right(_, a) => cps_type(a)?.perp().perp(),
        Sequent::Left(a, _) => cps_type(a)?.perp(),
    })
}

fn free_env(s: &Sequent) -> Result<BTreeMap<String, TargetType>, CpsError> {
    let mut env = BTreeMap::new();
    for leaf in s.leaves() {
        let ty = cps_type(leaf.leaf_formula().expect("leaf"))?;
        let ty = if leaf.polarity() == Polarity::Output { ty.perp() } else { ty };
        env.insert(leaf_name(leaf.polarity(), leaf.leaf_label().unwrap()), ty);
    }
    Ok(env)
}

struct Names(usize);

impl Names {
    fn next(&mut self, stem: &str) -> String {
        self.0 += 1;
        format!("{stem}{}", self.0)
    }
}

/// `λk.(k v)`
fn ret(names: &mut Names, v: Term) -> Term {
    let k = names.next("k");
    Term::abs(k.clone(), Term::app(Term::var(k), v))
}

/// Labels of the leaves a passive premise adds, in left-to-right order.
fn introduced(conclusion: &Sequent, premise: &Sequent) -> Vec<Term> {
    let ((Sequent::Left(..), Sequent::Passive(s, _)) | (Sequent::Right(..), Sequent::Passive(_, s))) = (conclusion, premise)
    else {
        return Vec::new();
    };
    s.leaves().into_iter().map(leaf_term).collect()
}

fn compile(p: &Proof, names: &mut Names) -> Result<Term, CpsError> {
    let mut sub = Vec::with_capacity(p.premises.len());
    for q in &p.premises {
        sub.push(compile(q, names)?);
    }
    let leaves = p.conclusion.leaves();
    Ok(match &p.rule {
        RuleApp::Ax => ret(names, leaf_term(leaves[0])),
        RuleApp::CoAx => leaf_term(leaves[0]),
        RuleApp::AxLink => Term::app(ret(names, leaf_term(leaves[0])), leaf_term(leaves[1])),
        RuleApp::Cut(_) => Term::app(sub.remove(0), sub.remove(0)),
        RuleApp::DeactL => {
            let Sequent::Passive(x, _) = &p.conclusion else { unreachable!() };
            Term::app(ret(names, leaf_term(x)), sub.remove(0))
        }
        RuleApp::DeactR => {
            let Sequent::Passive(_, a) = &p.conclusion else { unreachable!() };
            Term::app(sub.remove(0), leaf_term(a))
        }
        RuleApp::Mu(l) => Term::abs(leaf_name(Polarity::Output, *l), sub.remove(0)),
        RuleApp::MuTilde(l) => Term::abs(leaf_name(Polarity::Input, *l), sub.remove(0)),
        RuleApp::Structural(_) => sub.remove(0),
        RuleApp::Logical(conn, side) => {
            let fresh = introduced(&p.conclusion, &p.premises[0].conclusion);
            let bind = |fresh: &[Term], body: Term| {
                fresh.iter().rev().fold(body, |acc, v| match v {
                    Term::Var(n) => Term::abs(n.clone(), acc),
                    _ => unreachable!(),
                })
            };
            match (conn, side) {
                (Conn::Bin(BinOp::Prod | BinOp::Coprod), _) => {
                    return Err(CpsError::UnsupportedRule(p.rule.name()));
                }
                // the single passive premise binds its new leaf
                (Conn::Un(UnOp::DGalR | UnOp::DGalL), Side::L) => bind(&fresh, sub.remove(0)),
                (Conn::Un(UnOp::DGalR | UnOp::DGalL), Side::R) => ret(names, sub.remove(0)),
                (Conn::Un(UnOp::GalR | UnOp::GalL), Side::R) => {
                    let body = bind(&fresh, sub.remove(0));
                    ret(names, body)
                }
                (Conn::Un(UnOp::GalR | UnOp::GalL), Side::L) => sub.remove(0),
                // λh.(h λβ.λx.S), covariable first
                (Conn::Bin(BinOp::Under), Side::R)
                | (Conn::Bin(BinOp::Over), Side::R)
                | (Conn::Bin(BinOp::RDiff), Side::L)
                | (Conn::Bin(BinOp::LDiff), Side::L) => {
                    let mut order = fresh.clone();
                    order.sort_by_key(|t| !matches!(t, Term::Var(n) if n.starts_with('a')));
                    let h = names.next("h");
                    Term::abs(h.clone(), Term::app(Term::var(h), bind(&order, sub.remove(0))))
                }
                // λu.(M (u K))
                (Conn::Bin(BinOp::Under | BinOp::Over), Side::L) => {
                    let (m, k) = (sub.remove(0), sub.remove(0));
                    let u = names.next("u");
                    Term::abs(u.clone(), Term::app(m, Term::app(Term::var(u), k)))
                }
                (Conn::Bin(BinOp::RDiff | BinOp::LDiff), Side::R) => {
                    let (m, k) = (sub.remove(0), sub.remove(0));
                    let u = names.next("u");
                    let inner = Term::abs(u.clone(), Term::app(m, Term::app(Term::var(u), k)));
                    ret(names, inner)
                }
            }
        }
    })
}

/// The term of a proof before β-normalization, one constructor per rule.
pub fn cps_raw(p: &Proof) -> Result<Term, CpsError> {
    compile(p, &mut Names(0))
}

/// Compiles a proof to its β-normal term, typed by the kind of its
/// conclusion.
pub fn cps_proof(p: &Proof) -> Result<TypedTerm, CpsError> {
    let ty = sequent_target_type(&p.conclusion)?;
    let free_env = free_env(&p.conclusion)?;
    let term = beta_normalize(&cps_raw(p)?);
    Ok(TypedTerm { term, ty, free_env })
}
