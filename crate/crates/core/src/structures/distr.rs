use std::sync::OnceLock;

use log::warn;
use serde::Serialize;
use thiserror::Error;

use super::display::StructRule;
use super::structure::{Sequent, Structure};
use crate::syntax::{BinOp, UnOp};

/// Which interaction groups are available to the prover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RuleConfig {
    pub distr_binary: bool,
    pub distr_unary: bool,
    pub distr_inverse: bool,
    /// Permits combining the interaction rules with their converses.
    pub allow_both: bool,
}

impl Default for RuleConfig {
    fn default() -> Self {
        RuleConfig { distr_binary: true, distr_unary: true, distr_inverse: false, allow_both: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("interaction rules and their converses together make structures unbounded; pass allow_both to force")]
    BothDirections,
    #[error("unknown rule group `{0}`")]
    UnknownGroup(String),
}

impl RuleConfig {
    /// Only display postulates and logical rules.
    pub fn base() -> Self {
        RuleConfig { distr_binary: false, distr_unary: false, distr_inverse: false, allow_both: false }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.distr_inverse && (self.distr_binary || self.distr_unary) {
            if !self.allow_both {
                return Err(ConfigError::BothDirections);
            }
            warn!("interaction rules enabled in both directions; search may not terminate without a step bound");
        }
        Ok(())
    }

    /// Parses a comma-separated group list: `distr`, `distr-unary`,
    /// `distr-inv`, or `none`. Underscores may replace hyphens.
    pub fn from_groups(spec: &str) -> Result<Self, ConfigError> {
        let mut cfg = RuleConfig::base();
        for g in spec.split(',').map(str::trim).filter(|g| !g.is_empty()) {
            match g.replace('_', "-").as_str() {
                "distr" | "distr-binary" => cfg.distr_binary = true,
                "distr-unary" => cfg.distr_unary = true,
                "distr-inv" | "distr-inverse" => cfg.distr_inverse = true,
                "none" => {}
                other => return Err(ConfigError::UnknownGroup(other.to_string())),
            }
        }
        Ok(cfg)
    }

    pub fn rules(&self) -> impl Iterator<Item = &'static DistrRule> + '_ {
        all_rules().iter().filter(move |r| match r.name {
            StructRule::Distr(_) => self.distr_binary,
            StructRule::DistrUnary(_) => self.distr_unary,
            StructRule::DistrInv(_) => self.distr_inverse,
            _ => false,
        })
    }
}

/// Structure pattern with linear metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pat {
    Meta(usize),
    Bin(BinOp, Box<Pat>, Box<Pat>),
    Un(UnOp, Box<Pat>),
}

impl Pat {
    fn matches(&self, s: &Structure, env: &mut [Option<Structure>; 4]) -> bool {
        match (self, s) {
            (Pat::Meta(i), _) => {
                env[*i] = Some(s.clone());
                true
            }
            (Pat::Bin(op, pl, pr), Structure::Binary(sop, sl, sr)) => {
                op == sop && pl.matches(sl, env) && pr.matches(sr, env)
            }
            (Pat::Un(op, pa), Structure::Unary(sop, sa)) => op == sop && pa.matches(sa, env),
            _ => false,
        }
    }

    fn build(&self, env: &[Option<Structure>; 4]) -> Structure {
        match self {
            Pat::Meta(i) => env[*i].clone().expect("metavariable bound by the other side"),
            Pat::Bin(op, l, r) => Structure::binary(*op, l.build(env), r.build(env)),
            Pat::Un(op, a) => Structure::unary(*op, a.build(env)),
        }
    }
}

/// A structural rule `premise ⇒ conclusion`.
#[derive(Clone, Debug)]
pub struct DistrRule {
    pub name: StructRule,
    pub premise: (Pat, Pat),
    pub conclusion: (Pat, Pat),
}

fn rewrite(from: &(Pat, Pat), to: &(Pat, Pat), seq: &Sequent) -> Option<Sequent> {
    let Sequent::Passive(a, s) = seq else {
        return None;
    };
    let mut env: [Option<Structure>; 4] = Default::default();
    if from.0.matches(a, &mut env) && from.1.matches(s, &mut env) {
        Some(Sequent::Passive(to.0.build(&env), to.1.build(&env)))
    } else {
        None
    }
}

impl DistrRule {
    /// Conclusion obtained from a matching premise.
    pub fn forward(&self, seq: &Sequent) -> Option<Sequent> {
        rewrite(&self.premise, &self.conclusion, seq)
    }

    /// Premise from which a matching conclusion follows.
    pub fn backward(&self, seq: &Sequent) -> Option<Sequent> {
        rewrite(&self.conclusion, &self.premise, seq)
    }
}

fn m(i: usize) -> Pat {
    Pat::Meta(i)
}

fn bin(op: BinOp, l: Pat, r: Pat) -> Pat {
    Pat::Bin(op, Box::new(l), Box::new(r))
}

fn un(op: UnOp, a: Pat) -> Pat {
    Pat::Un(op, Box::new(a))
}

pub fn all_rules() -> &'static [DistrRule] {
    static RULES: OnceLock<Vec<DistrRule>> = OnceLock::new();
    RULES.get_or_init(build_rules)
}

fn build_rules() -> Vec<DistrRule> {
    use BinOp::*;
    use UnOp::*;
    let (x, y, z, w) = (0, 1, 2, 3);
    let mut rules = Vec::new();

    // X⊗Y ⊢ Z⊕W
    let binary = [
        (bin(LDiff, m(z), m(x)), bin(Over, m(w), m(y))),
        (bin(RDiff, m(y), m(w)), bin(Under, m(x), m(z))),
        (bin(LDiff, m(z), m(y)), bin(Under, m(x), m(w))),
        (bin(RDiff, m(x), m(w)), bin(Over, m(z), m(y))),
    ];
    for (i, concl) in binary.into_iter().enumerate() {
        let premise = (bin(Prod, m(x), m(y)), bin(Coprod, m(z), m(w)));
        rules.push(DistrRule {
            name: StructRule::Distr(i as u8 + 1),
            premise: premise.clone(),
            conclusion: concl.clone(),
        });
        rules.push(DistrRule { name: StructRule::DistrInv(i as u8 + 1), premise: concl, conclusion: premise });
    }

    let unary: [((Pat, Pat), (Pat, Pat)); 12] = [
        // X ⊢ Y
        ((m(x), m(y)), (un(DGalL, m(y)), un(GalR, m(x)))),
        ((m(x), m(y)), (un(DGalL, m(y)), un(GalL, m(x)))),
        ((m(x), m(y)), (un(DGalR, m(y)), un(GalL, m(x)))),
        ((m(x), m(y)), (un(DGalR, m(y)), un(GalR, m(x)))),
        // X ⊢ Y⊕Z
        ((m(x), bin(Coprod, m(y), m(z))), (un(DGalR, m(y)), bin(Under, m(x), m(z)))),
        ((m(x), bin(Coprod, m(y), m(z))), (un(DGalR, m(y)), bin(Over, m(z), m(x)))),
        ((m(x), bin(Coprod, m(y), m(z))), (un(DGalL, m(z)), bin(Under, m(x), m(y)))),
        ((m(x), bin(Coprod, m(y), m(z))), (un(DGalL, m(z)), bin(Over, m(y), m(x)))),
        // X⊗Y ⊢ Z
        ((bin(Prod, m(x), m(y)), m(z)), (bin(LDiff, m(z), m(x)), un(GalL, m(y)))),
        ((bin(Prod, m(x), m(y)), m(z)), (bin(RDiff, m(x), m(z)), un(GalL, m(y)))),
        ((bin(Prod, m(x), m(y)), m(z)), (bin(LDiff, m(z), m(y)), un(GalR, m(x)))),
        ((bin(Prod, m(x), m(y)), m(z)), (bin(RDiff, m(y), m(z)), un(GalR, m(x)))),
    ];
    for (i, (premise, conclusion)) in unary.into_iter().enumerate() {
        rules.push(DistrRule { name: StructRule::DistrUnary(i as u8 + 1), premise, conclusion });
    }
    rules.sort_by_key(|r| r.name);
    rules
}

/// Interaction rewrites applicable at the root, read from premise to
/// conclusion.
pub fn distr_moves(seq: &Sequent, cfg: &RuleConfig) -> Vec<(StructRule, Sequent)> {
    cfg.rules().filter_map(|r| r.forward(seq).map(|s| (r.name, s))).collect()
}

/// Premises from which `seq` follows by one enabled interaction rule.
pub fn distr_premises(seq: &Sequent, cfg: &RuleConfig) -> Vec<(StructRule, Sequent)> {
    cfg.rules().filter_map(|r| r.backward(seq).map(|s| (r.name, s))).collect()
}
