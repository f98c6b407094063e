use std::collections::{HashMap, HashSet, VecDeque};

use log::debug;
use thiserror::Error;

use super::proof::{Proof, RuleApp};
use super::rules::{invertible_leaf, logical_backward, main_polarity};
use crate::structures::{
    canonical, display_leaf, display_orbit, display_path, distr_premises, ConfigError, Label, Polarity, RuleConfig,
    Sequent, StructRule, Structure,
};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProveError {
    #[error(transparent)]
    ConfigViolation(#[from] ConfigError),
    #[error("search exceeded {0} states")]
    ResourceLimit(usize),
    #[error("not derivable")]
    NotDerivable,
    #[error("goal sequent is not well formed: {0}")]
    InvalidGoal(String),
}

/// The arrow `A -> B` as the sequent `x1:A ⊢ B`.
pub fn arrow_goal(a: &Formula, b: &Formula) -> Sequent {
    Sequent::Right(Structure::var(1, a.clone()), b.clone())
}

/// A proof fragment whose holes are premises still to be proved.
#[derive(Clone, Debug)]
enum Partial {
    Node(Sequent, RuleApp, Vec<Partial>),
    Hole(Sequent),
}

impl Partial {
    fn holes(&self) -> Vec<&Sequent> {
        match self {
            Partial::Hole(s) => vec![s],
            Partial::Node(_, _, ps) => ps.iter().flat_map(Partial::holes).collect(),
        }
    }

    fn fill(&self, proofs: &mut impl Iterator<Item = Proof>) -> Proof {
        match self {
            Partial::Hole(_) => proofs.next().expect("one proof per hole"),
            Partial::Node(s, r, ps) => Proof::node(s.clone(), r.clone(), ps.iter().map(|p| p.fill(proofs)).collect()),
        }
    }
}

/// Prefixes `inner` with the display steps of `path`, starting from `from`.
fn wrap_path(from: &Sequent, path: Vec<(StructRule, Sequent)>, inner: Partial) -> Partial {
    let mut concls = vec![from.clone()];
    concls.extend(path.iter().map(|(_, s)| s.clone()));
    path.into_iter()
        .enumerate()
        .rev()
        .fold(inner, |acc, (i, (rule, _))| Partial::Node(concls[i].clone(), RuleApp::Structural(rule), vec![acc]))
}

struct Fresh(u32);

impl Fresh {
    fn next(&mut self) -> Label {
        self.0 += 1;
        Label(self.0)
    }
}

/// Search key and representative: passive sequents stand for their
/// display orbit.
fn normalize(seq: &Sequent) -> (String, Sequent) {
    if seq.is_passive() {
        let rep = canonical(seq);
        (rep.shape_key(), rep)
    } else {
        (seq.shape_key(), seq.clone())
    }
}

fn focus_leaf(rep: &Sequent, leaf: &Structure) -> Option<Partial> {
    let pol = leaf.polarity();
    let label = leaf.leaf_label()?;
    let path = display_leaf(rep, pol, label)?;
    let displayed = path.last().map(|(_, s)| s.clone()).unwrap_or_else(|| rep.clone());
    let (rule, active) = match (&displayed, pol) {
        (Sequent::Passive(Structure::Var(_, f), y), Polarity::Input) => {
            (RuleApp::DeactL, Sequent::Left(f.clone(), y.clone()))
        }
        (Sequent::Passive(x, Structure::Covar(_, f)), Polarity::Output) => {
            (RuleApp::DeactR, Sequent::Right(x.clone(), f.clone()))
        }
        _ => return None,
    };
    Some(wrap_path(rep, path, Partial::Node(displayed, rule, vec![Partial::Hole(active)])))
}

/// All backward moves from a state representative, in a fixed order.
fn moves(rep: &Sequent, cfg: &RuleConfig, fresh: &mut Fresh) -> Vec<Partial> {
    match rep {
        Sequent::Passive(a, s) => {
            let leaves: Vec<Structure> = rep.leaves().into_iter().cloned().collect();
            if let Some(leaf) = leaves.iter().find(|l| invertible_leaf(l)) {
                return focus_leaf(rep, leaf).into_iter().collect();
            }
            if let (Structure::Var(_, p), Structure::Covar(_, q)) = (a, s) {
                if p == q && p.is_atom() {
                    return vec![Partial::Node(rep.clone(), RuleApp::AxLink, vec![])];
                }
            }
            let mut out = Vec::new();
            for leaf in &leaves {
                if leaf.leaf_formula().is_some_and(|f| f.is_atom()) {
                    continue;
                }
                if let Some(p) = focus_leaf(rep, leaf) {
                    let active = p.holes()[0].clone();
                    if logical_backward(&active, [Label(0), Label(0)]).is_some() {
                        out.push(p);
                    }
                }
            }
            let mut seen = HashSet::new();
            for member in display_orbit(rep) {
                for (rule, premise) in distr_premises(&member, cfg) {
                    if !seen.insert(normalize(&premise).0) {
                        continue;
                    }
                    let path = display_path(rep, &member).expect("orbit member is reachable");
                    let node = Partial::Node(member.clone(), RuleApp::Structural(rule), vec![Partial::Hole(premise)]);
                    out.push(wrap_path(rep, path, node));
                }
            }
            out
        }
        Sequent::Right(x, f) => {
            if f.is_atom() {
                if let Structure::Var(_, g) = x {
                    if g == f {
                        return vec![Partial::Node(rep.clone(), RuleApp::Ax, vec![])];
                    }
                }
                let alpha = fresh.next();
                let prem = Sequent::Passive(x.clone(), Structure::Covar(alpha, f.clone()));
                return vec![Partial::Node(rep.clone(), RuleApp::Mu(alpha), vec![Partial::Hole(prem)])];
            }
            let mut out = Vec::new();
            if let Some(p) = logical(rep, fresh) {
                out.push(p);
            }
            if main_polarity(f) == Some(Polarity::Input) {
                let alpha = fresh.next();
                let prem = Sequent::Passive(x.clone(), Structure::Covar(alpha, f.clone()));
                out.push(Partial::Node(rep.clone(), RuleApp::Mu(alpha), vec![Partial::Hole(prem)]));
            }
            out
        }
        Sequent::Left(f, y) => {
            if f.is_atom() {
                if let Structure::Covar(_, g) = y {
                    if g == f {
                        return vec![Partial::Node(rep.clone(), RuleApp::CoAx, vec![])];
                    }
                }
                let x = fresh.next();
                let prem = Sequent::Passive(Structure::Var(x, f.clone()), y.clone());
                return vec![Partial::Node(rep.clone(), RuleApp::MuTilde(x), vec![Partial::Hole(prem)])];
            }
            let mut out = Vec::new();
            if let Some(p) = logical(rep, fresh) {
                out.push(p);
            }
            if main_polarity(f) == Some(Polarity::Output) {
                let x = fresh.next();
                let prem = Sequent::Passive(Structure::Var(x, f.clone()), y.clone());
                out.push(Partial::Node(rep.clone(), RuleApp::MuTilde(x), vec![Partial::Hole(prem)]));
            }
            out
        }
    }
}

fn logical(rep: &Sequent, fresh: &mut Fresh) -> Option<Partial> {
    let labels = [fresh.next(), fresh.next()];
    let (rule, prems) = logical_backward(rep, labels)?;
    Some(Partial::Node(rep.clone(), rule, prems.into_iter().map(Partial::Hole).collect()))
}

struct State {
    rep: Sequent,
    moves: Vec<Vec<usize>>,
}

/// The explored search space of one goal with its provability verdicts.
pub struct SearchGraph {
    cfg: RuleConfig,
    index: HashMap<String, usize>,
    states: Vec<State>,
    /// Witness move of each provable state.
    witness: Vec<Option<usize>>,
    root: usize,
}

/// Search statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchStats {
    pub states: usize,
    pub moves: usize,
    pub provable_states: usize,
}

impl SearchGraph {
    fn explore(goal: &Sequent, cfg: RuleConfig, max_steps: Option<usize>) -> Result<SearchGraph, ProveError> {
        let mut g = SearchGraph { cfg, index: HashMap::new(), states: Vec::new(), witness: Vec::new(), root: 0 };
        let (key, rep) = normalize(goal);
        g.index.insert(key, 0);
        g.states.push(State { rep, moves: Vec::new() });
        let mut queue = VecDeque::from([0usize]);
        while let Some(id) = queue.pop_front() {
            if max_steps.is_some_and(|m| id >= m) {
                return Err(ProveError::ResourceLimit(max_steps.unwrap()));
            }
            let rep = g.states[id].rep.clone();
            let mut fresh = Fresh(rep.max_label());
            let mut state_moves = Vec::new();
            for partial in moves(&rep, &g.cfg, &mut fresh) {
                let mut prem_ids = Vec::new();
                for hole in partial.holes() {
                    let (key, rep) = normalize(hole);
                    let next = g.states.len();
                    let pid = *g.index.entry(key).or_insert(next);
                    if pid == next {
                        g.states.push(State { rep, moves: Vec::new() });
                        queue.push_back(pid);
                    }
                    prem_ids.push(pid);
                }
                state_moves.push(prem_ids);
            }
            g.states[id].moves = state_moves;
        }
        g.solve();
        debug!("search explored {} states", g.states.len());
        Ok(g)
    }

    /// Least fixpoint of the AND/OR graph by unit propagation.
    fn solve(&mut self) {
        let n = self.states.len();
        self.witness = vec![None; n];
        let mut remaining: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut watchers: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut queue = VecDeque::new();
        for (sid, st) in self.states.iter().enumerate() {
            remaining.push(st.moves.iter().map(Vec::len).collect());
            for (mi, prems) in st.moves.iter().enumerate() {
                for &p in prems {
                    watchers[p].push((sid, mi));
                }
                if prems.is_empty() && self.witness[sid].is_none() {
                    self.witness[sid] = Some(mi);
                    queue.push_back(sid);
                }
            }
        }
        while let Some(p) = queue.pop_front() {
            for &(sid, mi) in &watchers[p] {
                remaining[sid][mi] -= 1;
                if remaining[sid][mi] == 0 && self.witness[sid].is_none() {
                    self.witness[sid] = Some(mi);
                    queue.push_back(sid);
                }
            }
        }
    }

    pub fn provable(&self) -> bool {
        self.witness[self.root].is_some()
    }

    pub fn stats(&self) -> SearchStats {
        SearchStats {
            states: self.states.len(),
            moves: self.states.iter().map(|s| s.moves.len()).sum(),
            provable_states: self.witness.iter().filter(|w| w.is_some()).count(),
        }
    }

    /// Materializes a proof of `seq` following `plan` (a tree of move
    /// choices mirroring the premise structure).
    fn build(&self, seq: &Sequent, plan: &Plan, fresh: &mut Fresh) -> Proof {
        let (key, rep) = normalize(seq);
        debug_assert_eq!(self.index.get(&key), Some(&plan.state));
        let partial = moves(&rep, &self.cfg, fresh).swap_remove(plan.choice);
        let holes: Vec<Sequent> = partial.holes().into_iter().cloned().collect();
        let subproofs: Vec<Proof> = holes.iter().zip(&plan.premises).map(|(h, sub)| self.build(h, sub, fresh)).collect();
        let inner = partial.fill(&mut subproofs.into_iter());
        if seq.is_passive() && *seq != rep {
            let path = display_path(seq, &rep).expect("canonical form is in the orbit");
            let mut wrapped = inner;
            let mut concls = vec![seq.clone()];
            concls.extend(path.iter().map(|(_, s)| s.clone()));
            for (i, (rule, _)) in path.into_iter().enumerate().rev() {
                wrapped = Proof::node(concls[i].clone(), RuleApp::Structural(rule), vec![wrapped]);
            }
            wrapped
        } else {
            inner
        }
    }

    fn witness_plan(&self, state: usize) -> Plan {
        let choice = self.witness[state].expect("state is provable");
        let premises = self.states[state].moves[choice].iter().map(|&p| self.witness_plan(p)).collect();
        Plan { state, choice, premises }
    }

    /// Up to `limit` distinct proof plans for `state`, by depth-first
    /// search that never revisits a state on the current branch.
    fn plans(&self, state: usize, limit: usize, on_path: &mut Vec<bool>, budget: &mut usize) -> Vec<Plan> {
        if self.witness[state].is_none() || on_path[state] || *budget == 0 || limit == 0 {
            return Vec::new();
        }
        *budget -= 1;
        on_path[state] = true;
        let mut out = Vec::new();
        for (choice, prems) in self.states[state].moves.iter().enumerate() {
            if out.len() >= limit {
                break;
            }
            if prems.iter().any(|&p| self.witness[p].is_none() || on_path[p]) {
                continue;
            }
            let mut combos: Vec<Vec<Plan>> = vec![Vec::new()];
            for &p in prems {
                let subs = self.plans(p, limit, on_path, budget);
                let mut next = Vec::new();
                'outer: for c in &combos {
                    for s in &subs {
                        let mut c2 = c.clone();
                        c2.push(s.clone());
                        next.push(c2);
                        if next.len() >= limit {
                            break 'outer;
                        }
                    }
                }
                combos = next;
                if combos.is_empty() {
                    break;
                }
            }
            for premises in combos {
                if out.len() >= limit {
                    break;
                }
                out.push(Plan { state, choice, premises });
            }
        }
        on_path[state] = false;
        out
    }
}

fn is_display_step(p: &Proof) -> bool {
    matches!(&p.rule, RuleApp::Structural(r) if r.is_display())
}

/// Replaces every run of display steps by a shortest display path between
/// its endpoints, removing detours through orbit representatives.
fn shorten_display_chains(p: Proof) -> Proof {
    if !is_display_step(&p) {
        let Proof { conclusion, rule, premises } = p;
        return Proof::node(conclusion, rule, premises.into_iter().map(shorten_display_chains).collect());
    }
    let top = p.conclusion.clone();
    let mut bottom = p;
    while is_display_step(&bottom) {
        bottom = bottom.premises.into_iter().next().expect("display steps have one premise");
    }
    let bottom = shorten_display_chains(bottom);
    let path = display_path(&top, &bottom.conclusion).expect("display chains stay in one orbit");
    let mut concls = vec![top];
    concls.extend(path.iter().map(|(_, s)| s.clone()));
    let mut wrapped = bottom;
    for (i, (rule, _)) in path.into_iter().enumerate().rev() {
        wrapped = Proof::node(concls[i].clone(), RuleApp::Structural(rule), vec![wrapped]);
    }
    wrapped
}

#[derive(Clone, Debug)]
struct Plan {
    state: usize,
    choice: usize,
    premises: Vec<Plan>,
}

/// Proof search with a fixed rule configuration.
#[derive(Clone, Debug)]
pub struct Prover {
    cfg: RuleConfig,
    max_steps: Option<usize>,
    enum_budget: usize,
}

impl Prover {
    pub fn new(cfg: RuleConfig) -> Result<Prover, ProveError> {
        cfg.validate()?;
        Ok(Prover { cfg, max_steps: None, enum_budget: 200_000 })
    }

    /// Fails with `ResourceLimit` once more than `n` states are explored.
    pub fn with_max_steps(mut self, n: usize) -> Prover {
        self.max_steps = Some(n);
        self
    }

    pub fn config(&self) -> &RuleConfig {
        &self.cfg
    }

    pub fn graph(&self, goal: &Sequent) -> Result<SearchGraph, ProveError> {
        if !goal.well_formed() {
            return Err(ProveError::InvalidGoal(goal.to_string()));
        }
        SearchGraph::explore(goal, self.cfg, self.max_steps)
    }

    pub fn derivable(&self, goal: &Sequent) -> Result<bool, ProveError> {
        Ok(self.graph(goal)?.provable())
    }

    pub fn prove(&self, goal: &Sequent) -> Result<Proof, ProveError> {
        let g = self.graph(goal)?;
        if !g.provable() {
            return Err(ProveError::NotDerivable);
        }
        let plan = g.witness_plan(g.root);
        let mut fresh = Fresh(goal.max_label());
        Ok(shorten_display_chains(g.build(goal, &plan, &mut fresh)).normalize_labels())
    }

    /// Up to `limit` distinct cut-free proofs in a deterministic order.
    pub fn enumerate(&self, goal: &Sequent, limit: usize) -> Result<Vec<Proof>, ProveError> {
        let g = self.graph(goal)?;
        let mut on_path = vec![false; g.states.len()];
        let mut budget = self.enum_budget;
        let plans = g.plans(g.root, limit, &mut on_path, &mut budget);
        if budget == 0 {
            debug!("proof enumeration budget exhausted");
        }
        Ok(plans
            .iter()
            .map(|plan| {
                let mut fresh = Fresh(goal.max_label());
                shorten_display_chains(g.build(goal, plan, &mut fresh)).normalize_labels()
            })
            .collect())
    }
}

pub fn prove(goal: &Sequent, cfg: &RuleConfig) -> Result<Proof, ProveError> {
    Prover::new(*cfg)?.prove(goal)
}

pub fn enumerate_proofs(goal: &Sequent, cfg: &RuleConfig, limit: usize) -> Result<Vec<Proof>, ProveError> {
    Prover::new(*cfg)?.enumerate(goal, limit)
}
