//! Bounded proof search.
//!
//! Iterative deepening on the number of added nodes. Case splits are AND
//! nodes: in prove mode both branches must reach the goal and are then
//! joined, in refute mode both must reach a contradiction. A transposition
//! table keyed by the set of ancestor contents remembers the largest budget
//! that already failed for a state.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::rules::{
    apply_branch, apply_deduction, apply_definition, apply_elem_add, apply_elem_subst, apply_explode, apply_join,
    check_tree, CheckOptions, RuleName,
};
use crate::script::serialize_fragment;
use crate::syntax::{LetterId, QuantKind, Sign, Statement, Term};
use crate::tree::{Context, LetterFlavor, NodeId, ProofTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of nodes added in total.
    pub max_depth: usize,
    /// Maximum number of fresh `_v` letters on one chain.
    pub max_new_letters: usize,
    pub enabled_rules: BTreeSet<RuleName>,
    /// Cap on expanded states.
    pub max_states: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_depth: 10,
            max_new_letters: 3,
            enabled_rules: [
                RuleName::ElemAdd,
                RuleName::ElemSubst,
                RuleName::Branch,
                RuleName::Join,
                RuleName::Explode,
                RuleName::Definition,
                RuleName::Deduction,
            ]
            .into_iter()
            .collect(),
            max_states: 200_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("goal can never become admissible: {0}")]
    GoalNotAdmissibleEverReachable(String),
    #[error("internal error: extension fails checking: {0}")]
    Unsound(String),
}

#[derive(Clone, Debug)]
pub struct Found {
    /// The extended tree.
    pub tree: ProofTree,
    /// Added nodes in pre-order, labelled `s1`, `s2`, ...
    pub added: Vec<NodeId>,
    /// The added nodes as script lines.
    pub script: String,
    pub states: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exhausted {
    /// Largest budget fully explored.
    pub depth_explored: Option<usize>,
    pub states: usize,
    pub hit_state_cap: bool,
}

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.depth_explored {
            Some(d) => write!(f, "no proof with at most {d} added nodes")?,
            None => write!(f, "no budget fully explored")?,
        }
        write!(f, " ({} states", self.states)?;
        if self.hit_state_cap {
            write!(f, ", state cap reached")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(Found),
    Exhausted(Exhausted),
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&Found> {
        match self {
            SearchOutcome::Found(f) => Some(f),
            SearchOutcome::Exhausted(_) => None,
        }
    }
}

/// Extends the successor chain of `from` until it carries `goal`.
pub fn prove(tree: &ProofTree, from: NodeId, goal: &Statement, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    validate(tree)?;
    if tree.deduces(from, goal).map_err(|e| SearchError::InvalidContext(e.to_string()))? {
        return Ok(found(tree.clone(), Vec::new(), 0));
    }
    let tip = tip_of(tree, from)?;
    let ctx = tree.context(tip).map_err(|e| SearchError::InvalidContext(e.to_string()))?;
    let mut inactive = Vec::new();
    goal.visit_letters(&mut |l, _| {
        if ctx.flavor(l) == LetterFlavor::Inactive && !inactive.contains(l) {
            inactive.push(l.clone());
        }
    });
    if let (Err(a), Err(_)) = (ctx.admissible_statement(goal), ctx.admissible_statement_with(goal, &inactive)) {
        return Err(SearchError::GoalNotAdmissibleEverReachable(a.reason));
    }
    Searcher::new(tree, Mode::Prove(goal.clone()), cfg).run(tip)
}

/// Extends `from` until its successor chain, or every branch of the case
/// splits introduced, reaches a contradiction.
pub fn refute(tree: &ProofTree, from: NodeId, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    validate(tree)?;
    let tip = tip_of(tree, from)?;
    Searcher::new(tree, Mode::Refute, cfg).run(tip)
}

fn validate(tree: &ProofTree) -> Result<(), SearchError> {
    match check_tree(tree, &CheckOptions::default()).violations.first() {
        Some(v) => Err(SearchError::InvalidContext(format!("tree is not valid: {v}"))),
        None => Ok(()),
    }
}

/// The last node of `from`'s successor chain, which must be a leaf.
fn tip_of(tree: &ProofTree, from: NodeId) -> Result<NodeId, SearchError> {
    let chain = tree.unconditional_descendants(from).map_err(|e| SearchError::InvalidContext(e.to_string()))?;
    let tip = *chain.last().expect("chain holds from");
    if tree.get(tip).map(|n| n.pair().is_some()).unwrap_or(false) {
        return Err(SearchError::InvalidContext(format!(
            "{} ends in pair children without a join",
            tree.label(tip)
        )));
    }
    Ok(tip)
}

fn found(tree: ProofTree, added: Vec<NodeId>, states: usize) -> SearchOutcome {
    let script = serialize_fragment(&tree, &added);
    SearchOutcome::Found(Found { tree, added, script, states })
}

#[derive(Clone, Debug)]
enum Mode {
    Prove(Statement),
    Refute,
}

#[derive(Clone, Debug)]
enum Move {
    Deduction { of: NodeId, let_: Option<LetterId> },
    Definition { of: NodeId, new: Option<LetterId> },
    ElemAdd { a: LetterId, sign: Sign, b: LetterId },
    ElemSubst { eq: NodeId, src: NodeId, from: LetterId },
}

impl Move {
    fn cost(&self) -> usize {
        match self {
            Move::Definition { .. } => 2,
            _ => 1,
        }
    }
}

const FRESH_PREFIX: &str = "_v";

struct Searcher<'c> {
    tree: ProofTree,
    mode: Mode,
    cfg: &'c SearchConfig,
    failed: HashMap<Vec<String>, usize>,
    states: usize,
    capped: bool,
}

impl<'c> Searcher<'c> {
    fn new(tree: &ProofTree, mode: Mode, cfg: &'c SearchConfig) -> Self {
        Searcher { tree: tree.clone(), mode, cfg, failed: HashMap::new(), states: 0, capped: false }
    }

    fn enabled(&self, r: RuleName) -> bool {
        self.cfg.enabled_rules.contains(&r)
    }

    fn run(mut self, tip: NodeId) -> Result<SearchOutcome, SearchError> {
        let before: HashSet<NodeId> = self.tree.iter().map(|n| n.id).collect();
        let mut explored = None;
        for budget in 0..=self.cfg.max_depth {
            if self.solve(tip, budget) {
                let added: Vec<NodeId> = self.tree.preorder().into_iter().filter(|n| !before.contains(n)).collect();
                for (i, &n) in added.iter().enumerate() {
                    self.tree.set_label(n, format!("s{}", i + 1)).expect("added node exists");
                }
                let report = check_tree(&self.tree, &CheckOptions::default());
                if let Some(v) = report.violations.first() {
                    return Err(SearchError::Unsound(v.to_string()));
                }
                return Ok(found(self.tree, added, self.states));
            }
            if self.capped {
                break;
            }
            explored = Some(budget);
        }
        Ok(SearchOutcome::Exhausted(Exhausted { depth_explored: explored, states: self.states, hit_state_cap: self.capped }))
    }

    fn goal(&self) -> Option<&Statement> {
        match &self.mode {
            Mode::Prove(g) => Some(g),
            Mode::Refute => None,
        }
    }

    fn key(&self, leaf: NodeId) -> Vec<String> {
        let set: BTreeSet<String> = self
            .tree
            .ancestors(leaf)
            .expect("leaf exists")
            .into_iter()
            .map(|a| self.tree.get(a).expect("ancestor").content.to_string())
            .collect();
        set.into_iter().collect()
    }

    /// Removes everything below `n`.
    fn prune(&mut self, n: NodeId) {
        let node = self.tree.get(n).expect("pruned node exists");
        let (succ, pair) = (node.successor(), node.pair());
        if let Some(s) = succ {
            self.prune(s);
            self.tree.remove_leaf(s).expect("pruned successor is a leaf");
        }
        if let Some((l, r)) = pair {
            self.prune(l);
            self.prune(r);
            self.tree.remove_leaf(l).expect("pruned pair are leaves");
        }
    }

    fn solve(&mut self, leaf: NodeId, budget: usize) -> bool {
        if self.capped {
            return false;
        }
        self.states += 1;
        if self.states > self.cfg.max_states {
            self.capped = true;
            return false;
        }
        let contradictory = self.tree.is_contradictory(leaf).expect("leaf exists").is_some();
        match &self.mode {
            Mode::Refute if contradictory => return true,
            Mode::Prove(g) if self.tree.statement(leaf) == Some(g) => return true,
            _ => {}
        }
        if budget == 0 {
            return false;
        }
        let key = self.key(leaf);
        if self.failed.get(&key).is_some_and(|&b| b >= budget) {
            return false;
        }
        if self.attempt(leaf, budget, contradictory) {
            return true;
        }
        if !self.capped {
            let e = self.failed.entry(key).or_insert(0);
            *e = (*e).max(budget);
        }
        false
    }

    fn attempt(&mut self, leaf: NodeId, budget: usize, contradictory: bool) -> bool {
        if contradictory {
            // prove mode: only explosion can still help
            let goal = self.goal().expect("refute returned earlier").clone();
            return self.enabled(RuleName::Explode) && apply_explode(&mut self.tree, leaf, &goal).is_ok();
        }
        let prove = self.goal().is_some();
        let split_cost = if prove { 3 } else { 2 };
        if self.enabled(RuleName::Branch) && (!prove || self.enabled(RuleName::Join)) && budget >= split_cost {
            for p in self.split_candidates(leaf) {
                if self.try_split(leaf, &p, budget - split_cost) {
                    return true;
                }
                if self.capped {
                    return false;
                }
            }
        }
        for mv in self.moves(leaf) {
            if mv.cost() > budget {
                continue;
            }
            let Some(tip) = self.apply(leaf, &mv) else { continue };
            if self.solve(tip, budget - mv.cost()) {
                return true;
            }
            self.prune(leaf);
            if self.capped {
                return false;
            }
        }
        false
    }

    fn try_split(&mut self, leaf: NodeId, p: &Statement, rest: usize) -> bool {
        let Ok((l, r)) = apply_branch(&mut self.tree, leaf, p) else { return false };
        let mut ok = false;
        for cl in 0..=rest {
            if self.solve(l, cl) {
                ok = self.solve(r, rest - cl);
                break;
            }
            if self.capped {
                break;
            }
        }
        if ok {
            match self.goal().cloned() {
                Some(goal) => ok = apply_join(&mut self.tree, leaf, &goal).is_ok(),
                None => return true,
            }
        }
        if !ok {
            self.prune(leaf);
        }
        ok
    }

    fn apply(&mut self, leaf: NodeId, mv: &Move) -> Option<NodeId> {
        let t = &mut self.tree;
        match mv {
            Move::Deduction { of, let_ } => apply_deduction(t, leaf, *of, let_.as_ref()).ok(),
            Move::Definition { of, new } => apply_definition(t, leaf, *of, new.as_ref()).ok().map(|[_, b]| b),
            Move::ElemAdd { a, sign, b } => apply_elem_add(t, leaf, a, *sign, b).ok(),
            Move::ElemSubst { eq, src, from } => apply_elem_subst(t, leaf, *eq, *src, from).ok(),
        }
    }

    fn split_candidates(&self, leaf: NodeId) -> Vec<Statement> {
        let ctx = Context::new(&self.tree, leaf).expect("leaf exists");
        let present: HashSet<&Statement> = ctx.statements().map(|(_, s)| s).collect();
        let mut out: Vec<Statement> = Vec::new();
        let usable = |p: &Statement| match p.dual_structural() {
            Ok(d) => ctx.admissible_statement(p).is_ok() && ctx.admissible_statement(&d).is_ok(),
            Err(_) => false,
        };
        if let Some(g) = self.goal() {
            if usable(g) {
                out.push(g.clone());
            }
        }
        for (_, s) in ctx.statements() {
            let Some(h) = s.hypothesis() else { continue };
            let Ok(d) = h.dual_structural() else { continue };
            if present.contains(h) || present.contains(&d) || out.contains(h) || !usable(h) {
                continue;
            }
            out.push(h.clone());
        }
        out
    }

    fn fresh_letter(&self, ctx: &Context<'_>) -> Option<LetterId> {
        let used = ctx.flavors().active().filter(|(l, _)| l.as_str().starts_with(FRESH_PREFIX)).count();
        if used >= self.cfg.max_new_letters {
            return None;
        }
        (1..).map(|k| LetterId::new(format!("{FRESH_PREFIX}{k}"))).find(|l| ctx.flavor(l) == LetterFlavor::Inactive)
    }

    fn moves(&self, leaf: NodeId) -> Vec<Move> {
        let ctx = Context::new(&self.tree, leaf).expect("leaf exists");
        let stmts: Vec<(NodeId, &Statement)> = ctx.statements().collect();
        let present: HashSet<&Statement> = stmts.iter().map(|(_, s)| *s).collect();
        let goal = self.goal();
        let novel = |s: &Statement| !present.contains(s) || Some(s) == goal;
        let mut definite: Vec<LetterId> =
            ctx.flavors().active().filter(|(_, f)| *f == LetterFlavor::Definite).map(|(l, _)| l.clone()).collect();
        definite.sort();
        let mut out = Vec::new();

        if self.enabled(RuleName::Deduction) {
            for &(id, s) in &stmts {
                let Statement::Quantified { kind: QuantKind::Universal, hypothesis: h, conclusion: c } = s else { continue };
                if ctx.admissible_statement(h).is_ok() {
                    if present.contains(&**h) && novel(c) {
                        out.push(Move::Deduction { of: id, let_: None });
                    }
                } else if let Some(iota) = bound_letter(h, &ctx) {
                    for d in &definite {
                        if present.contains(&h.substitute_letter(&iota, d)) && novel(&c.substitute_letter(&iota, d)) {
                            out.push(Move::Deduction { of: id, let_: Some(d.clone()) });
                        }
                    }
                }
            }
        }

        if self.enabled(RuleName::Definition) {
            let active: Vec<LetterId> = ctx.flavors().active().map(|(l, _)| l.clone()).collect();
            for &(id, s) in &stmts {
                let Statement::Quantified { kind: QuantKind::Existential, hypothesis: h, conclusion: c } = s else { continue };
                if ctx.admissible_statement(h).is_ok() {
                    if novel(c) {
                        out.push(Move::Definition { of: id, new: None });
                    }
                } else if let Some(iota) = bound_letter(h, &ctx) {
                    let done = active.iter().any(|w| present.contains(&c.substitute_letter(&iota, w)));
                    if let (false, Some(v)) = (done, self.fresh_letter(&ctx)) {
                        out.push(Move::Definition { of: id, new: Some(v) });
                    }
                }
            }
        }

        if self.enabled(RuleName::ElemAdd) {
            let mut relevant: BTreeSet<LetterId> = BTreeSet::new();
            let mut inactive: BTreeSet<LetterId> = BTreeSet::new();
            if let Some(g) = goal {
                g.visit_letters(&mut |l, _| match ctx.flavor(l) {
                    LetterFlavor::Definite => {
                        relevant.insert(l.clone());
                    }
                    LetterFlavor::Inactive => {
                        inactive.insert(l.clone());
                    }
                    _ => {}
                });
            }
            for &(_, s) in &stmts {
                if s.is_quantified() {
                    s.visit_letters(&mut |l, _| {
                        if ctx.flavor(l) == LetterFlavor::Definite {
                            relevant.insert(l.clone());
                        }
                    });
                }
            }
            let mut fresh: Vec<LetterId> = inactive.into_iter().collect();
            fresh.extend(self.fresh_letter(&ctx));
            for d in &definite {
                let refl = Statement::relation(Term::Letter(d.clone()), Sign::Eq, Term::Letter(d.clone()));
                if novel(&refl) {
                    out.push(Move::ElemAdd { a: d.clone(), sign: Sign::Eq, b: d.clone() });
                }
            }
            for d in &relevant {
                for v in &fresh {
                    out.push(Move::ElemAdd { a: d.clone(), sign: Sign::Neq, b: v.clone() });
                    out.push(Move::ElemAdd { a: v.clone(), sign: Sign::Neq, b: d.clone() });
                }
            }
            for v in &fresh {
                out.push(Move::ElemAdd { a: v.clone(), sign: Sign::Eq, b: v.clone() });
            }
        }

        if self.enabled(RuleName::ElemSubst) {
            for &(eq, e) in &stmts {
                let Statement::Relation { left: Term::Letter(x), sign: Sign::Eq, right: Term::Letter(y) } = e else {
                    continue;
                };
                if x == y {
                    continue;
                }
                for &(src, s) in &stmts {
                    if src == eq {
                        continue;
                    }
                    for (from, to) in [(x, y), (y, x)] {
                        if s.contains_letter(from) && novel(&s.substitute_letter(from, to)) {
                            out.push(Move::ElemSubst { eq, src, from: from.clone() });
                        }
                    }
                }
            }
        }
        out
    }
}

/// The single letter a case-2 hypothesis binds, if any.
fn bound_letter(h: &Statement, ctx: &Context<'_>) -> Option<LetterId> {
    if h.is_quantified() {
        return None;
    }
    let letters: Vec<LetterId> = h
        .letters()
        .into_iter()
        .filter(|l| matches!(ctx.flavor(l), LetterFlavor::Indefinite | LetterFlavor::Inactive))
        .collect();
    match letters.as_slice() {
        [l] => Some(l.clone()),
        _ => None,
    }
}
