use std::collections::HashMap;
use std::fmt;

use super::{LetterFlavor, NodeId, ProofTree, TreeError};
use crate::syntax::{Content, LetterId, Property, Statement, Term};

/// Abbreviation duality unfolds defining statements; this bounds the unfolding.
const DUAL_DEPTH: usize = 16;

/// Why a content is not admissible at a node.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{reason}")]
pub struct Inadmissible {
    pub reason: String,
}

fn inadmissible<T>(reason: impl Into<String>) -> Result<T, Inadmissible> {
    Err(Inadmissible { reason: reason.into() })
}

/// Flavors of every active letter at one node. Letters not in the map are inactive.
#[derive(Clone, Debug, Default)]
pub struct FlavorMap {
    map: HashMap<LetterId, LetterFlavor>,
}

impl FlavorMap {
    pub fn at(tree: &ProofTree, n: NodeId) -> Result<FlavorMap, TreeError> {
        let mut fm = FlavorMap::default();
        for a in tree.ancestors(n)? {
            fm.absorb(&tree.get(a)?.content);
        }
        Ok(fm)
    }

    /// Adds the letters of one more ancestor content.
    pub fn absorb(&mut self, c: &Content) {
        match c {
            Content::Property(p) => {
                p.visit_letters(&mut |l, _| self.raise(l, LetterFlavor::Indefinite));
                self.raise(&p.head, LetterFlavor::Adjective);
            }
            Content::Statement(s) => {
                let fl = if s.is_unquantified() { LetterFlavor::Definite } else { LetterFlavor::Indefinite };
                s.visit_letters(&mut |l, _| self.raise(l, fl));
            }
        }
    }

    fn raise(&mut self, l: &LetterId, to: LetterFlavor) {
        let e = self.map.entry(l.clone()).or_insert(to);
        if to > *e {
            *e = to;
        }
    }

    pub fn get(&self, l: &LetterId) -> LetterFlavor {
        self.map.get(l).copied().unwrap_or(LetterFlavor::Inactive)
    }

    /// A copy where the given letters are additionally definite.
    pub fn with_definite<'a>(&self, letters: impl IntoIterator<Item = &'a LetterId>) -> FlavorMap {
        let mut fm = self.clone();
        for l in letters {
            fm.map.insert(l.clone(), LetterFlavor::Definite);
        }
        fm
    }

    pub fn active(&self) -> impl Iterator<Item = (&LetterId, LetterFlavor)> {
        self.map.iter().map(|(l, f)| (l, *f))
    }
}

/// Everything derived from one node's ancestor chain.
pub struct Context<'t> {
    pub tree: &'t ProofTree,
    pub node: NodeId,
    /// Root first.
    chain: Vec<NodeId>,
    flavors: FlavorMap,
}

impl fmt::Debug for Context<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context").field("node", &self.node).field("chain", &self.chain).finish()
    }
}

impl<'t> Context<'t> {
    pub fn new(tree: &'t ProofTree, node: NodeId) -> Result<Self, TreeError> {
        let mut chain = tree.ancestors(node)?;
        chain.reverse();
        let flavors = FlavorMap::at(tree, node)?;
        Ok(Context { tree, node, chain, flavors })
    }

    pub fn flavors(&self) -> &FlavorMap {
        &self.flavors
    }

    pub fn flavor(&self, l: &LetterId) -> LetterFlavor {
        self.flavors.get(l)
    }

    /// Ancestors of the node, root first, the node itself last.
    pub fn chain(&self) -> &[NodeId] {
        &self.chain
    }

    pub fn statements(&self) -> impl Iterator<Item = (NodeId, &'t Statement)> + '_ {
        self.chain.iter().filter_map(|&n| self.tree.statement(n).map(|s| (n, s)))
    }

    pub fn properties(&self) -> impl Iterator<Item = (NodeId, &'t Property)> + '_ {
        let tree = self.tree;
        self.chain
            .iter()
            .filter_map(move |&n| tree.get(n).ok().and_then(|x| x.content.as_property()).map(|p| (n, p)))
    }

    pub fn admissible(&self, c: &Content) -> Result<(), Inadmissible> {
        match c {
            Content::Statement(s) => self.admissible_statement(s),
            Content::Property(p) => self.admissible_property(p),
        }
    }

    pub fn admissible_statement(&self, s: &Statement) -> Result<(), Inadmissible> {
        statement_ok(s, &self.flavors, &mut 0)
    }

    /// Admissibility with some letters treated as definite.
    pub fn admissible_statement_with(&self, s: &Statement, definite: &[LetterId]) -> Result<(), Inadmissible> {
        statement_ok(s, &self.flavors.with_definite(definite), &mut 0)
    }

    pub fn admissible_property(&self, p: &Property) -> Result<(), Inadmissible> {
        let counts = p.letters_of();
        if counts.total(&p.head) != 1 {
            return inadmissible(format!("property head `{}` occurs more than once", p.head));
        }
        match self.flavor(&p.head) {
            LetterFlavor::Inactive => self.fresh_property_ok(p),
            LetterFlavor::Adjective => {
                for (_, q) in self.properties() {
                    if self.modified_copy_witness(q, p).is_some() {
                        return Ok(());
                    }
                }
                inadmissible(format!("property `{p}` is not a modified copy of an ancestor property"))
            }
            fl => inadmissible(format!("property head `{}` is {fl}", p.head)),
        }
    }

    fn fresh_property_ok(&self, p: &Property) -> Result<(), Inadmissible> {
        let abbr = p.abbreviation().letters_of();
        let defining = p.defining.letters_of();
        let mut args = Vec::new();
        for a in &p.args {
            let Some(l) = a.as_letter() else {
                return inadmissible(format!("property argument `{a}` is not a letter"));
            };
            if self.flavor(l) == LetterFlavor::Definite {
                return inadmissible(format!("property argument `{l}` is definite"));
            }
            if abbr.total(l) != 1 {
                return inadmissible(format!("property argument `{l}` is repeated"));
            }
            if defining.total(l) == 0 {
                return inadmissible(format!("property argument `{l}` is absent from the defining statement"));
            }
            args.push(l.clone());
        }
        self.admissible_statement_with(&p.defining, &args)
            .map_err(|e| Inadmissible { reason: format!("defining statement: {}", e.reason) })
    }

    /// If `p` is `q` with one indefinite argument letter replaced by a term,
    /// returns that letter and term.
    pub fn modified_copy_witness(&self, q: &Property, p: &Property) -> Option<(LetterId, Term)> {
        if q.head != p.head || q.args.len() != p.args.len() {
            return None;
        }
        for (qa, pa) in q.args.iter().zip(&p.args) {
            let Some(l) = qa.as_letter() else { continue };
            if self.is_modified_copy(q, p, l, pa) {
                return Some((l.clone(), pa.clone()));
            }
        }
        None
    }

    pub fn is_modified_copy(&self, q: &Property, p: &Property, letter: &LetterId, term: &Term) -> bool {
        if self.flavor(letter) != LetterFlavor::Indefinite {
            return false;
        }
        if !q.args.iter().any(|a| a.as_letter() == Some(letter)) {
            return false;
        }
        matches!(q.substitute_letter_with_term(letter, term), Ok(r) if &r == p)
    }

    pub fn are_dual(&self, a: &Statement, b: &Statement) -> bool {
        self.dual_at_depth(a, b, 0)
    }

    fn dual_at_depth(&self, a: &Statement, b: &Statement, depth: usize) -> bool {
        match (a, b) {
            (
                Statement::Relation { left: l1, sign: s1, right: r1 },
                Statement::Relation { left: l2, sign: s2, right: r2 },
            ) => l1 == l2 && r1 == r2 && s1 != s2,
            (
                Statement::Quantified { kind: k1, hypothesis: h1, conclusion: c1 },
                Statement::Quantified { kind: k2, hypothesis: h2, conclusion: c2 },
            ) => k1 != k2 && h1 == h2 && self.dual_at_depth(c1, c2, depth),
            (Statement::Abbreviation { .. }, Statement::Abbreviation { .. }) => {
                if depth >= DUAL_DEPTH {
                    return false;
                }
                let defs = |s: &Statement| -> Vec<&'t Statement> {
                    self.properties().filter(|(_, p)| &p.abbreviation() == s).map(|(_, p)| &p.defining).collect()
                };
                let (da, db) = (defs(a), defs(b));
                da.iter().any(|x| db.iter().any(|y| self.dual_at_depth(x, y, depth + 1)))
            }
            _ => false,
        }
    }

    /// First dual pair along the chain, scanning downward from the root.
    pub fn contradiction(&self) -> Option<(NodeId, NodeId)> {
        let stmts: Vec<(NodeId, &Statement)> = self.statements().collect();
        for j in 1..stmts.len() {
            for i in 0..j {
                if self.are_dual(stmts[i].1, stmts[j].1) {
                    return Some((stmts[i].0, stmts[j].0));
                }
            }
        }
        None
    }

    /// An ancestor whose statement is dual to `s`.
    pub fn dual_ancestor(&self, s: &Statement) -> Option<NodeId> {
        self.statements().find(|(_, a)| self.are_dual(a, s)).map(|(n, _)| n)
    }
}

/// Letters of a hypothesis that case 2 may bind: indefinite or inactive ones.
pub(crate) fn quantifiable_letters(hyp: &Statement, fm: &FlavorMap) -> Vec<LetterId> {
    hyp.letters()
        .into_iter()
        .filter(|l| matches!(fm.get(l), LetterFlavor::Indefinite | LetterFlavor::Inactive))
        .collect()
}

fn statement_ok(s: &Statement, fm: &FlavorMap, fresh: &mut usize) -> Result<(), Inadmissible> {
    match s {
        Statement::Relation { .. } => {
            let mut bad = None;
            s.visit_letters(&mut |l, _| {
                if bad.is_none() && fm.get(l) != LetterFlavor::Definite {
                    bad = Some(l.clone());
                }
            });
            match bad {
                Some(l) => inadmissible(format!("letter `{l}` in `{s}` is {}", fm.get(&l))),
                None => Ok(()),
            }
        }
        Statement::Abbreviation { head, args } => {
            if fm.get(head) != LetterFlavor::Adjective {
                return inadmissible(format!("abbreviation head `{head}` is {}", fm.get(head)));
            }
            for a in args {
                let mut bad = None;
                a.visit_letters(&mut |l| {
                    if bad.is_none() && fm.get(l) != LetterFlavor::Definite {
                        bad = Some(l.clone());
                    }
                });
                if let Some(l) = bad {
                    return inadmissible(format!("letter `{l}` in `{s}` is {}", fm.get(&l)));
                }
            }
            Ok(())
        }
        Statement::Quantified { hypothesis, conclusion, .. } => {
            let direct = statement_ok(hypothesis, fm, fresh).and_then(|_| statement_ok(conclusion, fm, fresh));
            let Err(first) = direct else { return Ok(()) };
            if hypothesis.is_quantified() {
                return Err(first);
            }
            let bound = quantifiable_letters(hypothesis, fm);
            let [iota] = bound.as_slice() else {
                return Err(first);
            };
            *fresh += 1;
            let syn = LetterId::new(format!("#{fresh}"));
            let inner = fm.with_definite([&syn]);
            let h = hypothesis.substitute_letter(iota, &syn);
            let c = conclusion.substitute_letter(iota, &syn);
            statement_ok(&h, &inner, fresh).and_then(|_| statement_ok(&c, &inner, fresh))
        }
    }
}
