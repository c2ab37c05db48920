use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::Justification;
use crate::syntax::LetterId;
use crate::tree::{Context, FlavorMap, LetterFlavor, NodeId, ProofTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LintKind {
    FlavorPersistence,
    OutputNotAdmissible,
    Naming,
}

impl fmt::Display for LintKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LintKind::FlavorPersistence => "flavor_persistence",
            LintKind::OutputNotAdmissible => "output_not_admissible",
            LintKind::Naming => "naming",
        })
    }
}

/// A warning. Lints never make a tree invalid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lint {
    pub node: NodeId,
    pub kind: LintKind,
    pub message: String,
}

pub(crate) fn node_lints(tree: &ProofTree, parent: NodeId, n: NodeId, here: &Context<'_>) -> Vec<Lint> {
    let mut out = Vec::new();
    let Ok(above) = FlavorMap::at(tree, parent) else { return out };
    let mut active: Vec<(&LetterId, LetterFlavor)> = above.active().collect();
    active.sort();
    for (l, before) in active {
        let after = here.flavor(l);
        if after != before {
            out.push(Lint {
                node: n,
                kind: LintKind::FlavorPersistence,
                message: format!("`{l}` changes from {before} to {after}"),
            });
        }
    }
    let node = tree.get(n).expect("live node");
    if !matches!(node.justification, Justification::Assume | Justification::RootAxiom) {
        if let Ok(Err(why)) = tree.is_admissible(&node.content, n) {
            out.push(Lint { node: n, kind: LintKind::OutputNotAdmissible, message: why.reason });
        }
    }
    out
}

const GREEK_NAMES: [&str; 24] = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa", "lambda", "mu", "nu", "xi",
    "omicron", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
];

fn expected_flavor(l: &LetterId) -> Option<LetterFlavor> {
    let name = l.as_str();
    let first = name.chars().next()?;
    if l.is_reserved() {
        None
    } else if ('\u{0370}'..='\u{03FF}').contains(&first) || GREEK_NAMES.contains(&name) {
        Some(LetterFlavor::Indefinite)
    } else if first.is_uppercase() {
        Some(LetterFlavor::Adjective)
    } else {
        Some(LetterFlavor::Definite)
    }
}

/// Capitals should name adjectives, greek letters indefinite letters and
/// other lowercase letters definite ones, judged at first occurrence.
pub fn naming_lints(tree: &ProofTree) -> Vec<Lint> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in tree.preorder() {
        let node = tree.get(n).expect("live node");
        let mut fresh = Vec::new();
        node.content.visit_letters(&mut |l, _| {
            if seen.insert(l.clone()) {
                fresh.push(l.clone());
            }
        });
        if fresh.is_empty() {
            continue;
        }
        let Ok(flavors) = FlavorMap::at(tree, n) else { continue };
        for l in fresh {
            let Some(want) = expected_flavor(&l) else { continue };
            let got = flavors.get(&l);
            if got != want {
                out.push(Lint {
                    node: n,
                    kind: LintKind::Naming,
                    message: format!("`{l}` is {got} at its first occurrence; its name suggests {want}"),
                });
            }
        }
    }
    out
}
