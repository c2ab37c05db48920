//! Rule validators, rule constructors and whole-tree checking.

mod apply;
mod check;
mod lint;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::syntax::{LetterId, Statement, Term};
use crate::tree::{Context, LinkKind, NodeId, ProofTree};

pub use apply::{
    apply_abbrev_subst, apply_branch, apply_choice, apply_deduction, apply_definition, apply_elem_add,
    apply_elem_add_functional, apply_elem_subst, apply_explode, apply_fn_identity, apply_fn_subst, apply_join,
    apply_property_copy, apply_property_intro, apply_restrict, ApplyError,
};
pub use check::{
    check_abbrev_subst, check_branch, check_choice, check_deduction, check_definition, check_elem_add,
    check_elem_subst, check_explode, check_fn_identity, check_fn_subst, check_join, check_property_intro,
    check_restrict, check_root,
};
pub use lint::{naming_lints, Lint, LintKind};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Justification {
    RootAxiom,
    Assume,
    ElemAdd { term: Option<Term> },
    ElemSubst { eq: NodeId, src: NodeId, from: LetterId, to: LetterId },
    FnSubst { eq: NodeId, src: NodeId, letter: LetterId, term: Term },
    Branch,
    Join { left: NodeId, right: NodeId },
    Explode { d1: NodeId, d2: NodeId },
    Definition { of: NodeId, step: u8, new: Option<LetterId> },
    Deduction { of: NodeId, witness: Option<NodeId>, let_: Option<LetterId> },
    PropertyIntro { of: Option<NodeId>, letter: Option<LetterId>, term: Option<Term> },
    AbbrevSubst { stmt: NodeId, prop: NodeId, at: usize },
    Choice { of: NodeId, step: u8, new: LetterId, d: [LetterId; 5] },
    FnIdentity { of: NodeId },
    Restrict { prop: NodeId, g: LetterId, new: LetterId, step: u8 },
}

impl Justification {
    pub fn rule(&self) -> RuleName {
        match self {
            Justification::RootAxiom => RuleName::Root,
            Justification::Assume => RuleName::Assume,
            Justification::ElemAdd { .. } => RuleName::ElemAdd,
            Justification::ElemSubst { .. } => RuleName::ElemSubst,
            Justification::FnSubst { .. } => RuleName::FnSubst,
            Justification::Branch => RuleName::Branch,
            Justification::Join { .. } => RuleName::Join,
            Justification::Explode { .. } => RuleName::Explode,
            Justification::Definition { .. } => RuleName::Definition,
            Justification::Deduction { .. } => RuleName::Deduction,
            Justification::PropertyIntro { .. } => RuleName::PropertyIntro,
            Justification::AbbrevSubst { .. } => RuleName::AbbrevSubst,
            Justification::Choice { .. } => RuleName::Choice,
            Justification::FnIdentity { .. } => RuleName::FnIdentity,
            Justification::Restrict { .. } => RuleName::Restrict,
        }
    }

    pub fn step(&self) -> Option<u8> {
        match self {
            Justification::Definition { step, .. }
            | Justification::Choice { step, .. }
            | Justification::Restrict { step, .. } => Some(*step),
            _ => None,
        }
    }

    /// Same rule and parameters, ignoring the step number.
    pub fn same_instance(&self, other: &Justification) -> bool {
        let strip = |j: &Justification| {
            let mut j = j.clone();
            match &mut j {
                Justification::Definition { step, .. }
                | Justification::Choice { step, .. }
                | Justification::Restrict { step, .. } => *step = 0,
                _ => {}
            }
            j
        };
        strip(self) == strip(other)
    }

    /// Node parameters with their script key names.
    pub fn references(&self) -> Vec<(&'static str, NodeId)> {
        match self {
            Justification::ElemSubst { eq, src, .. } | Justification::FnSubst { eq, src, .. } => {
                vec![("eq", *eq), ("src", *src)]
            }
            Justification::Join { left, right } => vec![("left", *left), ("right", *right)],
            Justification::Explode { d1, d2 } => vec![("d1", *d1), ("d2", *d2)],
            Justification::Definition { of, .. }
            | Justification::Choice { of, .. }
            | Justification::FnIdentity { of } => vec![("of", *of)],
            Justification::Deduction { of, witness, .. } => {
                let mut v = vec![("of", *of)];
                v.extend(witness.map(|w| ("witness", w)));
                v
            }
            Justification::PropertyIntro { of, .. } => of.map(|o| ("of", o)).into_iter().collect(),
            Justification::AbbrevSubst { stmt, prop, .. } => vec![("stmt", *stmt), ("prop", *prop)],
            Justification::Restrict { prop, .. } => vec![("prop", *prop)],
            _ => Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    Root,
    Assume,
    ElemAdd,
    ElemSubst,
    FnSubst,
    Branch,
    Join,
    Explode,
    Definition,
    Deduction,
    PropertyIntro,
    AbbrevSubst,
    Choice,
    FnIdentity,
    Restrict,
    /// Tree-shape requirements that belong to no single rule.
    Structure,
    Naming,
}

impl RuleName {
    pub const ALL: [RuleName; 17] = [
        RuleName::Root,
        RuleName::Assume,
        RuleName::ElemAdd,
        RuleName::ElemSubst,
        RuleName::FnSubst,
        RuleName::Branch,
        RuleName::Join,
        RuleName::Explode,
        RuleName::Definition,
        RuleName::Deduction,
        RuleName::PropertyIntro,
        RuleName::AbbrevSubst,
        RuleName::Choice,
        RuleName::FnIdentity,
        RuleName::Restrict,
        RuleName::Structure,
        RuleName::Naming,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleName::Root => "root",
            RuleName::Assume => "assume",
            RuleName::ElemAdd => "elem_add",
            RuleName::ElemSubst => "elem_subst",
            RuleName::FnSubst => "fn_subst",
            RuleName::Branch => "branch",
            RuleName::Join => "join",
            RuleName::Explode => "explode",
            RuleName::Definition => "definition",
            RuleName::Deduction => "deduction",
            RuleName::PropertyIntro => "property_intro",
            RuleName::AbbrevSubst => "abbrev_subst",
            RuleName::Choice => "choice",
            RuleName::FnIdentity => "fn_identity",
            RuleName::Restrict => "restrict",
            RuleName::Structure => "structure",
            RuleName::Naming => "naming",
        }
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule `{0}`")]
pub struct UnknownRuleName(pub String);

impl FromStr for RuleName {
    type Err = UnknownRuleName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleName::ALL.into_iter().find(|r| r.as_str() == s).ok_or_else(|| UnknownRuleName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub node: NodeId,
    /// Script label of the node.
    pub label: String,
    pub rule: RuleName,
    /// Short machine code such as `branch.not_dual`.
    pub clause: String,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: [{}] {}", self.label, self.clause, self.message)
    }
}

/// Reading of the conclusion sign in the fifth choice step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Step5Reading {
    /// `d5(ξ(η)) = d5`
    #[default]
    Diagram,
    /// `d5(ξ(η)) ≠ d5`
    Prose,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    pub choice_step5: Step5Reading,
    /// Report naming lints as violations.
    pub strict_naming: bool,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    /// Nodes in pre-order.
    pub order: Vec<NodeId>,
    pub violations: Vec<Violation>,
    pub lints: Vec<Lint>,
    /// Every contradictory node with its dual ancestor pair.
    pub contradictions: BTreeMap<NodeId, (NodeId, NodeId)>,
    pub assumptions: Vec<NodeId>,
}

impl CheckReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn is_contradictory(&self, n: NodeId) -> bool {
        self.contradictions.contains_key(&n)
    }

    pub fn violations_at(&self, n: NodeId) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(move |v| v.node == n)
    }
}

/// Runs the validator of `n`'s own justification, plus the shape checks
/// that tie the node to its parent.
pub fn check_node(tree: &ProofTree, n: NodeId, opts: &CheckOptions) -> Vec<Violation> {
    let Ok(node) = tree.get(n) else { return Vec::new() };
    let structural = |clause: &str, message: String| {
        vec![Violation { node: n, label: tree.label(n), rule: RuleName::Structure, clause: clause.into(), message }]
    };
    let j = &node.justification;
    match node.link {
        LinkKind::Root => match j {
            Justification::RootAxiom => check_root(tree, n),
            Justification::Assume => Vec::new(),
            _ => structural("structure.root_justification", format!("the root cannot be justified by {}", j.rule())),
        },
        LinkKind::PairLeft | LinkKind::PairRight => {
            if *j != Justification::Branch {
                return structural("structure.pair_not_branch", format!("pair children must use branch, not {}", j.rule()));
            }
            let parent = node.parent.expect("pair child has a parent");
            let (l, r) = tree.get(parent).ok().and_then(|p| p.pair()).expect("pair parent");
            if node.link == LinkKind::PairLeft {
                check_branch(tree, l, r)
            } else {
                Vec::new()
            }
        }
        LinkKind::Successor => {
            let parent = node.parent.expect("successor has a parent");
            let pnode = tree.get(parent).expect("parent exists");
            if pnode.pair().is_some() && !matches!(j, Justification::Join { .. }) {
                return structural(
                    "structure.successor_not_join",
                    "the successor of a node with pair children must be a join".into(),
                );
            }
            match j {
                Justification::RootAxiom => {
                    structural("structure.root_axiom_below_root", "root axiom used below the root".into())
                }
                Justification::Assume => match pnode.justification {
                    Justification::RootAxiom | Justification::Assume => Vec::new(),
                    _ => structural("structure.assume_after_rule", "assumptions must precede rule applications".into()),
                },
                Justification::Branch => structural("structure.branch_not_pair", "branch justifies pair children only".into()),
                Justification::ElemAdd { .. } => check_elem_add(tree, n),
                Justification::ElemSubst { .. } => check_elem_subst(tree, n),
                Justification::FnSubst { .. } => check_fn_subst(tree, n),
                Justification::Join { .. } => check_join(tree, n),
                Justification::Explode { .. } => check_explode(tree, n),
                Justification::Definition { .. } => check_definition(tree, n),
                Justification::Deduction { .. } => check_deduction(tree, n),
                Justification::PropertyIntro { .. } => check_property_intro(tree, n),
                Justification::AbbrevSubst { .. } => check_abbrev_subst(tree, n),
                Justification::Choice { .. } => check_choice(tree, n, opts.choice_step5),
                Justification::FnIdentity { .. } => check_fn_identity(tree, n),
                Justification::Restrict { .. } => check_restrict(tree, n),
            }
        }
    }
}

pub fn check_tree(tree: &ProofTree, opts: &CheckOptions) -> CheckReport {
    let mut report = CheckReport { order: tree.preorder(), ..Default::default() };
    for &n in &report.order {
        report.violations.extend(check_node(tree, n, opts));
        let node = tree.get(n).expect("pre-order yields live nodes");
        if node.justification == Justification::Assume {
            report.assumptions.push(n);
        }
        let ctx = Context::new(tree, n).expect("live node");
        if let Some(pair) = ctx.contradiction() {
            report.contradictions.insert(n, pair);
        }
        if let Some(parent) = node.parent {
            report.lints.extend(lint::node_lints(tree, parent, n, &ctx));
        }
    }
    let naming = naming_lints(tree);
    if opts.strict_naming {
        report.violations.extend(naming.iter().map(|l| Violation {
            node: l.node,
            label: tree.label(l.node),
            rule: RuleName::Naming,
            clause: "naming.convention".into(),
            message: l.message.clone(),
        }));
    }
    report.lints.extend(naming);
    report
}

/// True iff an unconditional descendant of `from` carries `goal`.
pub fn deduces(tree: &ProofTree, from: NodeId, goal: &Statement) -> bool {
    tree.deduces(from, goal).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::parse_script;

    /// Checks a script and returns `label clause` for every violation.
    fn verdicts_with(text: &str, opts: &CheckOptions) -> Vec<String> {
        let s = parse_script(text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        check_tree(&s.tree, opts).violations.iter().map(|v| format!("{} {}", v.label, v.clause)).collect()
    }

    fn verdicts(text: &str) -> Vec<String> {
        verdicts_with(text, &CheckOptions::default())
    }

    fn valid(text: &str) {
        assert_eq!(verdicts(text), Vec::<String>::new(), "{text}");
    }

    fn flags(text: &str, label: &str, clause: &str) {
        let v = verdicts(text);
        assert!(v.contains(&format!("{label} {clause}")), "expected {label} {clause}, got {v:?}");
    }

    const ROOT: &str = "root r: a = a ; rule=root\n";

    #[test]
    fn root_axiom() {
        valid(ROOT);
        flags("root r: a != a ; rule=root\n", "r", "root.not_reflexive_equality");
        flags("root r: a = b ; rule=root\n", "r", "root.not_reflexive_equality");
        flags(&format!("{ROOT}succ s of r: b = b ; rule=root\n"), "s", "structure.root_axiom_below_root");
    }

    #[test]
    fn elementary_addition() {
        valid(&format!("{ROOT}succ s of r: b != a ; rule=elem_add\n"));
        valid(&format!("{ROOT}succ s of r: y = y ; rule=elem_add\nsucc t of s: y = y ; rule=elem_add\n"));
        let functional = "root r: f = f ; rule=root\nsucc s of r: x = x ; rule=elem_add\n";
        valid(&format!("{functional}succ t of s: h = f ( x ) ; rule=elem_add term=f(x)\n"));
        valid(&format!("{functional}succ t of s: f ( x ) != h ; rule=elem_add term=f(x)\n"));
        flags(&format!("{functional}succ t of s: h = f ( x ) ; rule=elem_add\n"), "t", "elem_add.missing_term");
        flags(&format!("{functional}succ t of s: h = f ( x ) ; rule=elem_add term=f(f)\n"), "t", "elem_add.term_mismatch");
        flags(&format!("{ROOT}succ s of r: c = d ; rule=elem_add\n"), "s", "elem_add.flavor");
        flags(&format!("{ROOT}succ s of r: b != b ; rule=elem_add\n"), "s", "elem_add.reflexive_not_equality");
    }

    const SUBST: &str = "root r: a = a ; rule=root\nsucc s1 of r: b != a ; rule=elem_add\npairL e of s1: a = b ; rule=branch\npairR o of s1: a != b ; rule=branch\n";

    #[test]
    fn elementary_substitution() {
        valid(&format!("{SUBST}succ t of e: b != b ; rule=elem_subst eq=e src=s1 from=a to=b\n"));
        valid(&format!("{SUBST}succ t of e: a != a ; rule=elem_subst eq=e src=s1 from=b to=a\n"));
        valid(&format!("{SUBST}succ t of e: b = b ; rule=elem_subst eq=e src=r from=a to=b\n"));
        flags(&format!("{SUBST}succ t of e: a != b ; rule=elem_subst eq=e src=s1 from=a to=b\n"), "t", "elem_subst.result_mismatch");
        flags(&format!("{SUBST}succ t of o: b != b ; rule=elem_subst eq=o src=s1 from=a to=b\n"), "t", "elem_subst.eq_mismatch");
    }

    const FN: &str = "root r: f = f ; rule=root\nsucc s of r: x = x ; rule=elem_add\nsucc g of s: g != f ; rule=elem_add\nsucc h of g: h = f ( x ) ; rule=elem_add term=f(x)\nsucc k of h: f ( x ) != g ; rule=assume\n";

    #[test]
    fn functional_substitution() {
        let ctx = "root r: f = f ; rule=root\nassume x of r: x = x\nassume g of x: g = g\nassume h of g: h = f ( x )\nassume k of h: f ( x ) != g\n";
        valid(&format!("{ctx}succ t of k: h != g ; rule=fn_subst eq=h src=k letter=h term=f(x)\n"));
        valid(&format!("{ctx}succ t of k: g = g ; rule=fn_subst eq=h src=g letter=h term=f(x)\n"));
        let flipped = ctx.replace("h = f ( x )", "f ( x ) = h");
        valid(&format!("{flipped}succ t of k: h != g ; rule=fn_subst eq=h src=k letter=h term=f(x)\n"));
        flags(&format!("{ctx}succ t of k: h = g ; rule=fn_subst eq=h src=k letter=h term=f(x)\n"), "t", "fn_subst.result_mismatch");
        // an assumption below a rule application is a structural error
        flags(FN, "k", "structure.assume_after_rule");
    }

    #[test]
    fn branching() {
        valid(&format!("{ROOT}succ s of r: b != a ; rule=elem_add\nsucc t of s: b = b ; rule=elem_add\npairL u of t: a != b ; rule=branch\npairR v of t: a = b ; rule=branch\n"));
        valid(&format!("{ROOT}pairL u of r: < xi = xi > [ eta = eta ] xi != eta ; rule=branch\npairR v of r: [ xi = xi ] < eta = eta > xi = eta ; rule=branch\n"));
        let bad = format!("{ROOT}succ s of r: b != a ; rule=elem_add\npairL u of s: a = b ; rule=branch\npairR v of s: a = b ; rule=branch\n");
        assert_eq!(verdicts(&bad), vec!["u branch.not_dual".to_string()]);
        flags(&format!("{ROOT}pairL u of r: a = c ; rule=branch\npairR v of r: a != c ; rule=branch\n"), "u", "branch.inadmissible");
        flags(&format!("{ROOT}pairL u of r: a = a ; rule=elem_add\npairR v of r: a != a ; rule=branch\n"), "u", "structure.pair_not_branch");
    }

    #[test]
    fn join_and_explode() {
        let base = format!("{ROOT}succ s of r: b != a ; rule=elem_add\nsucc t of s: b = b ; rule=elem_add\npairL u of t: a != b ; rule=branch\npairR v of t: a = b ; rule=branch\nsucc w of v: b != b ; rule=elem_subst eq=v src=s from=a to=b\n");
        valid(&format!("{base}succ x of w: a != b ; rule=explode d1=t d2=w\nsucc j of t: a != b ; rule=join left=u right=v\n"));
        flags(&format!("{base}succ j of t: a != b ; rule=join left=u right=v\n"), "j", "join.missing_in_branch");
        flags(&format!("{base}succ x of w: a != b ; rule=explode d1=s d2=w\n"), "x", "explode.not_dual");
        valid(&format!("{ROOT}assume n of r: < xi = xi > xi != xi\nsucc m of n: a != a ; rule=deduction of=n witness=r let=a\nsucc e of m: [ xi = xi ] xi = xi ; rule=explode d1=r d2=m\n"));
        flags(&format!("{ROOT}succ s of r: b != a ; rule=elem_add\npairL u of s: a = b ; rule=branch\npairR v of s: a != b ; rule=branch\nsucc x of s: b = b ; rule=elem_add\n"), "x", "structure.successor_not_join");
    }

    const THEOREM: &str = "root r: a = a ; rule=root\npairL u of r: < xi = xi > [ eta = eta ] xi != eta ; rule=branch\npairR e of r: [ xi = xi ] < eta = eta > xi = eta ; rule=branch\n";

    #[test]
    fn definition() {
        valid(&format!("{THEOREM}succ e1 of e: x = x ; rule=definition of=e step=1 new=x\nsucc e2 of e1: < eta = eta > x = eta ; rule=definition of=e step=2 new=x\n"));
        valid(&format!("{THEOREM}succ e1 of e: x = x ; rule=definition of=e step=1 new=x\n"));
        flags(&format!("{THEOREM}succ e1 of e: a = a ; rule=definition of=e step=1 new=a\n"), "e1", "definition.new_not_inactive");
        flags(&format!("{THEOREM}succ e1 of e: x = x ; rule=definition of=e step=1\n"), "e1", "definition.missing_new");
        flags(&format!("{THEOREM}succ e1 of e: < eta = eta > x = eta ; rule=definition of=e step=2 new=x\n"), "e1", "definition.step_order");
        flags(&format!("{THEOREM}succ e1 of e: x = x ; rule=definition of=u step=1 new=x\n"), "e1", "definition.bad_reference");
        flags(&format!("{THEOREM}succ e1 of u: x = x ; rule=definition of=u step=1 new=x\n"), "e1", "definition.not_existential");
        let russell = "assume t: [ < y ( y ) = y > y ( y ) != y ] < y ( y ) != y > y ( y ) = y\nassume y of t: y = y\n";
        valid(&format!("{russell}succ a of y: < y ( y ) = y > y ( y ) != y ; rule=definition of=t step=1\nsucc b of a: < y ( y ) != y > y ( y ) = y ; rule=definition of=t step=2\n"));
        flags(&format!("{russell}succ a of y: < y ( y ) = y > y ( y ) != y ; rule=definition of=t step=1 new=z\n"), "a", "definition.unexpected_new");
    }

    #[test]
    fn deduction() {
        let ctx = "assume t: < eta = eta > x = eta\nassume x of t: x = x\nassume y of x: y = y\n";
        valid(&format!("{ctx}succ d of y: x = y ; rule=deduction of=t witness=y let=y\n"));
        flags(&format!("{ctx}succ d of y: x = y ; rule=deduction of=t let=y\n"), "d", "deduction.missing_witness");
        flags(&format!("{ctx}succ d of y: x = y ; rule=deduction of=t witness=x let=y\n"), "d", "deduction.witness_mismatch");
        flags(&format!("{ctx}succ d of y: x = z ; rule=deduction of=t witness=y let=z\n"), "d", "deduction.let_not_definite");
        valid(&format!("{ROOT}assume n of r: < xi = xi > xi != xi\nsucc m of n: a != a ; rule=deduction of=n witness=r let=a\n"));
        let case_a = "assume t: < < x ( x ) = x > y != x > [ x ( x ) != x ] y != x\nassume w of t: < x ( x ) = x > y != x\nassume y of w: y = y\n";
        valid(&format!("{case_a}succ d of y: [ x ( x ) != x ] y != x ; rule=deduction of=t witness=w\n"));
        flags(&format!("{case_a}succ d of y: [ x ( x ) != x ] y != x ; rule=deduction of=t witness=w let=y\n"), "d", "deduction.unexpected_let");
    }

    #[test]
    fn property_introduction() {
        let intro = format!("{ROOT}succ p of r: A xi eta : xi = eta ; rule=property_intro\n");
        valid(&intro);
        valid(&format!("{intro}succ f of p: f = f ; rule=elem_add\nsucc q of f: A xi f(xi) : xi = f ( xi ) ; rule=property_intro of=p letter=eta term=f(xi)\n"));
        flags(&format!("{ROOT}succ p of r: a xi : xi = a ; rule=property_intro\n"), "p", "property_intro.head_not_inactive");
        flags(
            &format!("{intro}succ f of p: f = f ; rule=elem_add\nsucc q of f: A xi f(xi) : xi != f ( xi ) ; rule=property_intro of=p letter=eta term=f(xi)\n"),
            "q",
            "property_intro.not_modified_copy",
        );
    }

    #[test]
    fn abbreviation_substitution() {
        let ctx = "assume s: < xi = xi > [ eta = eta ] xi = eta\nassume p of s: A xi eta : xi = eta\n";
        valid(&format!("{ctx}succ t of p: < xi = xi > [ eta = eta ] A xi eta ; rule=abbrev_subst stmt=s prop=p at=0\n"));
        flags(&format!("{ctx}succ t of p: < xi = xi > [ eta = eta ] A xi eta ; rule=abbrev_subst stmt=s prop=p at=1\n"), "t", "abbrev_subst.occurrence_out_of_range");
        let bare = "assume s: xi = eta\nassume p of s: A xi eta : xi = eta\n";
        valid(&format!("{bare}succ t of p: A xi eta ; rule=abbrev_subst stmt=s prop=p at=0\n"));
        let ctx2 = "assume s: < xi = xi > xi = eta\nassume p of s: A xi eta : xi = eta\n";
        let v = verdicts(&format!("{ctx2}succ t of p: < xi = xi > A xi eta ; rule=abbrev_subst stmt=s prop=p at=0\n"));
        assert!(v.is_empty(), "{v:?}");
    }

    const CHOICE: &str = "assume n0: A xi eta : xi = eta\nassume n1 of n0: < xi = xi > [ eta = eta ] A xi eta\nsucc n2 of n1: g = g ; rule=elem_add\nsucc n3 of n2: h != g ; rule=elem_add\n";
    const CHOICE_STEPS: [&str; 6] = [
        "f ( g ) != f",
        "< g ( xi ) != g > f ( xi ) != f",
        "< g ( xi ) != g > < xi ( eta ) != xi > f ( eta ) != f",
        "< f ( xi ) != f > f ( f ( xi ) ) != f",
        "< f ( xi ) = f > [ xi ( eta ) != xi ] < g ( eta ) != g > h ( xi ( eta ) ) = h",
        "< f ( xi ) != f > A xi f ( xi )",
    ];

    fn choice_script(steps: &[&str]) -> String {
        let mut s = CHOICE.to_string();
        for (k, st) in steps.iter().enumerate() {
            s.push_str(&format!(
                "succ c{} of {}: {st} ; rule=choice of=n1 step={} new=f d1=g d2=g d3=g d4=g d5=h\n",
                k + 1,
                if k == 0 { "n3".to_string() } else { format!("c{k}") },
                k + 1
            ));
        }
        s
    }

    #[test]
    fn choice() {
        valid(&choice_script(&CHOICE_STEPS));
        valid(&choice_script(&CHOICE_STEPS[..3]));
        let mut prose = CHOICE_STEPS;
        prose[4] = "< f ( xi ) = f > [ xi ( eta ) != xi ] < g ( eta ) != g > h ( xi ( eta ) ) != h";
        flags(&choice_script(&prose[..5]), "c5", "choice.result_mismatch");
        let opts = CheckOptions { choice_step5: Step5Reading::Prose, ..CheckOptions::default() };
        assert!(verdicts_with(&choice_script(&prose), &opts).is_empty());
        assert!(!verdicts_with(&choice_script(&CHOICE_STEPS), &opts).is_empty());
        let reused = choice_script(&CHOICE_STEPS[..1]).replace("new=f", "new=g").replace("f ( g ) != f", "g ( g ) != g");
        flags(&reused, "c1", "choice.new_not_inactive");
        let undefined = choice_script(&CHOICE_STEPS[..1]).replace("d1=g", "d1=k").replace("f ( g )", "f ( k )");
        flags(&undefined, "c1", "choice.letter_not_definite");
    }

    const IDENTITY: &str = "root r: f = f ; rule=root\nassume g of r: g = g\nassume q of g: < f ( xi ) != g ( xi ) > [ f ( xi ) = f ] g ( xi ) = g\n";

    #[test]
    fn function_identity() {
        valid(&format!("{IDENTITY}succ i of q: f = g ; rule=fn_identity of=q\n"));
        flags(&format!("{IDENTITY}succ i of q: g = f ; rule=fn_identity of=q\n"), "i", "fn_identity.result_mismatch");
        let same = "root r: f = f ; rule=root\nassume q of r: < f ( xi ) != f ( xi ) > [ f ( xi ) = f ] f ( xi ) = f\n";
        valid(&format!("{same}succ i of q: f = f ; rule=fn_identity of=q\n"));
        let mixed = IDENTITY.replace("g ( xi ) != g", "g ( eta ) != g").replace("< f ( xi ) != g ( xi ) >", "< f ( xi ) != g ( eta ) >");
        flags(&format!("{mixed}succ i of q: f = g ; rule=fn_identity of=q\n"), "i", "fn_identity.bad_of");
    }

    const RESTRICT: &str = "root n0: g = g ; rule=root\nsucc n1 of n0: A xi : xi != g ; rule=property_intro\n";
    const RESTRICT_STEPS: [&str; 4] = [
        "f = f",
        "< f ( xi ) != f > f ( xi ) = g ( xi )",
        "< g ( xi ) != g > < A xi > f ( xi ) != f",
        "< f ( xi ) != f > [ g ( xi ) != g ] A xi",
    ];

    fn restrict_script(order: &[usize]) -> String {
        let mut s = RESTRICT.to_string();
        let mut parent = "n1".to_string();
        for (k, &step) in order.iter().enumerate() {
            s.push_str(&format!(
                "succ r{k} of {parent}: {} ; rule=restrict prop=n1 g=g new=f step={}\n",
                RESTRICT_STEPS[step - 1],
                step
            ));
            parent = format!("r{k}");
        }
        s
    }

    #[test]
    fn restriction() {
        valid(&restrict_script(&[1, 2, 3, 4]));
        valid(&restrict_script(&[1, 2]));
        flags(&restrict_script(&[1, 3]), "r1", "restrict.step_order");
        let three = "root n0: g = g ; rule=root\nsucc n1 of n0: A xi eta : xi != eta ; rule=property_intro\nsucc r0 of n1: f = f ; rule=restrict prop=n1 g=g new=f step=1\n";
        flags(three, "r0", "restrict.bad_abbreviation");
    }

    #[test]
    fn tree_report() {
        let s = parse_script(&format!("{ROOT}succ s of r: b != a ; rule=elem_add\nsucc t of s: b = b ; rule=elem_add\npairL u of t: a != b ; rule=branch\npairR v of t: a = b ; rule=branch\nsucc w of v: b != b ; rule=elem_subst eq=v src=s from=a to=b\n")).unwrap();
        let report = check_tree(&s.tree, &CheckOptions::default());
        assert!(report.is_valid());
        assert_eq!(report.order, s.tree.preorder());
        let w = s.tree.find_label("w").unwrap();
        assert!(report.is_contradictory(w));
        assert_eq!(report.contradictions.len(), 1);
        assert!(report.assumptions.is_empty());
        let root = s.tree.root().unwrap();
        assert!(deduces(&s.tree, root, &crate::syntax::parse_statement("b = b").unwrap()));
        assert!(!deduces(&s.tree, root, &crate::syntax::parse_statement("a != b").unwrap()));
        assert!(deduces(&s.tree, w, &crate::syntax::parse_statement("b != b").unwrap()));
    }

    #[test]
    fn strict_naming_promotes_lints() {
        let text = format!("{ROOT}succ s of r: xi != a ; rule=elem_add\n");
        assert!(verdicts(&text).is_empty());
        let strict = CheckOptions { strict_naming: true, ..CheckOptions::default() };
        assert_eq!(verdicts_with(&text, &strict), vec!["s naming.convention".to_string()]);
    }
}
