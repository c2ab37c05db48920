//! Rule constructors. Each computes its output from the rule's own recipe
//! and attaches it; the validators in `check` are never consulted.

use crate::syntax::{parse_statement, Content, LetterId, Property, QuantKind, Sign, Statement, Term};
use crate::tree::{Context, LetterFlavor, NodeId, ProofTree, TreeError};

use super::{Justification, Step5Reading};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ApplyError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("rule does not apply: {0}")]
    Precondition(String),
    #[error("constructed output is not admissible: {0}")]
    OutputNotAdmissible(String),
}

fn pre<T>(msg: impl Into<String>) -> Result<T, ApplyError> {
    Err(ApplyError::Precondition(msg.into()))
}

fn ancestor_content(tree: &ProofTree, r: NodeId, leaf: NodeId) -> Result<&Content, ApplyError> {
    if !tree.is_ancestor(r, leaf) {
        return pre(format!("{r} is not an ancestor of {leaf}"));
    }
    Ok(tree.content(r)?)
}

fn ancestor_statement(tree: &ProofTree, r: NodeId, leaf: NodeId) -> Result<&Statement, ApplyError> {
    match ancestor_content(tree, r, leaf)? {
        Content::Statement(s) => Ok(s),
        Content::Property(_) => pre(format!("{r} holds a property")),
    }
}

fn ancestor_property(tree: &ProofTree, r: NodeId, leaf: NodeId) -> Result<&Property, ApplyError> {
    match ancestor_content(tree, r, leaf)? {
        Content::Property(p) => Ok(p),
        Content::Statement(_) => pre(format!("{r} holds a statement")),
    }
}

/// Attaches one successor. Rules that demand admissibility at the leaf are
/// checked there; for the others, admissibility at the new node is asserted.
fn grow(tree: &mut ProofTree, parent: NodeId, c: impl Into<Content>, j: Justification) -> Result<NodeId, ApplyError> {
    let c = c.into();
    let at_leaf = matches!(
        j,
        Justification::Explode { .. }
            | Justification::Join { .. }
            | Justification::FnSubst { .. }
            | Justification::PropertyIntro { .. }
    );
    if at_leaf {
        if let Err(why) = tree.is_admissible(&c, parent)? {
            return Err(ApplyError::OutputNotAdmissible(format!("{c}: {why}")));
        }
        return Ok(tree.attach_successor(parent, c, j)?);
    }
    let id = tree.attach_successor(parent, c, j)?;
    let c = &tree.get(id)?.content;
    if tree.is_admissible(c, id)?.is_err() {
        let text = format!("{c}");
        tree.remove_leaf(id)?;
        return Err(ApplyError::OutputNotAdmissible(text));
    }
    Ok(id)
}

/// Attaches a chain of successors, rolling back if any link fails.
fn grow_chain(
    tree: &mut ProofTree,
    leaf: NodeId,
    items: Vec<(Statement, Justification)>,
) -> Result<Vec<NodeId>, ApplyError> {
    let mut out = Vec::new();
    let mut cur = leaf;
    for (s, j) in items {
        match grow(tree, cur, s, j) {
            Ok(id) => {
                out.push(id);
                cur = id;
            }
            Err(e) => {
                for id in out.into_iter().rev() {
                    tree.remove_leaf(id)?;
                }
                return Err(e);
            }
        }
    }
    Ok(out)
}

fn template(text: String) -> Result<Statement, ApplyError> {
    parse_statement(&text).or_else(|e| pre(format!("cannot build `{text}`: {e}")))
}

/// Adds `a sign b` relating a definite and an inactive letter, or `a = a`
/// for a definite or inactive `a`.
pub fn apply_elem_add(tree: &mut ProofTree, leaf: NodeId, a: &LetterId, sign: Sign, b: &LetterId) -> Result<NodeId, ApplyError> {
    let (fa, fb) = (tree.flavor(a, leaf)?, tree.flavor(b, leaf)?);
    if a == b {
        if sign != Sign::Eq || !matches!(fa, LetterFlavor::Definite | LetterFlavor::Inactive) {
            return pre(format!("`{a} {} {a}` cannot be added", sign.as_str()));
        }
    } else {
        let ok = matches!(
            (fa, fb),
            (LetterFlavor::Definite, LetterFlavor::Inactive) | (LetterFlavor::Inactive, LetterFlavor::Definite)
        );
        if !ok {
            return pre(format!("`{a}` is {fa} and `{b}` is {fb}"));
        }
    }
    let s = Statement::relation(Term::Letter(a.clone()), sign, Term::Letter(b.clone()));
    grow(tree, leaf, s, Justification::ElemAdd { term: None })
}

/// Adds a relation between inactive `v` and a functional term of definite letters.
pub fn apply_elem_add_functional(
    tree: &mut ProofTree,
    leaf: NodeId,
    v: &LetterId,
    sign: Sign,
    t: &Term,
    letter_first: bool,
) -> Result<NodeId, ApplyError> {
    if tree.flavor(v, leaf)? != LetterFlavor::Inactive {
        return pre(format!("`{v}` is not inactive"));
    }
    if !t.is_functional() {
        return pre(format!("`{t}` is not a functional term"));
    }
    let flavors = tree.context(leaf)?;
    let mut all_definite = true;
    t.visit_letters(&mut |l| all_definite &= flavors.flavor(l) == LetterFlavor::Definite);
    if !all_definite {
        return pre(format!("`{t}` has letters that are not definite"));
    }
    let (l, r) = if letter_first { (Term::Letter(v.clone()), t.clone()) } else { (t.clone(), Term::Letter(v.clone())) };
    grow(tree, leaf, Statement::relation(l, sign, r), Justification::ElemAdd { term: Some(t.clone()) })
}

/// Replaces `from` by the other letter of the elementary equality at `eq`.
pub fn apply_elem_subst(tree: &mut ProofTree, leaf: NodeId, eq: NodeId, src: NodeId, from: &LetterId) -> Result<NodeId, ApplyError> {
    let e = ancestor_statement(tree, eq, leaf)?;
    let Statement::Relation { left: Term::Letter(x), sign: Sign::Eq, right: Term::Letter(y) } = e else {
        return pre(format!("`{e}` is not an elementary equality"));
    };
    let to = if x == from {
        y.clone()
    } else if y == from {
        x.clone()
    } else {
        return pre(format!("`{from}` does not occur in `{e}`"));
    };
    let result = ancestor_statement(tree, src, leaf)?.substitute_letter(from, &to);
    let j = Justification::ElemSubst { eq, src, from: from.clone(), to };
    grow(tree, leaf, result, j)
}

/// Replaces the functional term of the equality at `eq` by its letter.
pub fn apply_fn_subst(tree: &mut ProofTree, leaf: NodeId, eq: NodeId, src: NodeId) -> Result<NodeId, ApplyError> {
    let e = ancestor_statement(tree, eq, leaf)?;
    let Statement::Relation { left, sign: Sign::Eq, right } = e else {
        return pre(format!("`{e}` is not an equality"));
    };
    let (l, t) = match (left, right) {
        (Term::Letter(l), t @ Term::Apply(..)) | (t @ Term::Apply(..), Term::Letter(l)) => (l.clone(), t.clone()),
        _ => return pre(format!("`{e}` does not equate a letter with a functional term")),
    };
    let source = ancestor_statement(tree, src, leaf)?;
    if source.contains_letter(&l) {
        return pre(format!("`{source}` already mentions `{l}`"));
    }
    let result = source.replace_subterm(&t, &Term::Letter(l.clone()));
    grow(tree, leaf, result, Justification::FnSubst { eq, src, letter: l, term: t })
}

/// Splits `leaf` into `s` and its dual.
pub fn apply_branch(tree: &mut ProofTree, leaf: NodeId, s: &Statement) -> Result<(NodeId, NodeId), ApplyError> {
    let dual = s.dual_structural().or_else(|_| pre(format!("`{s}` has no structural dual")))?;
    for side in [s, &dual] {
        if let Err(why) = tree.is_admissible(&Content::Statement(side.clone()), leaf)? {
            return Err(ApplyError::OutputNotAdmissible(format!("{side}: {why}")));
        }
    }
    Ok(tree.attach_pair(leaf, (s.clone(), Justification::Branch), (dual, Justification::Branch))?)
}

pub fn apply_join(tree: &mut ProofTree, parent: NodeId, s: &Statement) -> Result<NodeId, ApplyError> {
    let Some((l, r)) = tree.get(parent)?.pair() else {
        return pre(format!("{parent} has no pair children"));
    };
    for b in [l, r] {
        if !tree.deduces(b, s)? {
            return pre(format!("branch {b} does not deduce `{s}`"));
        }
    }
    grow(tree, parent, s.clone(), Justification::Join { left: l, right: r })
}

pub fn apply_explode(tree: &mut ProofTree, leaf: NodeId, s: &Statement) -> Result<NodeId, ApplyError> {
    let Some((d1, d2)) = tree.is_contradictory(leaf)? else {
        return pre(format!("{leaf} is not in contradiction"));
    };
    grow(tree, leaf, s.clone(), Justification::Explode { d1, d2 })
}

/// Both definition steps for the existential statement at `of`.
pub fn apply_definition(tree: &mut ProofTree, leaf: NodeId, of: NodeId, new: Option<&LetterId>) -> Result<[NodeId; 2], ApplyError> {
    let e = ancestor_statement(tree, of, leaf)?.clone();
    let Statement::Quantified { kind: QuantKind::Existential, hypothesis, conclusion } = e else {
        return pre(format!("`{e}` is not existential"));
    };
    let ctx = tree.context(leaf)?;
    let direct = ctx.admissible_statement(&hypothesis).is_ok();
    let (h, c) = match (direct, new) {
        (true, None) => (*hypothesis, *conclusion),
        (true, Some(_)) => return pre("the hypothesis is admissible; no new letter is needed"),
        (false, None) => return pre("a new letter is needed"),
        (false, Some(v)) => {
            if ctx.flavor(v) != LetterFlavor::Inactive {
                return pre(format!("`{v}` is not inactive"));
            }
            let iota = single_free_letter(&hypothesis, &ctx)?;
            (hypothesis.substitute_letter(&iota, v), conclusion.substitute_letter(&iota, v))
        }
    };
    let j = |step| Justification::Definition { of, step, new: new.cloned() };
    let ids = grow_chain(tree, leaf, vec![(h, j(1)), (c, j(2))])?;
    Ok([ids[0], ids[1]])
}

fn single_free_letter(h: &Statement, ctx: &Context<'_>) -> Result<LetterId, ApplyError> {
    let mut found: Vec<LetterId> = Vec::new();
    h.visit_letters(&mut |l, _| {
        if ctx.flavor(l) != LetterFlavor::Definite && ctx.flavor(l) != LetterFlavor::Adjective && !found.contains(l) {
            found.push(l.clone());
        }
    });
    match (h.is_quantified(), found.as_slice()) {
        (false, [l]) => Ok(l.clone()),
        _ => pre(format!("`{h}` does not bind exactly one letter")),
    }
}

/// Deduction from the universal statement at `of`, witnessed by the nearest
/// matching ancestor.
pub fn apply_deduction(tree: &mut ProofTree, leaf: NodeId, of: NodeId, let_: Option<&LetterId>) -> Result<NodeId, ApplyError> {
    let u = ancestor_statement(tree, of, leaf)?.clone();
    let Statement::Quantified { kind: QuantKind::Universal, hypothesis, conclusion } = u else {
        return pre(format!("`{u}` is not universal"));
    };
    let ctx = tree.context(leaf)?;
    let direct = ctx.admissible_statement(&hypothesis).is_ok();
    let (h, c) = match (direct, let_) {
        (true, None) => (*hypothesis, *conclusion),
        (true, Some(_)) => return pre("the hypothesis is admissible; no letter is instantiated"),
        (false, None) => return pre("an instantiating letter is needed"),
        (false, Some(d)) => {
            if ctx.flavor(d) != LetterFlavor::Definite {
                return pre(format!("`{d}` is not definite"));
            }
            let iota = single_free_letter(&hypothesis, &ctx)?;
            (hypothesis.substitute_letter(&iota, d), conclusion.substitute_letter(&iota, d))
        }
    };
    let chain = tree.ancestors(leaf)?;
    let Some(&witness) = chain.iter().find(|&&a| tree.statement(a) == Some(&h)) else {
        return pre(format!("no ancestor holds `{h}`"));
    };
    grow(tree, leaf, c, Justification::Deduction { of, witness: Some(witness), let_: let_.cloned() })
}

/// Introduces a property whose head is inactive.
pub fn apply_property_intro(tree: &mut ProofTree, leaf: NodeId, p: Property) -> Result<NodeId, ApplyError> {
    if tree.flavor(&p.head, leaf)? != LetterFlavor::Inactive {
        return pre(format!("`{}` is not inactive", p.head));
    }
    grow(tree, leaf, p, Justification::PropertyIntro { of: None, letter: None, term: None })
}

/// Introduces a modified copy of the property at `of`.
pub fn apply_property_copy(
    tree: &mut ProofTree,
    leaf: NodeId,
    of: NodeId,
    letter: &LetterId,
    term: &Term,
) -> Result<NodeId, ApplyError> {
    let q = ancestor_property(tree, of, leaf)?;
    if !q.args.iter().any(|a| a.as_letter() == Some(letter)) {
        return pre(format!("`{letter}` is not an argument letter of `{q}`"));
    }
    if tree.flavor(letter, leaf)? != LetterFlavor::Indefinite {
        return pre(format!("`{letter}` is not indefinite"));
    }
    let copy = q.substitute_letter_with_term(letter, term).or_else(|e| pre(e.to_string()))?;
    let j = Justification::PropertyIntro { of: Some(of), letter: Some(letter.clone()), term: Some(term.clone()) };
    grow(tree, leaf, copy, j)
}

pub fn apply_abbrev_subst(tree: &mut ProofTree, leaf: NodeId, stmt: NodeId, prop: NodeId, at: usize) -> Result<NodeId, ApplyError> {
    let s = ancestor_statement(tree, stmt, leaf)?;
    let p = ancestor_property(tree, prop, leaf)?;
    let paths = s.find_constituent_occurrences(&p.defining);
    let Some(path) = paths.get(at) else {
        return pre(format!("occurrence {at} of `{}` does not exist in `{s}`", p.defining));
    };
    let out = s.replace_at(path, &p.abbreviation()).expect("occurrence path is valid");
    grow(tree, leaf, out, Justification::AbbrevSubst { stmt, prop, at })
}

/// All six choice steps for `of` = `< xi = xi > [ eta = eta ] C`.
pub fn apply_choice(
    tree: &mut ProofTree,
    leaf: NodeId,
    of: NodeId,
    new: &LetterId,
    d: &[LetterId; 5],
    step5: Step5Reading,
) -> Result<Vec<NodeId>, ApplyError> {
    let s = ancestor_statement(tree, of, leaf)?;
    let Statement::Quantified { kind: QuantKind::Universal, hypothesis, conclusion } = s else {
        return pre(format!("`{s}` is not universal"));
    };
    let Statement::Quantified { kind: QuantKind::Existential, hypothesis: sub_h, conclusion: sub_c } = &**conclusion else {
        return pre(format!("`{s}` has no existential conclusion"));
    };
    let (Some(x), Some(y)) = (hypothesis.reflexive_equality_letter(), sub_h.reflexive_equality_letter()) else {
        return pre("hypothesis and sub-hypothesis must be reflexive equalities");
    };
    if x == y {
        return pre("the two quantified letters must differ");
    }
    let ctx = tree.context(leaf)?;
    if ctx.flavor(x) != LetterFlavor::Indefinite || ctx.flavor(y) != LetterFlavor::Indefinite {
        return pre("the quantified letters must be indefinite");
    }
    if ctx.flavor(new) != LetterFlavor::Inactive {
        return pre(format!("`{new}` is not inactive"));
    }
    if let Some(l) = d.iter().find(|l| ctx.flavor(l) != LetterFlavor::Definite) {
        return pre(format!("`{l}` is not definite"));
    }
    let f = new;
    let [d1, d2, d3, d4, d5] = d;
    let sign = match step5 {
        Step5Reading::Diagram => "=",
        Step5Reading::Prose => "!=",
    };
    let fx = format!("{f} ( {x} )");
    let tail: Vec<String> = sub_c
        .to_string()
        .split(' ')
        .map(|tok| if tok == y.as_str() { fx.clone() } else { tok.to_string() })
        .collect();
    let texts = [
        format!("{f} ( {d1} ) != {f}"),
        format!("< {d2} ( {x} ) != {d2} > {fx} != {f}"),
        format!("< {d3} ( {x} ) != {d3} > < {x} ( {y} ) != {x} > {f} ( {y} ) != {f}"),
        format!("< {fx} != {f} > {f} ( {fx} ) != {f}"),
        format!("< {fx} = {f} > [ {x} ( {y} ) != {x} ] < {d4} ( {y} ) != {d4} > {d5} ( {x} ( {y} ) ) {sign} {d5}"),
        format!("< {fx} != {f} > {}", tail.join(" ")),
    ];
    let mut items = Vec::new();
    for (i, t) in texts.into_iter().enumerate() {
        let j = Justification::Choice { of, step: i as u8 + 1, new: new.clone(), d: d.clone() };
        items.push((template(t)?, j));
    }
    grow_chain(tree, leaf, items)
}

/// `p = q` from `< p(xi) != q(xi) > [ p(xi) = p ] q(xi) = q`.
pub fn apply_fn_identity(tree: &mut ProofTree, leaf: NodeId, of: NodeId) -> Result<NodeId, ApplyError> {
    let s = ancestor_statement(tree, of, leaf)?;
    let Some(Statement::Relation { left: Term::Apply(p, x), right: Term::Apply(q, _), .. }) = s.hypothesis() else {
        return pre(format!("`{s}` does not compare two applications"));
    };
    let expected = format!("< {p} ( {x} ) != {q} ( {x} ) > [ {p} ( {x} ) = {p} ] {q} ( {x} ) = {q}");
    if s.to_string() != expected {
        return pre(format!("`{s}` is not `{expected}`"));
    }
    let ctx = tree.context(leaf)?;
    let flavors_ok = [(&**p, LetterFlavor::Definite), (&**q, LetterFlavor::Definite), (&**x, LetterFlavor::Indefinite)]
        .iter()
        .all(|(t, want)| t.as_letter().map(|l| ctx.flavor(l)) == Some(*want));
    if !flavors_ok {
        return pre("function letters must be definite and the argument indefinite");
    }
    let out = template(format!("{p} = {q}"))?;
    grow(tree, leaf, out, Justification::FnIdentity { of })
}

/// All four restriction steps for the property `A xi` at `prop`.
pub fn apply_restrict(
    tree: &mut ProofTree,
    leaf: NodeId,
    prop: NodeId,
    g: &LetterId,
    new: &LetterId,
) -> Result<Vec<NodeId>, ApplyError> {
    let p = ancestor_property(tree, prop, leaf)?;
    let abbr = p.abbreviation().to_string();
    let words: Vec<&str> = abbr.split(' ').collect();
    let [a, x] = words.as_slice() else {
        return pre(format!("`{abbr}` does not consist of two letters"));
    };
    let ctx = tree.context(leaf)?;
    let need = [
        (LetterId::new(*x), LetterFlavor::Indefinite),
        (g.clone(), LetterFlavor::Definite),
        (new.clone(), LetterFlavor::Inactive),
    ];
    if let Some((l, want)) = need.iter().find(|(l, want)| ctx.flavor(l) != *want) {
        return pre(format!("`{l}` must be {want}"));
    }
    let f = new;
    let texts = [
        format!("{f} = {f}"),
        format!("< {f} ( {x} ) != {f} > {f} ( {x} ) = {g} ( {x} )"),
        format!("< {g} ( {x} ) != {g} > < {a} {x} > {f} ( {x} ) != {f}"),
        format!("< {f} ( {x} ) != {f} > [ {g} ( {x} ) != {g} ] {a} {x}"),
    ];
    let mut items = Vec::new();
    for (i, t) in texts.into_iter().enumerate() {
        let j = Justification::Restrict { prop, g: g.clone(), new: new.clone(), step: i as u8 + 1 };
        items.push((template(t)?, j));
    }
    grow_chain(tree, leaf, items)
}
