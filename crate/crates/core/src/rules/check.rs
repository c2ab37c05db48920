//! One validator per rule. Each returns the violations found at one node.

use crate::syntax::{Content, LetterId, Property, QuantKind, Sign, Statement, Term};
use crate::tree::{Context, LetterFlavor, LinkKind, NodeId, ProofTree};

use super::{Justification, RuleName, Step5Reading, Violation};

struct Fail {
    clause: String,
    message: String,
}

type Verdict = Result<(), Fail>;

fn fail<T>(clause: &str, message: impl Into<String>) -> Result<T, Fail> {
    Err(Fail { clause: clause.to_string(), message: message.into() })
}

fn report(tree: &ProofTree, n: NodeId, rule: RuleName, v: Verdict) -> Vec<Violation> {
    match v {
        Ok(()) => Vec::new(),
        Err(Fail { clause, message }) => {
            vec![Violation { node: n, label: tree.label(n), rule, clause, message }]
        }
    }
}

fn letter(l: &LetterId) -> Term {
    Term::Letter(l.clone())
}

fn app(f: &LetterId, x: Term) -> Term {
    Term::apply(letter(f), x)
}

fn own_statement<'t>(tree: &'t ProofTree, n: NodeId, rule: &str) -> Result<&'t Statement, Fail> {
    match tree.statement(n) {
        Some(s) => Ok(s),
        None => fail(&format!("{rule}.not_statement"), "node content must be a statement"),
    }
}

fn parent_of(tree: &ProofTree, n: NodeId, rule: &str) -> Result<NodeId, Fail> {
    match tree.get(n).ok().and_then(|x| x.parent) {
        Some(p) => Ok(p),
        None => fail(&format!("{rule}.no_parent"), "rule applied at the root"),
    }
}

fn context<'t>(tree: &'t ProofTree, n: NodeId) -> Context<'t> {
    Context::new(tree, n).expect("checked node exists")
}

fn require_successor(tree: &ProofTree, n: NodeId, rule: &str) -> Verdict {
    match tree.get(n).map(|x| x.link) {
        Ok(LinkKind::Successor) => Ok(()),
        _ => fail(&format!("{rule}.not_successor"), "rule output must be a successor"),
    }
}

/// Resolves a node parameter, which must be `below` or one of its ancestors.
fn reference<'t>(tree: &'t ProofTree, r: NodeId, below: NodeId, key: &str, rule: &str) -> Result<&'t Content, Fail> {
    let Ok(node) = tree.get(r) else {
        return fail(&format!("{rule}.bad_reference"), format!("{key} refers to a missing node"));
    };
    if !tree.is_ancestor(r, below) {
        return fail(
            &format!("{rule}.bad_reference"),
            format!("{key}={} is not an ancestor", tree.label(r)),
        );
    }
    Ok(&node.content)
}

fn ref_statement<'t>(tree: &'t ProofTree, r: NodeId, below: NodeId, key: &str, rule: &str) -> Result<&'t Statement, Fail> {
    match reference(tree, r, below, key, rule)? {
        Content::Statement(s) => Ok(s),
        Content::Property(_) => fail(&format!("{rule}.bad_reference"), format!("{key} must hold a statement")),
    }
}

fn ref_property<'t>(tree: &'t ProofTree, r: NodeId, below: NodeId, key: &str, rule: &str) -> Result<&'t Property, Fail> {
    match reference(tree, r, below, key, rule)? {
        Content::Property(p) => Ok(p),
        Content::Statement(_) => fail(&format!("{rule}.bad_reference"), format!("{key} must hold a property")),
    }
}

fn expect_equal(got: &Statement, want: &Statement, rule: &str) -> Verdict {
    if got == want {
        Ok(())
    } else {
        fail(&format!("{rule}.result_mismatch"), format!("expected `{want}`, found `{got}`"))
    }
}

/// For step `k` of a multi-step rule, verifies that steps `1..k` sit directly
/// above with the same parameters and returns the parent of step 1.
fn step_one_parent(tree: &ProofTree, n: NodeId, rule: &str) -> Result<NodeId, Fail> {
    let j = &tree.get(n).expect("node exists").justification;
    let mut k = j.step().expect("multi-step rule");
    let mut cur = n;
    while k > 1 {
        require_successor(tree, cur, rule)?;
        let p = parent_of(tree, cur, rule)?;
        let pj = &tree.get(p).expect("parent exists").justification;
        if pj.step() != Some(k - 1) || !pj.same_instance(j) {
            return fail(
                &format!("{rule}.step_order"),
                format!("step {k} must directly follow step {} of the same application", k - 1),
            );
        }
        cur = p;
        k -= 1;
    }
    require_successor(tree, cur, rule)?;
    parent_of(tree, cur, rule)
}

fn quantifiable(h: &Statement, ctx: &Context<'_>) -> Vec<LetterId> {
    h.letters()
        .into_iter()
        .filter(|l| matches!(ctx.flavor(l), LetterFlavor::Indefinite | LetterFlavor::Inactive))
        .collect()
}

pub fn check_root(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Root, root(tree, n))
}

fn root(tree: &ProofTree, n: NodeId) -> Verdict {
    if tree.root() != Some(n) {
        return fail("root.not_root", "root axiom used below the root");
    }
    let s = own_statement(tree, n, "root")?;
    if s.reflexive_equality_letter().is_none() {
        return fail("root.not_reflexive_equality", format!("`{s}` is not a reflexive elementary equality"));
    }
    Ok(())
}

pub fn check_elem_add(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::ElemAdd, elem_add(tree, n))
}

fn elem_add(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::ElemAdd { term } = &tree.get(n).expect("node").justification else { unreachable!() };
    require_successor(tree, n, "elem_add")?;
    let s = own_statement(tree, n, "elem_add")?;
    let ctx = context(tree, parent_of(tree, n, "elem_add")?);
    let Statement::Relation { left, sign, right } = s else {
        return fail("elem_add.not_relation", format!("`{s}` is not a relation"));
    };
    match (left.as_letter(), right.as_letter()) {
        (Some(x), Some(y)) => {
            if term.is_some() {
                return fail("elem_add.unexpected_term", "term is only given for a functional relation");
            }
            let (fx, fy) = (ctx.flavor(x), ctx.flavor(y));
            if x == y {
                if *sign != Sign::Eq {
                    return fail("elem_add.reflexive_not_equality", format!("`{s}` relates a letter to itself"));
                }
                if !matches!(fx, LetterFlavor::Definite | LetterFlavor::Inactive) {
                    return fail("elem_add.flavor", format!("`{x}` is {fx}"));
                }
                return Ok(());
            }
            let mut pair = [fx, fy];
            pair.sort();
            if pair != [LetterFlavor::Inactive, LetterFlavor::Definite] {
                return fail(
                    "elem_add.flavor",
                    format!("need one definite and one inactive letter; `{x}` is {fx}, `{y}` is {fy}"),
                );
            }
            Ok(())
        }
        (Some(v), None) | (None, Some(v)) => {
            let t = if left.as_letter().is_some() { right } else { left };
            if ctx.flavor(v) != LetterFlavor::Inactive {
                return fail("elem_add.flavor", format!("`{v}` is {}", ctx.flavor(v)));
            }
            let mut bad = None;
            t.visit_letters(&mut |l| {
                if bad.is_none() && ctx.flavor(l) != LetterFlavor::Definite {
                    bad = Some(l.clone());
                }
            });
            if let Some(l) = bad {
                return fail("elem_add.flavor", format!("`{l}` in `{t}` is {}", ctx.flavor(&l)));
            }
            match term {
                None => fail("elem_add.missing_term", "a functional relation names its term"),
                Some(given) if given != t => fail("elem_add.term_mismatch", format!("term is `{given}`, relation has `{t}`")),
                Some(_) => Ok(()),
            }
        }
        (None, None) => fail("elem_add.not_elementary", format!("`{s}` has no bare letter side")),
    }
}

pub fn check_elem_subst(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::ElemSubst, elem_subst(tree, n))
}

fn elem_subst(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::ElemSubst { eq, src, from, to } = &tree.get(n).expect("node").justification else { unreachable!() };
    require_successor(tree, n, "elem_subst")?;
    let s = own_statement(tree, n, "elem_subst")?;
    let p = parent_of(tree, n, "elem_subst")?;
    let e = ref_statement(tree, *eq, p, "eq", "elem_subst")?;
    let source = ref_statement(tree, *src, p, "src", "elem_subst")?;
    let forward = Statement::relation(letter(from), Sign::Eq, letter(to));
    let backward = Statement::relation(letter(to), Sign::Eq, letter(from));
    if *e != forward && *e != backward {
        return fail("elem_subst.eq_mismatch", format!("`{e}` is not the equality of `{from}` and `{to}`"));
    }
    expect_equal(s, &source.substitute_letter(from, to), "elem_subst")
}

pub fn check_fn_subst(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::FnSubst, fn_subst(tree, n))
}

fn fn_subst(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::FnSubst { eq, src, letter: l, term } = &tree.get(n).expect("node").justification else {
        unreachable!()
    };
    require_successor(tree, n, "fn_subst")?;
    let s = own_statement(tree, n, "fn_subst")?;
    let p = parent_of(tree, n, "fn_subst")?;
    let e = ref_statement(tree, *eq, p, "eq", "fn_subst")?;
    let source = ref_statement(tree, *src, p, "src", "fn_subst")?;
    let forward = Statement::relation(letter(l), Sign::Eq, term.clone());
    let backward = Statement::relation(term.clone(), Sign::Eq, letter(l));
    if *e != forward && *e != backward {
        return fail("fn_subst.eq_mismatch", format!("`{e}` is not the equality of `{l}` and `{term}`"));
    }
    if let Err(why) = context(tree, p).admissible_statement(s) {
        return fail("fn_subst.inadmissible", why.reason);
    }
    match s.substitute_letter_with_term(l, term) {
        Ok(back) if back == *source => Ok(()),
        _ => fail("fn_subst.result_mismatch", format!("replacing `{l}` by `{term}` in `{s}` does not give `{source}`")),
    }
}

/// Validates a pair of branch children. Pair-level findings are attributed
/// to the left child.
pub fn check_branch(tree: &ProofTree, left: NodeId, right: NodeId) -> Vec<Violation> {
    let mut out = Vec::new();
    let parent = tree.get(left).ok().and_then(|x| x.parent);
    let same_pair = parent.and_then(|p| tree.get(p).ok()).and_then(|p| p.pair()) == Some((left, right));
    if !same_pair {
        return report(tree, left, RuleName::Branch, fail("branch.not_pair", "nodes are not a pair of children"));
    }
    let ctx = context(tree, parent.expect("checked above"));
    let mut stmts = Vec::new();
    for n in [left, right] {
        let v = match tree.get(n).map(|x| &x.justification) {
            Ok(Justification::Branch) => own_statement(tree, n, "branch").and_then(|s| {
                stmts.push(s);
                ctx.admissible_statement(s).or_else(|why| fail("branch.inadmissible", why.reason))
            }),
            _ => fail("branch.not_branch", "pair children are justified by branch"),
        };
        out.extend(report(tree, n, RuleName::Branch, v));
    }
    if let [a, b] = stmts[..] {
        if !ctx.are_dual(a, b) {
            out.extend(report(tree, left, RuleName::Branch, fail("branch.not_dual", format!("`{a}` and `{b}` are not dual"))));
        }
    }
    out
}

pub fn check_join(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Join, join(tree, n))
}

fn join(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::Join { left, right } = &tree.get(n).expect("node").justification else { unreachable!() };
    require_successor(tree, n, "join")?;
    let s = own_statement(tree, n, "join")?;
    let p = parent_of(tree, n, "join")?;
    if tree.get(p).expect("parent").pair() != Some((*left, *right)) {
        return fail("join.not_pair_children", "left and right must be the pair children of the parent");
    }
    if let Err(why) = context(tree, p).admissible_statement(s) {
        return fail("join.inadmissible", why.reason);
    }
    for (key, b) in [("left", *left), ("right", *right)] {
        if !tree.deduces(b, s).unwrap_or(false) {
            return fail("join.missing_in_branch", format!("the {key} branch does not deduce `{s}`"));
        }
    }
    Ok(())
}

pub fn check_explode(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Explode, explode(tree, n))
}

fn explode(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::Explode { d1, d2 } = &tree.get(n).expect("node").justification else { unreachable!() };
    require_successor(tree, n, "explode")?;
    let s = own_statement(tree, n, "explode")?;
    let p = parent_of(tree, n, "explode")?;
    let a = ref_statement(tree, *d1, p, "d1", "explode")?;
    let b = ref_statement(tree, *d2, p, "d2", "explode")?;
    let ctx = context(tree, p);
    if !ctx.are_dual(a, b) {
        return fail("explode.not_dual", format!("`{a}` and `{b}` are not dual"));
    }
    ctx.admissible_statement(s).or_else(|why| fail("explode.inadmissible", why.reason))
}

pub fn check_definition(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Definition, definition(tree, n))
}

fn definition(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::Definition { of, step, new } = &tree.get(n).expect("node").justification else { unreachable!() };
    if !(1..=2).contains(step) {
        return fail("definition.bad_step", format!("step {step} does not exist"));
    }
    let base = step_one_parent(tree, n, "definition")?;
    let e = ref_statement(tree, *of, base, "of", "definition")?;
    let Statement::Quantified { kind: QuantKind::Existential, hypothesis, conclusion } = e else {
        return fail("definition.not_existential", format!("`{e}` is not existential"));
    };
    let ctx = context(tree, base);
    let (h, c) = if ctx.admissible_statement(hypothesis).is_ok() {
        if new.is_some() {
            return fail("definition.unexpected_new", "the hypothesis is admissible; no new letter is introduced");
        }
        ((**hypothesis).clone(), (**conclusion).clone())
    } else {
        let iota = unique_bound_letter(hypothesis, &ctx, "definition")?;
        let Some(v) = new else {
            return fail("definition.missing_new", "a new letter must replace the bound letter");
        };
        if ctx.flavor(v) != LetterFlavor::Inactive {
            return fail("definition.new_not_inactive", format!("`{v}` is {}", ctx.flavor(v)));
        }
        (hypothesis.substitute_letter(&iota, v), conclusion.substitute_letter(&iota, v))
    };
    let s = own_statement(tree, n, "definition")?;
    expect_equal(s, if *step == 1 { &h } else { &c }, "definition")
}

fn unique_bound_letter(h: &Statement, ctx: &Context<'_>, rule: &str) -> Result<LetterId, Fail> {
    if h.is_quantified() {
        return fail(&format!("{rule}.hypothesis_inadmissible"), format!("quantified hypothesis `{h}` is not admissible"));
    }
    match quantifiable(h, ctx).as_slice() {
        [l] => Ok(l.clone()),
        _ => fail(
            &format!("{rule}.no_unique_letter"),
            format!("hypothesis `{h}` does not have exactly one indefinite letter"),
        ),
    }
}

pub fn check_deduction(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Deduction, deduction(tree, n))
}

fn deduction(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::Deduction { of, witness, let_ } = &tree.get(n).expect("node").justification else {
        unreachable!()
    };
    require_successor(tree, n, "deduction")?;
    let s = own_statement(tree, n, "deduction")?;
    let p = parent_of(tree, n, "deduction")?;
    let u = ref_statement(tree, *of, p, "of", "deduction")?;
    let Statement::Quantified { kind: QuantKind::Universal, hypothesis, conclusion } = u else {
        return fail("deduction.not_universal", format!("`{u}` is not universal"));
    };
    let ctx = context(tree, p);
    let (h, c) = if ctx.admissible_statement(hypothesis).is_ok() {
        if let_.is_some() {
            return fail("deduction.unexpected_let", "the hypothesis is admissible; no letter is instantiated");
        }
        ((**hypothesis).clone(), (**conclusion).clone())
    } else {
        let iota = unique_bound_letter(hypothesis, &ctx, "deduction")?;
        let Some(d) = let_ else {
            return fail("deduction.missing_let", "a definite letter must instantiate the bound letter");
        };
        if ctx.flavor(d) != LetterFlavor::Definite {
            return fail("deduction.let_not_definite", format!("`{d}` is {}", ctx.flavor(d)));
        }
        (hypothesis.substitute_letter(&iota, d), conclusion.substitute_letter(&iota, d))
    };
    let Some(w) = witness else {
        return fail("deduction.missing_witness", "the hypothesis must be witnessed by an ancestor");
    };
    let ws = ref_statement(tree, *w, p, "witness", "deduction")?;
    if *ws != h {
        return fail("deduction.witness_mismatch", format!("witness `{ws}` is not `{h}`"));
    }
    expect_equal(s, &c, "deduction")
}

pub fn check_property_intro(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::PropertyIntro, property_intro(tree, n))
}

fn property_intro(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::PropertyIntro { of, letter: l, term } = &tree.get(n).expect("node").justification else {
        unreachable!()
    };
    require_successor(tree, n, "property_intro")?;
    let Some(prop) = tree.get(n).expect("node").content.as_property() else {
        return fail("property_intro.not_property", "node content must be a property");
    };
    let p = parent_of(tree, n, "property_intro")?;
    let ctx = context(tree, p);
    match of {
        None => {
            if l.is_some() || term.is_some() {
                return fail("property_intro.unexpected_param", "letter and term belong to a modified copy");
            }
            if ctx.flavor(&prop.head) != LetterFlavor::Inactive {
                return fail("property_intro.head_not_inactive", format!("`{}` is {}", prop.head, ctx.flavor(&prop.head)));
            }
            ctx.admissible_property(prop).or_else(|why| fail("property_intro.inadmissible", why.reason))
        }
        Some(q) => {
            let original = ref_property(tree, *q, p, "of", "property_intro")?;
            if ctx.flavor(&prop.head) != LetterFlavor::Adjective || original.head != prop.head {
                return fail("property_intro.head_mismatch", "a modified copy keeps the adjective of its original");
            }
            if prop.letters_of().total(&prop.head) != 1 {
                return fail("property_intro.inadmissible", format!("`{}` occurs more than once", prop.head));
            }
            let ok = match (l, term) {
                (Some(l), Some(t)) => ctx.is_modified_copy(original, prop, l, t),
                (None, None) => ctx.modified_copy_witness(original, prop).is_some(),
                _ => return fail("property_intro.missing_param", "letter and term are given together"),
            };
            if ok {
                Ok(())
            } else {
                fail("property_intro.not_modified_copy", format!("`{prop}` is not a modified copy of `{original}`"))
            }
        }
    }
}

pub fn check_abbrev_subst(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::AbbrevSubst, abbrev_subst(tree, n))
}

fn abbrev_subst(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::AbbrevSubst { stmt, prop, at } = &tree.get(n).expect("node").justification else {
        unreachable!()
    };
    require_successor(tree, n, "abbrev_subst")?;
    let s = own_statement(tree, n, "abbrev_subst")?;
    let p = parent_of(tree, n, "abbrev_subst")?;
    let source = ref_statement(tree, *stmt, p, "stmt", "abbrev_subst")?;
    let property = ref_property(tree, *prop, p, "prop", "abbrev_subst")?;
    let occurrences = source.find_constituent_occurrences(&property.defining);
    let Some(path) = occurrences.get(*at) else {
        return fail(
            "abbrev_subst.occurrence_out_of_range",
            format!("`{source}` has {} occurrence(s) of `{}`", occurrences.len(), property.defining),
        );
    };
    let expected = source.replace_at(path, &property.abbreviation()).expect("path from search");
    expect_equal(s, &expected, "abbrev_subst")
}

/// The statement of one choice step, built directly from the schematic.
pub(crate) fn choice_schema(
    step: u8,
    f: &LetterId,
    xi: &LetterId,
    eta: &LetterId,
    sub_conclusion: &Statement,
    d: &[LetterId; 5],
    step5: Step5Reading,
) -> Option<Statement> {
    let mem = |x: Term, w: &LetterId| Statement::membership(x, w);
    let (x, y) = (letter(xi), letter(eta));
    Some(match step {
        1 => mem(letter(&d[0]), f),
        2 => Statement::universal(mem(x.clone(), &d[1]), mem(x, f)),
        3 => Statement::universal(mem(x, &d[2]), Statement::universal(mem(y.clone(), xi), mem(y, f))),
        4 => Statement::universal(mem(x.clone(), f), mem(app(f, x), f)),
        5 => {
            let inner = Term::apply(x.clone(), y.clone());
            let last = match step5 {
                Step5Reading::Diagram => Statement::non_membership(inner, &d[4]),
                Step5Reading::Prose => mem(inner, &d[4]),
            };
            Statement::universal(
                Statement::non_membership(x, f),
                Statement::existential(mem(y.clone(), xi), Statement::universal(mem(y, &d[3]), last)),
            )
        }
        6 => Statement::universal(mem(x.clone(), f), sub_conclusion.substitute_letter_with_term(eta, &app(f, x)).ok()?),
        _ => return None,
    })
}

fn reflexive_letter(s: &Statement) -> Option<&LetterId> {
    s.reflexive_equality_letter()
}

pub fn check_choice(tree: &ProofTree, n: NodeId, step5: Step5Reading) -> Vec<Violation> {
    report(tree, n, RuleName::Choice, choice(tree, n, step5))
}

fn choice(tree: &ProofTree, n: NodeId, step5: Step5Reading) -> Verdict {
    let Justification::Choice { of, step, new, d } = &tree.get(n).expect("node").justification else { unreachable!() };
    if !(1..=6).contains(step) {
        return fail("choice.bad_step", format!("step {step} does not exist"));
    }
    let base = step_one_parent(tree, n, "choice")?;
    let s = ref_statement(tree, *of, base, "of", "choice")?;
    let shape = || fail("choice.bad_of", format!("`{s}` is not of the form `< xi = xi > [ eta = eta ] C`"));
    let Statement::Quantified { kind: QuantKind::Universal, hypothesis, conclusion } = s else { return shape() };
    let Statement::Quantified { kind: QuantKind::Existential, hypothesis: sub_h, conclusion: sub_c } = &**conclusion else {
        return shape();
    };
    let (Some(xi), Some(eta)) = (reflexive_letter(hypothesis), reflexive_letter(sub_h)) else { return shape() };
    if xi == eta {
        return shape();
    }
    let ctx = context(tree, base);
    for l in [xi, eta] {
        if ctx.flavor(l) != LetterFlavor::Indefinite {
            return fail("choice.bad_of", format!("`{l}` is {}", ctx.flavor(l)));
        }
    }
    if ctx.flavor(new) != LetterFlavor::Inactive {
        return fail("choice.new_not_inactive", format!("`{new}` is {}", ctx.flavor(new)));
    }
    for l in d {
        if ctx.flavor(l) != LetterFlavor::Definite {
            return fail("choice.letter_not_definite", format!("`{l}` is {}", ctx.flavor(l)));
        }
    }
    let Some(expected) = choice_schema(*step, new, xi, eta, sub_c, d, step5) else {
        return fail("choice.bad_of", format!("`{eta}` cannot be replaced in `{sub_c}`"));
    };
    expect_equal(own_statement(tree, n, "choice")?, &expected, "choice")
}

pub fn check_fn_identity(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::FnIdentity, fn_identity(tree, n))
}

fn fn_identity(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::FnIdentity { of } = &tree.get(n).expect("node").justification else { unreachable!() };
    require_successor(tree, n, "fn_identity")?;
    let p = parent_of(tree, n, "fn_identity")?;
    let s = ref_statement(tree, *of, p, "of", "fn_identity")?;
    let shape = || fail("fn_identity.bad_of", format!("`{s}` is not of the form `< p(xi) != q(xi) > [ p(xi) = p ] q(xi) = q`"));
    let Statement::Quantified { kind: QuantKind::Universal, hypothesis, .. } = s else { return shape() };
    let Statement::Relation { left, sign: Sign::Neq, .. } = &**hypothesis else { return shape() };
    let Term::Apply(pf, x) = left else { return shape() };
    let (Some(pl), Some(xi)) = (pf.as_letter(), x.as_letter()) else { return shape() };
    let Statement::Relation { right: Term::Apply(qf, _), .. } = &**hypothesis else { return shape() };
    let Some(ql) = qf.as_letter() else { return shape() };
    let expected_of = Statement::universal(
        Statement::relation(app(pl, letter(xi)), Sign::Neq, app(ql, letter(xi))),
        Statement::existential(Statement::non_membership(letter(xi), pl), Statement::non_membership(letter(xi), ql)),
    );
    if *s != expected_of {
        return shape();
    }
    let ctx = context(tree, p);
    for (l, want) in [(pl, LetterFlavor::Definite), (ql, LetterFlavor::Definite), (xi, LetterFlavor::Indefinite)] {
        if ctx.flavor(l) != want {
            return fail("fn_identity.flavor", format!("`{l}` is {}, expected {want}", ctx.flavor(l)));
        }
    }
    let expected = Statement::relation(letter(pl), Sign::Eq, letter(ql));
    expect_equal(own_statement(tree, n, "fn_identity")?, &expected, "fn_identity")
}

/// The statement of one restriction step.
pub(crate) fn restrict_schema(step: u8, f: &LetterId, g: &LetterId, head: &LetterId, xi: &LetterId) -> Option<Statement> {
    let x = letter(xi);
    let mem = |w: &LetterId| Statement::membership(x.clone(), w);
    let abbr = Statement::abbreviation(head.clone(), vec![x.clone()]);
    Some(match step {
        1 => Statement::relation(letter(f), Sign::Eq, letter(f)),
        2 => Statement::universal(mem(f), Statement::relation(app(f, x.clone()), Sign::Eq, app(g, x.clone()))),
        3 => Statement::universal(mem(g), Statement::universal(abbr, mem(f))),
        4 => Statement::universal(mem(f), Statement::existential(mem(g), abbr)),
        _ => return None,
    })
}

pub fn check_restrict(tree: &ProofTree, n: NodeId) -> Vec<Violation> {
    report(tree, n, RuleName::Restrict, restrict(tree, n))
}

fn restrict(tree: &ProofTree, n: NodeId) -> Verdict {
    let Justification::Restrict { prop, g, new, step } = &tree.get(n).expect("node").justification else {
        unreachable!()
    };
    if !(1..=4).contains(step) {
        return fail("restrict.bad_step", format!("step {step} does not exist"));
    }
    let base = step_one_parent(tree, n, "restrict")?;
    let property = ref_property(tree, *prop, base, "prop", "restrict")?;
    let [arg] = property.args.as_slice() else {
        return fail("restrict.bad_abbreviation", format!("`{}` does not consist of two letters", property.abbreviation()));
    };
    let Some(xi) = arg.as_letter() else {
        return fail("restrict.bad_abbreviation", format!("`{}` does not consist of two letters", property.abbreviation()));
    };
    let ctx = context(tree, base);
    for (l, want) in [(xi, LetterFlavor::Indefinite), (g, LetterFlavor::Definite), (new, LetterFlavor::Inactive)] {
        if ctx.flavor(l) != want {
            return fail("restrict.flavor", format!("`{l}` is {}, expected {want}", ctx.flavor(l)));
        }
    }
    let expected = restrict_schema(*step, new, g, &property.head, xi).expect("step in range");
    expect_equal(own_statement(tree, n, "restrict")?, &expected, "restrict")
}
