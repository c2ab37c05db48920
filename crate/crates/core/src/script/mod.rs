//! The `.pft` proof-script format.
//!
//! One node per line, parents named explicitly:
//!
//! ```text
//! tree sample
//! root n0: a = a ; rule=root
//! succ n1 of n0: b != a ; rule=elem_add
//! pairL n3 of n2: a != b ; rule=branch
//! assume h1 of n0: < xi = xi > xi = xi
//! ```
//!
//! Lines starting with `#` are comments. The pair partner of a `pairL` line
//! is the `pairR` line with the same parent; both are attached together.

mod render;

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::rules::Justification;
use crate::syntax::{parse_content, parse_term, Content, LetterId, ParseError, Statement, Term};
use crate::tree::{LinkKind, NodeId, ProofTree, TreeError};

pub use render::{export_dot, render_text};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScriptError {
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: unknown parent `{id}`")]
    UnknownParent { line: usize, id: String },
    #[error("line {line}: `{key}` refers to unknown node `{id}`")]
    UnknownReference { line: usize, key: String, id: String },
    #[error("line {line}: unknown rule `{rule}`")]
    UnknownRule { line: usize, rule: String },
    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: missing key `{key}`")]
    MissingKey { line: usize, key: String },
    #[error("line {line}: bad value `{value}` for `{key}`")]
    BadValue { line: usize, key: String, value: String },
    #[error("line {line}, column {column}: {source}")]
    MalformedStatement { line: usize, column: usize, source: ParseError },
    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("line {line}: {source}")]
    StructureError { line: usize, source: TreeError },
    #[error("the script declares no nodes")]
    EmptyTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineKind {
    Root,
    Succ,
    PairL,
    PairR,
    Assume,
}

impl LineKind {
    fn parse(s: &str) -> Option<LineKind> {
        Some(match s {
            "root" => LineKind::Root,
            "succ" => LineKind::Succ,
            "pairL" => LineKind::PairL,
            "pairR" => LineKind::PairR,
            "assume" => LineKind::Assume,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LineKind::Root => "root",
            LineKind::Succ => "succ",
            LineKind::PairL => "pairL",
            LineKind::PairR => "pairR",
            LineKind::Assume => "assume",
        }
    }
}

/// One node declaration, syntactically parsed but not yet bound.
#[derive(Clone, Debug)]
pub struct ScriptLine {
    /// 1-based line number in the source.
    pub line: usize,
    pub kind: LineKind,
    pub id: String,
    pub parent: Option<String>,
    pub content: Content,
    pub rule: Option<String>,
    pub params: Vec<(String, String)>,
    /// Comment lines directly above this one.
    pub comments: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct ScriptDocument {
    pub name: Option<String>,
    pub lines: Vec<ScriptLine>,
    /// Comments after the last node line.
    pub trailing_comments: Vec<String>,
}

/// A parsed script: the document and the tree it builds.
#[derive(Clone, Debug)]
pub struct Script {
    pub document: ScriptDocument,
    pub tree: ProofTree,
}

fn malformed<T>(line: usize, message: impl Into<String>) -> Result<T, ScriptError> {
    Err(ScriptError::MalformedLine { line, message: message.into() })
}

fn parse_line(lineno: usize, raw: &str) -> Result<ScriptLine, ScriptError> {
    let Some(colon) = raw.find(':') else {
        return malformed(lineno, "expected `<kind> <id> [of <parent>]: <content>`");
    };
    let head: Vec<&str> = raw[..colon].split_whitespace().collect();
    let (kind, id, parent) = match head.as_slice() {
        [k, id] => (*k, *id, None),
        [k, id, "of", p] => (*k, *id, Some(p.to_string())),
        _ => return malformed(lineno, format!("malformed node header `{}`", raw[..colon].trim())),
    };
    let Some(kind) = LineKind::parse(kind) else {
        return malformed(lineno, format!("unknown line kind `{kind}`"));
    };
    let rest = &raw[colon + 1..];
    let (content_text, just_text) = match rest.find(';') {
        Some(i) => (&rest[..i], Some(&rest[i + 1..])),
        None => (rest, None),
    };
    let content = parse_content(content_text).map_err(|source| {
        let offset = raw[..colon + 1].chars().count();
        ScriptError::MalformedStatement { line: lineno, column: offset + source.column, source }
    })?;
    let mut rule = None;
    let mut params: Vec<(String, String)> = Vec::new();
    for tok in just_text.unwrap_or("").split_whitespace() {
        let Some((k, v)) = tok.split_once('=') else {
            return malformed(lineno, format!("expected `key=value`, found `{tok}`"));
        };
        if k == "rule" {
            if rule.replace(v.to_string()).is_some() {
                return malformed(lineno, "`rule` given twice");
            }
        } else {
            if params.iter().any(|(pk, _)| pk == k) {
                return malformed(lineno, format!("`{k}` given twice"));
            }
            params.push((k.to_string(), v.to_string()));
        }
    }
    if just_text.is_some() && rule.is_none() {
        return Err(ScriptError::MissingKey { line: lineno, key: "rule".into() });
    }
    Ok(ScriptLine { line: lineno, kind, id: id.to_string(), parent, content, rule, params, comments: Vec::new() })
}

/// Parses the line structure of a script without building a tree.
pub fn parse_document(text: &str) -> Result<ScriptDocument, ScriptError> {
    let mut doc = ScriptDocument::default();
    let mut pending = Vec::new();
    let mut seen_node = false;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let t = raw.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with('#') {
            pending.push(t.to_string());
            continue;
        }
        if let Some(name) = t.strip_prefix("tree ").or_else(|| (t == "tree").then_some("")) {
            if seen_node || doc.name.is_some() {
                return malformed(lineno, "the `tree` header must come first");
            }
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return malformed(lineno, "the tree name is a single word");
            }
            doc.name = Some(name.to_string());
            continue;
        }
        seen_node = true;
        let mut line = parse_line(lineno, t)?;
        line.comments = std::mem::take(&mut pending);
        doc.lines.push(line);
    }
    doc.trailing_comments = pending;
    Ok(doc)
}

struct Binder<'a> {
    line: &'a ScriptLine,
    ids: &'a HashMap<String, NodeId>,
    used: HashSet<&'a str>,
}

impl<'a> Binder<'a> {
    fn raw(&mut self, key: &'static str) -> Option<&'a str> {
        let v = self.line.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str());
        if v.is_some() {
            self.used.insert(key);
        }
        v
    }

    fn missing(&self, key: &str) -> ScriptError {
        ScriptError::MissingKey { line: self.line.line, key: key.to_string() }
    }

    fn bad(&self, key: &str, value: &str) -> ScriptError {
        ScriptError::BadValue { line: self.line.line, key: key.to_string(), value: value.to_string() }
    }

    fn opt_node(&mut self, key: &'static str) -> Result<Option<NodeId>, ScriptError> {
        let Some(v) = self.raw(key) else { return Ok(None) };
        match self.ids.get(v) {
            Some(&id) => Ok(Some(id)),
            None => Err(ScriptError::UnknownReference { line: self.line.line, key: key.into(), id: v.into() }),
        }
    }

    fn node(&mut self, key: &'static str) -> Result<NodeId, ScriptError> {
        self.opt_node(key)?.ok_or_else(|| self.missing(key))
    }

    fn opt_term(&mut self, key: &'static str) -> Result<Option<Term>, ScriptError> {
        let Some(v) = self.raw(key) else { return Ok(None) };
        parse_term(v).map(Some).map_err(|_| self.bad(key, v))
    }

    fn term(&mut self, key: &'static str) -> Result<Term, ScriptError> {
        self.opt_term(key)?.ok_or_else(|| self.missing(key))
    }

    fn opt_letter(&mut self, key: &'static str) -> Result<Option<LetterId>, ScriptError> {
        let Some(v) = self.raw(key) else { return Ok(None) };
        match parse_term(v) {
            Ok(Term::Letter(l)) => Ok(Some(l)),
            _ => Err(self.bad(key, v)),
        }
    }

    fn letter(&mut self, key: &'static str) -> Result<LetterId, ScriptError> {
        self.opt_letter(key)?.ok_or_else(|| self.missing(key))
    }

    fn number<T: std::str::FromStr>(&mut self, key: &'static str) -> Result<T, ScriptError> {
        let v = self.raw(key).ok_or_else(|| self.missing(key))?;
        v.parse().map_err(|_| self.bad(key, v))
    }

    fn finish(&self) -> Result<(), ScriptError> {
        match self.line.params.iter().find(|(k, _)| !self.used.contains(k.as_str())) {
            Some((k, _)) => Err(ScriptError::UnknownKey { line: self.line.line, key: k.clone() }),
            None => Ok(()),
        }
    }
}

fn bind(line: &ScriptLine, ids: &HashMap<String, NodeId>) -> Result<Justification, ScriptError> {
    let rule = match (line.kind, &line.rule) {
        (LineKind::Assume, None) => return Ok(Justification::Assume),
        (LineKind::Assume, Some(_)) => return malformed(line.line, "assume lines carry no justification"),
        (_, None) => return Err(ScriptError::MissingKey { line: line.line, key: "rule".into() }),
        (_, Some(r)) => r.as_str(),
    };
    let mut b = Binder { line, ids, used: HashSet::new() };
    let j = match rule {
        "root" => Justification::RootAxiom,
        "assume" => Justification::Assume,
        "elem_add" => Justification::ElemAdd { term: b.opt_term("term")? },
        "elem_subst" => Justification::ElemSubst {
            eq: b.node("eq")?,
            src: b.node("src")?,
            from: b.letter("from")?,
            to: b.letter("to")?,
        },
        "fn_subst" => Justification::FnSubst {
            eq: b.node("eq")?,
            src: b.node("src")?,
            letter: b.letter("letter")?,
            term: b.term("term")?,
        },
        "branch" => Justification::Branch,
        "join" => Justification::Join { left: b.node("left")?, right: b.node("right")? },
        "explode" => Justification::Explode { d1: b.node("d1")?, d2: b.node("d2")? },
        "definition" => Justification::Definition { of: b.node("of")?, step: b.number("step")?, new: b.opt_letter("new")? },
        "deduction" => Justification::Deduction {
            of: b.node("of")?,
            witness: b.opt_node("witness")?,
            let_: b.opt_letter("let")?,
        },
        "property_intro" => Justification::PropertyIntro {
            of: b.opt_node("of")?,
            letter: b.opt_letter("letter")?,
            term: b.opt_term("term")?,
        },
        "abbrev_subst" => Justification::AbbrevSubst { stmt: b.node("stmt")?, prop: b.node("prop")?, at: b.number("at")? },
        "choice" => Justification::Choice {
            of: b.node("of")?,
            step: b.number("step")?,
            new: b.letter("new")?,
            d: [b.letter("d1")?, b.letter("d2")?, b.letter("d3")?, b.letter("d4")?, b.letter("d5")?],
        },
        "fn_identity" => Justification::FnIdentity { of: b.node("of")? },
        "restrict" => Justification::Restrict {
            prop: b.node("prop")?,
            g: b.letter("g")?,
            new: b.letter("new")?,
            step: b.number("step")?,
        },
        other => return Err(ScriptError::UnknownRule { line: line.line, rule: other.to_string() }),
    };
    b.finish()?;
    Ok(j)
}

fn statement_of(line: &ScriptLine) -> Result<Statement, ScriptError> {
    match &line.content {
        Content::Statement(s) => Ok(s.clone()),
        Content::Property(_) => Err(ScriptError::StructureError { line: line.line, source: TreeError::PropertyInPair }),
    }
}

/// Builds the tree declared by a document.
pub fn build_tree(doc: &ScriptDocument) -> Result<ProofTree, ScriptError> {
    let mut tree = ProofTree::new();
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut declared: HashSet<&str> = HashSet::new();
    let mut consumed = vec![false; doc.lines.len()];
    for (i, line) in doc.lines.iter().enumerate() {
        if !declared.insert(&line.id) {
            return Err(ScriptError::DuplicateId { line: line.line, id: line.id.clone() });
        }
        if line.kind == LineKind::PairR {
            if !consumed[i] {
                return malformed(line.line, "pairR without a preceding pairL of the same parent");
            }
            continue;
        }
        let structure = |source| ScriptError::StructureError { line: line.line, source };
        let parent = match &line.parent {
            None => None,
            Some(p) => match ids.get(p) {
                Some(&id) => Some(id),
                None => return Err(ScriptError::UnknownParent { line: line.line, id: p.clone() }),
            },
        };
        let j = bind(line, &ids)?;
        match (line.kind, parent) {
            (LineKind::Root | LineKind::Assume, None) => {
                let id = tree.set_root(line.content.clone(), j).map_err(structure)?;
                tree.set_label(id, &line.id).map_err(structure)?;
                ids.insert(line.id.clone(), id);
            }
            (LineKind::Root, Some(_)) => return malformed(line.line, "a root line has no parent"),
            (LineKind::Succ | LineKind::PairL, None) => return malformed(line.line, "missing `of <parent>`"),
            (LineKind::Succ | LineKind::Assume, Some(p)) => {
                let id = tree.attach_successor(p, line.content.clone(), j).map_err(structure)?;
                tree.set_label(id, &line.id).map_err(structure)?;
                ids.insert(line.id.clone(), id);
            }
            (LineKind::PairL, Some(p)) => {
                let Some(k) = (i + 1..doc.lines.len())
                    .find(|&k| doc.lines[k].kind == LineKind::PairR && doc.lines[k].parent == line.parent)
                else {
                    return malformed(line.line, "pairL without a matching pairR");
                };
                let right = &doc.lines[k];
                if ids.contains_key(&right.id) || right.id == line.id {
                    return Err(ScriptError::DuplicateId { line: right.line, id: right.id.clone() });
                }
                let rj = bind(right, &ids)?;
                let (l, r) = tree
                    .attach_pair(p, (statement_of(line)?, j), (statement_of(right)?, rj))
                    .map_err(structure)?;
                tree.set_label(l, &line.id).map_err(structure)?;
                tree.set_label(r, &right.id).map_err(structure)?;
                ids.insert(line.id.clone(), l);
                ids.insert(right.id.clone(), r);
                consumed[k] = true;
            }
            (LineKind::PairR, _) => unreachable!("handled above"),
        }
    }
    if tree.is_empty() {
        return Err(ScriptError::EmptyTree);
    }
    Ok(tree)
}

pub fn parse_script(text: &str) -> Result<Script, ScriptError> {
    let document = parse_document(text)?;
    let tree = build_tree(&document)?;
    Ok(Script { document, tree })
}

/// Unique script ids for every node: explicit labels first, then `n<index>`.
pub fn node_ids(tree: &ProofTree) -> HashMap<NodeId, String> {
    let mut out = HashMap::new();
    let mut taken: HashSet<String> = tree.iter().filter_map(|n| n.label.clone()).collect();
    for n in tree.iter() {
        let id = match &n.label {
            Some(l) => l.clone(),
            None => {
                let mut candidate = format!("n{}", n.id.index());
                let mut k = 0;
                while taken.contains(&candidate) {
                    k += 1;
                    candidate = format!("n{}_{k}", n.id.index());
                }
                taken.insert(candidate.clone());
                candidate
            }
        };
        out.insert(n.id, id);
    }
    out
}

/// `(key, value)` pairs of a justification in canonical order.
pub fn justification_params(j: &Justification, ids: &HashMap<NodeId, String>) -> Vec<(&'static str, String)> {
    let node = |n: &NodeId| ids.get(n).cloned().unwrap_or_else(|| format!("n{}", n.index()));
    let mut out = Vec::new();
    match j {
        Justification::RootAxiom | Justification::Assume | Justification::Branch => {}
        Justification::ElemAdd { term } => out.extend(term.as_ref().map(|t| ("term", t.compact()))),
        Justification::ElemSubst { eq, src, from, to } => {
            out.extend([("eq", node(eq)), ("src", node(src)), ("from", from.to_string()), ("to", to.to_string())])
        }
        Justification::FnSubst { eq, src, letter, term } => out.extend([
            ("eq", node(eq)),
            ("src", node(src)),
            ("letter", letter.to_string()),
            ("term", term.compact()),
        ]),
        Justification::Join { left, right } => out.extend([("left", node(left)), ("right", node(right))]),
        Justification::Explode { d1, d2 } => out.extend([("d1", node(d1)), ("d2", node(d2))]),
        Justification::Definition { of, step, new } => {
            out.extend([("of", node(of)), ("step", step.to_string())]);
            out.extend(new.as_ref().map(|l| ("new", l.to_string())));
        }
        Justification::Deduction { of, witness, let_ } => {
            out.push(("of", node(of)));
            out.extend(witness.as_ref().map(|w| ("witness", node(w))));
            out.extend(let_.as_ref().map(|l| ("let", l.to_string())));
        }
        Justification::PropertyIntro { of, letter, term } => {
            out.extend(of.as_ref().map(|o| ("of", node(o))));
            out.extend(letter.as_ref().map(|l| ("letter", l.to_string())));
            out.extend(term.as_ref().map(|t| ("term", t.compact())));
        }
        Justification::AbbrevSubst { stmt, prop, at } => {
            out.extend([("stmt", node(stmt)), ("prop", node(prop)), ("at", at.to_string())])
        }
        Justification::Choice { of, step, new, d } => {
            out.extend([("of", node(of)), ("step", step.to_string()), ("new", new.to_string())]);
            for (k, l) in ["d1", "d2", "d3", "d4", "d5"].into_iter().zip(d) {
                out.push((k, l.to_string()));
            }
        }
        Justification::FnIdentity { of } => out.push(("of", node(of))),
        Justification::Restrict { prop, g, new, step } => out.extend([
            ("prop", node(prop)),
            ("g", g.to_string()),
            ("new", new.to_string()),
            ("step", step.to_string()),
        ]),
    }
    out
}

fn node_line(tree: &ProofTree, n: NodeId, ids: &HashMap<NodeId, String>) -> String {
    let node = tree.get(n).expect("live node");
    let assume = node.justification == Justification::Assume;
    let kind = match node.link {
        LinkKind::Root | LinkKind::Successor if assume => LineKind::Assume,
        LinkKind::Root => LineKind::Root,
        LinkKind::Successor => LineKind::Succ,
        LinkKind::PairLeft => LineKind::PairL,
        LinkKind::PairRight => LineKind::PairR,
    };
    let mut s = format!("{} {}", kind.as_str(), ids[&n]);
    if let Some(p) = node.parent {
        let _ = write!(s, " of {}", ids[&p]);
    }
    let _ = write!(s, ": {}", node.content);
    if kind != LineKind::Assume {
        let _ = write!(s, " ; rule={}", node.justification.rule());
        for (k, v) in justification_params(&node.justification, ids) {
            let _ = write!(s, " {k}={v}");
        }
    }
    s
}

/// Canonical text of a whole tree, in pre-order, without header or comments.
pub fn serialize_script(tree: &ProofTree) -> Result<String, ScriptError> {
    serialize_with(tree, None, &HashMap::new(), &[])
}

/// Canonical lines for `nodes` only, in pre-order. Appending the result to
/// the script of the rest of the tree gives a valid script.
pub fn serialize_fragment(tree: &ProofTree, nodes: &[NodeId]) -> String {
    let ids = node_ids(tree);
    let wanted: HashSet<NodeId> = nodes.iter().copied().collect();
    let mut out = String::new();
    for n in tree.preorder() {
        if wanted.contains(&n) {
            out.push_str(&node_line(tree, n, &ids));
            out.push('\n');
        }
    }
    out
}

fn serialize_with(
    tree: &ProofTree,
    name: Option<&str>,
    comments: &HashMap<String, Vec<String>>,
    trailing: &[String],
) -> Result<String, ScriptError> {
    if tree.is_empty() {
        return Err(ScriptError::EmptyTree);
    }
    let ids = node_ids(tree);
    let mut out = String::new();
    if let Some(name) = name {
        let _ = writeln!(out, "tree {name}");
    }
    for n in tree.preorder() {
        for c in comments.get(&ids[&n]).into_iter().flatten() {
            let _ = writeln!(out, "{c}");
        }
        let _ = writeln!(out, "{}", node_line(tree, n, &ids));
    }
    for c in trailing {
        let _ = writeln!(out, "{c}");
    }
    Ok(out)
}

impl Script {
    /// Canonical text including the header and comments.
    pub fn to_text(&self) -> Result<String, ScriptError> {
        let comments =
            self.document.lines.iter().map(|l| (l.id.clone(), l.comments.clone())).collect::<HashMap<_, _>>();
        serialize_with(&self.tree, self.document.name.as_deref(), &comments, &self.document.trailing_comments)
    }
}

/// Canonical formatting: canonical spacing and key order, nodes in
/// pre-order, comments kept above the node they preceded.
pub fn format_script(text: &str) -> Result<String, ScriptError> {
    parse_script(text)?.to_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::{check_tree, CheckOptions};

    const SAMPLE: &str = "\
tree sample
root n0: a = a ; rule=root
succ n1 of n0: b != a ; rule=elem_add
succ n2 of n1: b = b ; rule=elem_add
pairL n3 of n2: a != b ; rule=branch
pairR n4 of n2: a = b ; rule=branch
succ n5 of n4: b != b ; rule=elem_subst eq=n4 src=n1 from=a to=b
succ n6 of n5: a != b ; rule=explode d1=n2 d2=n5
succ n7 of n2: a != b ; rule=join left=n3 right=n4
succ n8 of n7: c = b ; rule=elem_add
pairL n9 of n8: b = c ; rule=branch
pairR n10 of n8: b != c ; rule=branch
";

    #[test]
    fn parses_and_checks_sample() {
        let s = parse_script(SAMPLE).unwrap();
        assert_eq!(s.tree.len(), 11);
        assert_eq!(s.document.name.as_deref(), Some("sample"));
        let report = check_tree(&s.tree, &CheckOptions::default());
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let s = parse_script(SAMPLE).unwrap();
        assert_eq!(s.to_text().unwrap(), SAMPLE);
        let body = serialize_script(&s.tree).unwrap();
        assert_eq!(body, SAMPLE.strip_prefix("tree sample\n").unwrap());
    }

    #[test]
    fn format_is_canonical_and_idempotent() {
        let messy = "# note\nroot   n0 :a=a;rule=root\n\n   succ n1 of n0:b!=a ; rule=elem_add\n# end\n";
        let once = format_script(messy).unwrap();
        assert_eq!(once, "# note\nroot n0: a = a ; rule=root\nsucc n1 of n0: b != a ; rule=elem_add\n# end\n");
        assert_eq!(format_script(&once).unwrap(), once);
    }

    #[test]
    fn successor_line() {
        let s = parse_script("root n1: a = a ; rule=root\nsucc n2 of n1: b != a ; rule=elem_add\n").unwrap();
        let n2 = s.tree.find_label("n2").unwrap();
        assert_eq!(s.tree.get(n2).unwrap().link, LinkKind::Successor);
    }

    #[test]
    fn errors() {
        let dup = "root n0: a = a ; rule=root\nsucc n0 of n0: a = a ; rule=elem_add\n";
        assert!(matches!(parse_script(dup), Err(ScriptError::DuplicateId { line: 2, .. })));
        let parent = "root n0: a = a ; rule=root\nsucc n1 of zz: a = a ; rule=elem_add\n";
        assert!(matches!(parse_script(parent), Err(ScriptError::UnknownParent { .. })));
        let rule = "root n0: a = a ; rule=nonsense\n";
        assert!(matches!(parse_script(rule), Err(ScriptError::UnknownRule { .. })));
        let key = "root n0: a = a ; rule=root colour=red\n";
        assert!(matches!(parse_script(key), Err(ScriptError::UnknownKey { .. })));
        let missing = "root n0: a = a ; rule=root\nsucc n1 of n0: a = a ; rule=join left=n0\n";
        assert!(matches!(parse_script(missing), Err(ScriptError::MissingKey { .. })));
        let bad = "root n0: a = a ; rule=root\nsucc n1 of n0: a = = a ; rule=elem_add\n";
        match parse_script(bad) {
            Err(ScriptError::MalformedStatement { line: 2, column, .. }) => assert_eq!(column, 20),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_script("# nothing\n"), Err(ScriptError::EmptyTree)));
        let two_succ = "root n0: a = a ; rule=root\nsucc n1 of n0: a = a ; rule=elem_add\nsucc n2 of n0: a = a ; rule=elem_add\n";
        assert!(matches!(parse_script(two_succ), Err(ScriptError::StructureError { line: 3, .. })));
        assert!(serialize_script(&ProofTree::new()).is_err());
    }

    #[test]
    fn unlabeled_nodes_get_unique_ids() {
        let (mut t, root) = ProofTree::with_root(crate::syntax::parse_statement("a = a").unwrap(), Justification::RootAxiom);
        t.set_label(root, "n1").unwrap();
        let c = t.attach_successor(root, crate::syntax::parse_statement("b != a").unwrap(), Justification::ElemAdd { term: None }).unwrap();
        let text = serialize_script(&t).unwrap();
        let back = parse_script(&text).unwrap();
        assert_eq!(back.tree.len(), 2);
        assert_ne!(node_ids(&t)[&c], "n1");
    }
}
