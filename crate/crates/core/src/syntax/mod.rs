//! Statement language: letters, functional terms, statements and properties.
//!
//! Everything here is an immutable value. Rendering is one-line canonical
//! text with a single space between tokens, and `parse_statement` inverts it.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

pub use parse::{parse_content, parse_property, parse_statement, parse_term, ParseError, ParseErrorKind};

/// A letter. Two letters are the same iff their names are identical.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(Arc<str>);

impl LetterId {
    pub fn new(name: impl AsRef<str>) -> Self {
        LetterId(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Names that start with `_` are reserved for generated letters.
    pub fn is_reserved(&self) -> bool {
        self.0.starts_with('_')
    }
}

impl fmt::Debug for LetterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for LetterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for LetterId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl From<&str> for LetterId {
    fn from(s: &str) -> Self {
        LetterId::new(s)
    }
}

/// Relational sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Eq,
    Neq,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Eq => Sign::Neq,
            Sign::Neq => Sign::Eq,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Eq => "=",
            Sign::Neq => "!=",
        }
    }
}

/// Quantifier kind. Existential renders with `[ ]`, universal with `< >`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuantKind {
    Existential,
    Universal,
}

impl QuantKind {
    pub fn flip(self) -> QuantKind {
        match self {
            QuantKind::Existential => QuantKind::Universal,
            QuantKind::Universal => QuantKind::Existential,
        }
    }

    fn brackets(self) -> (&'static str, &'static str) {
        match self {
            QuantKind::Existential => ("[", "]"),
            QuantKind::Universal => ("<", ">"),
        }
    }
}

/// A functional term: a letter, or `function ( argument )`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Letter(LetterId),
    Apply(Box<Term>, Box<Term>),
}

impl Term {
    pub fn letter(name: impl AsRef<str>) -> Term {
        Term::Letter(LetterId::new(name))
    }

    pub fn apply(function: Term, argument: Term) -> Term {
        Term::Apply(Box::new(function), Box::new(argument))
    }

    pub fn as_letter(&self) -> Option<&LetterId> {
        match self {
            Term::Letter(l) => Some(l),
            Term::Apply(..) => None,
        }
    }

    pub fn is_functional(&self) -> bool {
        matches!(self, Term::Apply(..))
    }

    /// Nesting depth of functional brackets; a letter has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Term::Letter(_) => 0,
            Term::Apply(f, a) => 1 + f.depth().max(a.depth()),
        }
    }

    pub fn contains_letter(&self, l: &LetterId) -> bool {
        match self {
            Term::Letter(x) => x == l,
            Term::Apply(f, a) => f.contains_letter(l) || a.contains_letter(l),
        }
    }

    pub fn visit_letters<'a>(&'a self, f: &mut impl FnMut(&'a LetterId)) {
        match self {
            Term::Letter(l) => f(l),
            Term::Apply(func, arg) => {
                func.visit_letters(f);
                arg.visit_letters(f);
            }
        }
    }

    fn rename(&self, from: &LetterId, to: &LetterId) -> Term {
        match self {
            Term::Letter(l) if l == from => Term::Letter(to.clone()),
            Term::Letter(_) => self.clone(),
            Term::Apply(f, a) => Term::apply(f.rename(from, to), a.rename(from, to)),
        }
    }

    fn replace_letter(&self, letter: &LetterId, with: &Term) -> Term {
        match self {
            Term::Letter(l) if l == letter => with.clone(),
            Term::Letter(_) => self.clone(),
            Term::Apply(f, a) => Term::apply(f.replace_letter(letter, with), a.replace_letter(letter, with)),
        }
    }

    /// Replaces every subterm equal to `pattern` by `with`, outermost first.
    pub fn replace_subterm(&self, pattern: &Term, with: &Term) -> Term {
        if self == pattern {
            return with.clone();
        }
        match self {
            Term::Letter(_) => self.clone(),
            Term::Apply(f, a) => Term::apply(f.replace_subterm(pattern, with), a.replace_subterm(pattern, with)),
        }
    }

    fn write_tokens(&self, out: &mut Vec<String>) {
        match self {
            Term::Letter(l) => out.push(l.to_string()),
            Term::Apply(f, a) => {
                f.write_tokens(out);
                out.push("(".into());
                a.write_tokens(out);
                out.push(")".into());
            }
        }
    }

    /// Rendering without inner spaces, used for script parameter values.
    pub fn compact(&self) -> String {
        let mut toks = Vec::new();
        self.write_tokens(&mut toks);
        toks.concat()
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        self.write_tokens(&mut toks);
        f.write_str(&toks.join(" "))
    }
}

/// Which constituent of a quantified statement a path step enters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    Hypothesis,
    Conclusion,
}

/// Position of a constituent inside a statement; the empty path is the root.
pub type Path = Vec<Step>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Statement {
    Relation { left: Term, sign: Sign, right: Term },
    Quantified { kind: QuantKind, hypothesis: Box<Statement>, conclusion: Box<Statement> },
    Abbreviation { head: LetterId, args: Vec<Term> },
}

/// Kind flags reported by [`Statement::classify`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_relation: bool,
    pub is_elementary: bool,
    pub is_quantified: bool,
    pub is_functional: bool,
    pub is_reflexive: bool,
    pub is_abbreviation: bool,
}

/// Occurrence counts of letters, split by abbreviation-head and term positions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LetterCounts {
    pub heads: BTreeMap<LetterId, usize>,
    pub terms: BTreeMap<LetterId, usize>,
}

impl LetterCounts {
    pub fn total(&self, l: &LetterId) -> usize {
        self.heads.get(l).copied().unwrap_or(0) + self.terms.get(l).copied().unwrap_or(0)
    }

    /// Every distinct letter, heads and terms merged, in name order.
    pub fn all(&self) -> Vec<LetterId> {
        let mut v: Vec<LetterId> = self.heads.keys().chain(self.terms.keys()).cloned().collect();
        v.sort();
        v.dedup();
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SyntaxError {
    #[error("abbreviations have no structural dual")]
    NotStructurallyDualizable,
    #[error("letter `{0}` occurs only as an abbreviation head")]
    LetterIsAbbreviationHead(LetterId),
}

impl Statement {
    pub fn relation(left: Term, sign: Sign, right: Term) -> Statement {
        Statement::Relation { left, sign, right }
    }

    pub fn quantified(kind: QuantKind, hypothesis: Statement, conclusion: Statement) -> Statement {
        Statement::Quantified { kind, hypothesis: Box::new(hypothesis), conclusion: Box::new(conclusion) }
    }

    pub fn universal(hypothesis: Statement, conclusion: Statement) -> Statement {
        Statement::quantified(QuantKind::Universal, hypothesis, conclusion)
    }

    pub fn existential(hypothesis: Statement, conclusion: Statement) -> Statement {
        Statement::quantified(QuantKind::Existential, hypothesis, conclusion)
    }

    pub fn abbreviation(head: LetterId, args: Vec<Term>) -> Statement {
        Statement::Abbreviation { head, args }
    }

    /// `w ( x ) != w`: membership of `x` at `w`.
    pub fn membership(x: Term, w: &LetterId) -> Statement {
        let wt = Term::Letter(w.clone());
        Statement::relation(Term::apply(wt.clone(), x), Sign::Neq, wt)
    }

    /// `w ( x ) = w`: non-membership of `x` at `w`.
    pub fn non_membership(x: Term, w: &LetterId) -> Statement {
        let wt = Term::Letter(w.clone());
        Statement::relation(Term::apply(wt.clone(), x), Sign::Eq, wt)
    }

    pub fn is_quantified(&self) -> bool {
        matches!(self, Statement::Quantified { .. })
    }

    /// Relations and abbreviations count as unquantified.
    pub fn is_unquantified(&self) -> bool {
        !self.is_quantified()
    }

    pub fn is_elementary(&self) -> bool {
        matches!(self, Statement::Relation { left: Term::Letter(_), right: Term::Letter(_), .. })
    }

    pub fn is_reflexive(&self) -> bool {
        matches!(self, Statement::Relation { left, right, .. } if left == right)
    }

    /// A reflexive elementary equality `x = x`; returns the letter.
    pub fn reflexive_equality_letter(&self) -> Option<&LetterId> {
        match self {
            Statement::Relation { left: Term::Letter(a), sign: Sign::Eq, right: Term::Letter(b) } if a == b => Some(a),
            _ => None,
        }
    }

    pub fn is_functional(&self) -> bool {
        match self {
            Statement::Relation { left, right, .. } => left.is_functional() || right.is_functional(),
            Statement::Quantified { hypothesis, conclusion, .. } => hypothesis.is_functional() || conclusion.is_functional(),
            Statement::Abbreviation { args, .. } => args.iter().any(Term::is_functional),
        }
    }

    pub fn classify(&self) -> Classification {
        let is_relation = matches!(self, Statement::Relation { .. });
        Classification {
            is_relation,
            is_elementary: self.is_elementary(),
            is_quantified: self.is_quantified(),
            is_functional: self.is_functional(),
            is_reflexive: self.is_reflexive(),
            is_abbreviation: matches!(self, Statement::Abbreviation { .. }),
        }
    }

    /// Number of opening quantifier brackets.
    pub fn complexity(&self) -> usize {
        match self {
            Statement::Quantified { hypothesis, conclusion, .. } => 1 + hypothesis.complexity() + conclusion.complexity(),
            _ => 0,
        }
    }

    pub fn hypothesis(&self) -> Option<&Statement> {
        match self {
            Statement::Quantified { hypothesis, .. } => Some(hypothesis),
            _ => None,
        }
    }

    pub fn conclusion(&self) -> Option<&Statement> {
        match self {
            Statement::Quantified { conclusion, .. } => Some(conclusion),
            _ => None,
        }
    }

    pub fn kind(&self) -> Option<QuantKind> {
        match self {
            Statement::Quantified { kind, .. } => Some(*kind),
            _ => None,
        }
    }

    /// Flips the relational sign of relations and the kind of every
    /// quantifier along the conclusion spine. Hypotheses are kept as-is.
    pub fn dual_structural(&self) -> Result<Statement, SyntaxError> {
        match self {
            Statement::Relation { left, sign, right } => Ok(Statement::relation(left.clone(), sign.flip(), right.clone())),
            Statement::Quantified { kind, hypothesis, conclusion } => {
                Ok(Statement::quantified(kind.flip(), (**hypothesis).clone(), conclusion.dual_structural()?))
            }
            Statement::Abbreviation { .. } => Err(SyntaxError::NotStructurallyDualizable),
        }
    }

    pub fn contains_letter(&self, l: &LetterId) -> bool {
        let mut found = false;
        self.visit_letters(&mut |x, _| found |= x == l);
        found
    }

    /// Calls `f(letter, is_head)` for each letter occurrence, left to right.
    pub fn visit_letters<'a>(&'a self, f: &mut impl FnMut(&'a LetterId, bool)) {
        match self {
            Statement::Relation { left, right, .. } => {
                left.visit_letters(&mut |l| f(l, false));
                right.visit_letters(&mut |l| f(l, false));
            }
            Statement::Quantified { hypothesis, conclusion, .. } => {
                hypothesis.visit_letters(f);
                conclusion.visit_letters(f);
            }
            Statement::Abbreviation { head, args } => {
                f(head, true);
                for a in args {
                    a.visit_letters(&mut |l| f(l, false));
                }
            }
        }
    }

    pub fn letters_of(&self) -> LetterCounts {
        let mut counts = LetterCounts::default();
        self.visit_letters(&mut |l, head| {
            let map = if head { &mut counts.heads } else { &mut counts.terms };
            *map.entry(l.clone()).or_insert(0) += 1;
        });
        counts
    }

    /// Distinct letters in order of first occurrence.
    pub fn letters(&self) -> Vec<LetterId> {
        let mut out: Vec<LetterId> = Vec::new();
        self.visit_letters(&mut |l, _| {
            if !out.contains(l) {
                out.push(l.clone());
            }
        });
        out
    }

    /// Replaces every occurrence of `from` by `to`, abbreviation heads included.
    pub fn substitute_letter(&self, from: &LetterId, to: &LetterId) -> Statement {
        match self {
            Statement::Relation { left, sign, right } => Statement::relation(left.rename(from, to), *sign, right.rename(from, to)),
            Statement::Quantified { kind, hypothesis, conclusion } => Statement::quantified(
                *kind,
                hypothesis.substitute_letter(from, to),
                conclusion.substitute_letter(from, to),
            ),
            Statement::Abbreviation { head, args } => Statement::abbreviation(
                if head == from { to.clone() } else { head.clone() },
                args.iter().map(|a| a.rename(from, to)).collect(),
            ),
        }
    }

    /// Replaces every term occurrence of `letter` by `t`. Heads are untouched.
    pub fn substitute_letter_with_term(&self, letter: &LetterId, t: &Term) -> Result<Statement, SyntaxError> {
        let counts = self.letters_of();
        if counts.heads.contains_key(letter) && !counts.terms.contains_key(letter) {
            return Err(SyntaxError::LetterIsAbbreviationHead(letter.clone()));
        }
        Ok(self.replace_term_letter(letter, t))
    }

    pub(crate) fn replace_term_letter(&self, letter: &LetterId, t: &Term) -> Statement {
        match self {
            Statement::Relation { left, sign, right } => {
                Statement::relation(left.replace_letter(letter, t), *sign, right.replace_letter(letter, t))
            }
            Statement::Quantified { kind, hypothesis, conclusion } => Statement::quantified(
                *kind,
                hypothesis.replace_term_letter(letter, t),
                conclusion.replace_term_letter(letter, t),
            ),
            Statement::Abbreviation { head, args } => {
                Statement::abbreviation(head.clone(), args.iter().map(|a| a.replace_letter(letter, t)).collect())
            }
        }
    }

    /// Replaces every occurrence of the subterm `pattern` by `with`.
    pub fn replace_subterm(&self, pattern: &Term, with: &Term) -> Statement {
        match self {
            Statement::Relation { left, sign, right } => {
                Statement::relation(left.replace_subterm(pattern, with), *sign, right.replace_subterm(pattern, with))
            }
            Statement::Quantified { kind, hypothesis, conclusion } => Statement::quantified(
                *kind,
                hypothesis.replace_subterm(pattern, with),
                conclusion.replace_subterm(pattern, with),
            ),
            Statement::Abbreviation { head, args } => {
                Statement::abbreviation(head.clone(), args.iter().map(|a| a.replace_subterm(pattern, with)).collect())
            }
        }
    }

    pub fn at_path(&self, path: &[Step]) -> Option<&Statement> {
        match path.split_first() {
            None => Some(self),
            Some((step, rest)) => match (self, step) {
                (Statement::Quantified { hypothesis, .. }, Step::Hypothesis) => hypothesis.at_path(rest),
                (Statement::Quantified { conclusion, .. }, Step::Conclusion) => conclusion.at_path(rest),
                _ => None,
            },
        }
    }

    /// Returns a copy with the constituent at `path` replaced.
    pub fn replace_at(&self, path: &[Step], with: &Statement) -> Option<Statement> {
        match path.split_first() {
            None => Some(with.clone()),
            Some((step, rest)) => match self {
                Statement::Quantified { kind, hypothesis, conclusion } => match step {
                    Step::Hypothesis => {
                        Some(Statement::quantified(*kind, hypothesis.replace_at(rest, with)?, (**conclusion).clone()))
                    }
                    Step::Conclusion => {
                        Some(Statement::quantified(*kind, (**hypothesis).clone(), conclusion.replace_at(rest, with)?))
                    }
                },
                _ => None,
            },
        }
    }

    /// Paths at which `needle` occurs as a grammatical constituent, in
    /// pre-order (node, hypothesis subtree, conclusion subtree).
    pub fn find_constituent_occurrences(&self, needle: &Statement) -> Vec<Path> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_occurrences(needle, &mut path, &mut out);
        out
    }

    fn collect_occurrences(&self, needle: &Statement, path: &mut Path, out: &mut Vec<Path>) {
        if self == needle {
            out.push(path.clone());
        }
        if let Statement::Quantified { hypothesis, conclusion, .. } = self {
            path.push(Step::Hypothesis);
            hypothesis.collect_occurrences(needle, path, out);
            path.pop();
            path.push(Step::Conclusion);
            conclusion.collect_occurrences(needle, path, out);
            path.pop();
        }
    }

    /// Every relation occurrence, as (path, relation) pairs in pre-order.
    pub fn relation_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn go(s: &Statement, path: &mut Path, out: &mut Vec<Path>) {
            match s {
                Statement::Relation { .. } => out.push(path.clone()),
                Statement::Quantified { hypothesis, conclusion, .. } => {
                    path.push(Step::Hypothesis);
                    go(hypothesis, path, out);
                    path.pop();
                    path.push(Step::Conclusion);
                    go(conclusion, path, out);
                    path.pop();
                }
                Statement::Abbreviation { .. } => {}
            }
        }
        go(self, &mut path, &mut out);
        out
    }

    pub(crate) fn write_tokens(&self, out: &mut Vec<String>) {
        match self {
            Statement::Relation { left, sign, right } => {
                left.write_tokens(out);
                out.push(sign.as_str().into());
                right.write_tokens(out);
            }
            Statement::Quantified { kind, hypothesis, conclusion } => {
                let (open, close) = kind.brackets();
                out.push(open.into());
                hypothesis.write_tokens(out);
                out.push(close.into());
                conclusion.write_tokens(out);
            }
            Statement::Abbreviation { head, args } => {
                out.push(head.to_string());
                for a in args {
                    a.write_tokens(out);
                }
            }
        }
    }
}

impl fmt::Debug for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        self.write_tokens(&mut toks);
        f.write_str(&toks.join(" "))
    }
}

/// `abbreviation : defining statement`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Property {
    pub head: LetterId,
    pub args: Vec<Term>,
    pub defining: Statement,
}

impl Property {
    pub fn new(head: LetterId, args: Vec<Term>, defining: Statement) -> Property {
        Property { head, args, defining }
    }

    /// The abbreviation part as a statement.
    pub fn abbreviation(&self) -> Statement {
        Statement::abbreviation(self.head.clone(), self.args.clone())
    }

    pub fn visit_letters<'a>(&'a self, f: &mut impl FnMut(&'a LetterId, bool)) {
        f(&self.head, true);
        for a in &self.args {
            a.visit_letters(&mut |l| f(l, false));
        }
        self.defining.visit_letters(f);
    }

    pub fn letters_of(&self) -> LetterCounts {
        let mut counts = LetterCounts::default();
        self.visit_letters(&mut |l, head| {
            let map = if head { &mut counts.heads } else { &mut counts.terms };
            *map.entry(l.clone()).or_insert(0) += 1;
        });
        counts
    }

    pub fn contains_letter(&self, l: &LetterId) -> bool {
        let mut found = false;
        self.visit_letters(&mut |x, _| found |= x == l);
        found
    }

    pub fn substitute_letter(&self, from: &LetterId, to: &LetterId) -> Property {
        let abbr = self.abbreviation().substitute_letter(from, to);
        let Statement::Abbreviation { head, args } = abbr else { unreachable!() };
        Property::new(head, args, self.defining.substitute_letter(from, to))
    }

    /// Replaces every term occurrence of `letter` in the arguments and the
    /// defining statement. The head is never replaced.
    pub fn substitute_letter_with_term(&self, letter: &LetterId, t: &Term) -> Result<Property, SyntaxError> {
        let counts = self.letters_of();
        if counts.heads.contains_key(letter) && !counts.terms.contains_key(letter) {
            return Err(SyntaxError::LetterIsAbbreviationHead(letter.clone()));
        }
        Ok(Property::new(
            self.head.clone(),
            self.args.iter().map(|a| a.replace_letter(letter, t)).collect(),
            self.defining.replace_term_letter(letter, t),
        ))
    }

    fn write_tokens(&self, out: &mut Vec<String>) {
        self.abbreviation().write_tokens(out);
        out.push(":".into());
        self.defining.write_tokens(out);
    }
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut toks = Vec::new();
        self.write_tokens(&mut toks);
        f.write_str(&toks.join(" "))
    }
}

/// What a proof node carries.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Content {
    Statement(Statement),
    Property(Property),
}

impl Content {
    pub fn as_statement(&self) -> Option<&Statement> {
        match self {
            Content::Statement(s) => Some(s),
            Content::Property(_) => None,
        }
    }

    pub fn as_property(&self) -> Option<&Property> {
        match self {
            Content::Property(p) => Some(p),
            Content::Statement(_) => None,
        }
    }

    pub fn visit_letters<'a>(&'a self, f: &mut impl FnMut(&'a LetterId, bool)) {
        match self {
            Content::Statement(s) => s.visit_letters(f),
            Content::Property(p) => p.visit_letters(f),
        }
    }

    pub fn letters_of(&self) -> LetterCounts {
        match self {
            Content::Statement(s) => s.letters_of(),
            Content::Property(p) => p.letters_of(),
        }
    }

    pub fn contains_letter(&self, l: &LetterId) -> bool {
        match self {
            Content::Statement(s) => s.contains_letter(l),
            Content::Property(p) => p.contains_letter(l),
        }
    }

    pub fn substitute_letter(&self, from: &LetterId, to: &LetterId) -> Content {
        match self {
            Content::Statement(s) => Content::Statement(s.substitute_letter(from, to)),
            Content::Property(p) => Content::Property(p.substitute_letter(from, to)),
        }
    }
}

impl From<Statement> for Content {
    fn from(s: Statement) -> Self {
        Content::Statement(s)
    }
}

impl From<Property> for Content {
    fn from(p: Property) -> Self {
        Content::Property(p)
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Content::Statement(s) => s.fmt(f),
            Content::Property(p) => p.fmt(f),
        }
    }
}
