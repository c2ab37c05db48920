//! Tokenizer and recursive-descent parser for statements, properties and terms.
//!
//! Grammar:
//!
//! ```text
//! stmt     := '[' stmt ']' stmt | '<' stmt '>' stmt | term ('=' | '!=') term | IDENT term*
//! term     := IDENT ('(' term ')')*
//! property := IDENT term* ':' stmt
//! ```
//!
//! `≠`, `⟨` and `⟩` are accepted as aliases of `!=`, `<` and `>`.

use std::fmt;

use super::{Content, LetterId, Property, QuantKind, Sign, Statement, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnbalancedBrackets,
    DanglingRelationalSign,
    AbbreviationHeadNotBareLetter,
    InvalidCharacter(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    MissingPropertySymbol,
    ExtraPropertySymbol,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyInput => f.write_str("empty input"),
            ParseErrorKind::UnbalancedBrackets => f.write_str("unbalanced brackets"),
            ParseErrorKind::DanglingRelationalSign => f.write_str("dangling relational sign"),
            ParseErrorKind::AbbreviationHeadNotBareLetter => f.write_str("abbreviation head must be a bare letter"),
            ParseErrorKind::InvalidCharacter(c) => write!(f, "invalid character `{c}`"),
            ParseErrorKind::UnexpectedToken(t) => write!(f, "unexpected token `{t}`"),
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::MissingPropertySymbol => f.write_str("expected a property symbol `:`"),
            ParseErrorKind::ExtraPropertySymbol => f.write_str("more than one property symbol"),
        }
    }
}

/// A parse failure with the 1-based character column where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at column {column}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Eq,
    Neq,
    LBrack,
    RBrack,
    LAngle,
    RAngle,
    LParen,
    RParen,
    Colon,
}

impl Tok {
    fn text(&self) -> &str {
        match self {
            Tok::Ident(s) => s,
            Tok::Eq => "=",
            Tok::Neq => "!=",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::LAngle => "<",
            Tok::RAngle => ">",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Colon => ":",
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '=' => Tok::Eq,
            '≠' => Tok::Neq,
            '!' if chars.get(i + 1) == Some(&'=') => {
                i += 1;
                Tok::Neq
            }
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            '<' | '⟨' => Tok::LAngle,
            '>' | '⟩' => Tok::RAngle,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ':' => Tok::Colon,
            c if is_ident_start(c) => {
                let start = i;
                while i + 1 < chars.len() && is_ident_continue(chars[i + 1]) {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            other => return Err(ParseError { kind: ParseErrorKind::InvalidCharacter(other), column: col }),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

fn check_balance(toks: &[(Tok, usize)]) -> Result<(), ParseError> {
    let mut stack: Vec<(&Tok, usize)> = Vec::new();
    for (t, col) in toks {
        match t {
            Tok::LBrack | Tok::LAngle | Tok::LParen => stack.push((t, *col)),
            Tok::RBrack | Tok::RAngle | Tok::RParen => {
                let expected = match t {
                    Tok::RBrack => Tok::LBrack,
                    Tok::RAngle => Tok::LAngle,
                    _ => Tok::LParen,
                };
                match stack.pop() {
                    Some((open, _)) if *open == expected => {}
                    _ => return Err(ParseError { kind: ParseErrorKind::UnbalancedBrackets, column: *col }),
                }
            }
            _ => {}
        }
    }
    match stack.first() {
        Some((_, col)) => Err(ParseError { kind: ParseErrorKind::UnbalancedBrackets, column: *col }),
        None => Ok(()),
    }
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, column: self.col() }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.err(ParseErrorKind::UnexpectedEnd),
            Some(Tok::Eq | Tok::Neq) => self.err(ParseErrorKind::DanglingRelationalSign),
            Some(t) => self.err(ParseErrorKind::UnexpectedToken(t.text().to_string())),
        }
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut t = match self.peek() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Term::Letter(LetterId::new(name))
            }
            _ => return Err(self.unexpected()),
        };
        while self.peek() == Some(&Tok::LParen) {
            self.pos += 1;
            let arg = self.term()?;
            self.expect(Tok::RParen)?;
            t = Term::apply(t, arg);
        }
        Ok(t)
    }

    fn statement(&mut self) -> Result<Statement, ParseError> {
        match self.peek() {
            Some(Tok::LBrack) | Some(Tok::LAngle) => {
                let (kind, close) = if self.peek() == Some(&Tok::LBrack) {
                    (QuantKind::Existential, Tok::RBrack)
                } else {
                    (QuantKind::Universal, Tok::RAngle)
                };
                self.pos += 1;
                let hyp = self.statement()?;
                self.expect(close)?;
                let concl = self.statement()?;
                Ok(Statement::quantified(kind, hyp, concl))
            }
            Some(Tok::Ident(_)) => {
                let head_col = self.col();
                let first = self.term()?;
                match self.peek() {
                    Some(Tok::Eq) | Some(Tok::Neq) => {
                        let sign = if self.peek() == Some(&Tok::Eq) { Sign::Eq } else { Sign::Neq };
                        self.pos += 1;
                        if !matches!(self.peek(), Some(Tok::Ident(_))) {
                            return Err(ParseError { kind: ParseErrorKind::DanglingRelationalSign, column: self.col() });
                        }
                        let right = self.term()?;
                        Ok(Statement::relation(first, sign, right))
                    }
                    _ => {
                        let head = match first {
                            Term::Letter(l) => l,
                            Term::Apply(..) => {
                                return Err(ParseError {
                                    kind: ParseErrorKind::AbbreviationHeadNotBareLetter,
                                    column: head_col,
                                })
                            }
                        };
                        let mut args = Vec::new();
                        while matches!(self.peek(), Some(Tok::Ident(_))) {
                            args.push(self.term()?);
                        }
                        Ok(Statement::abbreviation(head, args))
                    }
                }
            }
            _ => Err(self.unexpected()),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            Err(self.unexpected())
        }
    }
}

fn prepare(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ParseError { kind: ParseErrorKind::EmptyInput, column: 1 });
    }
    check_balance(&toks)?;
    Ok(toks)
}

fn parse_statement_tokens(toks: &[(Tok, usize)], end_col: usize) -> Result<Statement, ParseError> {
    if let Some((_, col)) = toks.iter().find(|(t, _)| *t == Tok::Colon) {
        return Err(ParseError { kind: ParseErrorKind::UnexpectedToken(":".into()), column: *col });
    }
    let mut p = Parser { toks, pos: 0, end_col };
    let s = p.statement()?;
    p.finish()?;
    Ok(s)
}

pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    let toks = prepare(text)?;
    parse_statement_tokens(&toks, text.chars().count() + 1)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let toks = prepare(text)?;
    let mut p = Parser { toks: &toks, pos: 0, end_col: text.chars().count() + 1 };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_property(text: &str) -> Result<Property, ParseError> {
    let toks = prepare(text)?;
    let end_col = text.chars().count() + 1;
    let colons: Vec<usize> = toks.iter().enumerate().filter(|(_, (t, _))| *t == Tok::Colon).map(|(i, _)| i).collect();
    let split = match colons.as_slice() {
        [] => return Err(ParseError { kind: ParseErrorKind::MissingPropertySymbol, column: end_col }),
        [i] => *i,
        [_, j, ..] => return Err(ParseError { kind: ParseErrorKind::ExtraPropertySymbol, column: toks[*j].1 }),
    };
    let (left, right) = (&toks[..split], &toks[split + 1..]);
    if left.is_empty() {
        return Err(ParseError { kind: ParseErrorKind::UnexpectedToken(":".into()), column: toks[split].1 });
    }
    let mut p = Parser { toks: left, pos: 0, end_col: toks[split].1 };
    let abbr = p.statement()?;
    p.finish()?;
    let (head, args) = match abbr {
        Statement::Abbreviation { head, args } => (head, args),
        _ => {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedToken(left[0].0.text().to_string()),
                column: left[0].1,
            })
        }
    };
    if right.is_empty() {
        return Err(ParseError { kind: ParseErrorKind::UnexpectedEnd, column: end_col });
    }
    let defining = parse_statement_tokens(right, end_col)?;
    Ok(Property::new(head, args, defining))
}

/// Parses a property if the text holds a `:`, a statement otherwise.
pub fn parse_content(text: &str) -> Result<Content, ParseError> {
    let toks = prepare(text)?;
    if toks.iter().any(|(t, _)| *t == Tok::Colon) {
        parse_property(text).map(Content::Property)
    } else {
        parse_statement_tokens(&toks, text.chars().count() + 1).map(Content::Statement)
    }
}
