//! Kernel for tree-shaped deductions over a small statement language.
//!
//! [`syntax`] holds statements, properties and their parser; [`tree`] the
//! proof tree with letter flavors and admissibility; [`rules`] one validator
//! and one constructor per rule; [`script`] the `.pft` text format and
//! renderers; [`search`] bounded proof search.

pub mod rules;
pub mod script;
pub mod search;
pub mod syntax;
pub mod tree;

pub use rules::{check_tree, CheckOptions, CheckReport, Justification, RuleName, Step5Reading, Violation};
pub use script::{parse_script, serialize_script, ScriptError};
pub use syntax::{parse_content, parse_statement, Content, LetterId, Property, Statement, Term};
pub use tree::{LetterFlavor, NodeId, ProofTree};
