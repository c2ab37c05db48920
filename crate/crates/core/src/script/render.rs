use std::fmt::Write as _;

use super::node_ids;
use crate::rules::CheckReport;
use crate::tree::{LinkKind, ProofTree};

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz rendering. Successor edges are bold, pair edges dashed and
/// labelled L/R; contradictory nodes are red with a double border.
pub fn export_dot(tree: &ProofTree, report: Option<&CheckReport>) -> String {
    let ids = node_ids(tree);
    let mut out = String::from("digraph proof {\n  node [shape=box, fontname=\"monospace\"];\n");
    let order = tree.preorder();
    for &n in &order {
        let node = tree.get(n).expect("live node");
        let label = format!("{}: {}\\n{}", ids[&n], dot_escape(&node.content.to_string()), node.justification.rule());
        let mut attrs = format!("label=\"{label}\"");
        if report.is_some_and(|r| r.is_contradictory(n)) {
            attrs.push_str(", color=red, fontcolor=red, peripheries=2");
        }
        let _ = writeln!(out, "  \"{}\" [{attrs}];", dot_escape(&ids[&n]));
    }
    for &n in &order {
        let node = tree.get(n).expect("live node");
        let Some(p) = node.parent else { continue };
        let style = match node.link {
            LinkKind::PairLeft => "style=dashed, label=\"L\"",
            LinkKind::PairRight => "style=dashed, label=\"R\"",
            _ => "style=bold",
        };
        let _ = writeln!(out, "  \"{}\" -> \"{}\" [{style}];", dot_escape(&ids[&p]), dot_escape(&ids[&n]));
    }
    out.push_str("}\n");
    out
}

/// Indented text rendering. Successors stay in the column of their parent;
/// pair children are indented one level and marked `L` or `R`.
pub fn render_text(tree: &ProofTree, report: Option<&CheckReport>) -> String {
    let ids = node_ids(tree);
    let mut out = String::new();
    for n in tree.preorder() {
        let node = tree.get(n).expect("live node");
        let chain = tree.ancestors(n).expect("live node");
        let depth = chain.iter().filter(|&&a| matches!(tree.get(a).map(|x| x.link), Ok(LinkKind::PairLeft | LinkKind::PairRight))).count();
        let marker = match node.link {
            LinkKind::Root => '*',
            LinkKind::Successor => 'S',
            LinkKind::PairLeft => 'L',
            LinkKind::PairRight => 'R',
        };
        let indent = "  ".repeat(depth);
        let _ = write!(out, "{indent}{marker} {}: {}  [{}]", ids[&n], node.content, node.justification.rule());
        if let Some((a, b)) = report.and_then(|r| r.contradictions.get(&n)) {
            let _ = write!(out, "  contradiction({}, {})", ids[a], ids[b]);
        }
        out.push('\n');
    }
    out
}
