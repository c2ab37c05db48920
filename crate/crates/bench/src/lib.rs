//! Shared fixtures for the benchmarks.

use std::path::PathBuf;

use deftree_core::{parse_script, ProofTree};

pub const CORPUS: [&str; 7] = ["sample_tree", "theorem_root", "russell_1", "russell_2", "commuted", "choice", "restrict"];

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

/// Script text of one corpus file.
pub fn corpus_text(name: &str) -> String {
    let path = corpus_dir().join(format!("{name}.pft"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Every corpus file as `(name, text, tree)`.
pub fn corpus() -> Vec<(&'static str, String, ProofTree)> {
    CORPUS
        .iter()
        .map(|&name| {
            let text = corpus_text(name);
            let tree = parse_script(&text).unwrap_or_else(|e| panic!("{name}: {e}")).tree;
            (name, text, tree)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn corpus_loads() {
        assert_eq!(super::corpus().len(), super::CORPUS.len());
    }
}
