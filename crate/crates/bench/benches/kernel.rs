use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use deftree_bench::corpus;
use deftree_core::search::{prove, refute, SearchConfig};
use deftree_core::{check_tree, parse_script, parse_statement, CheckOptions, Justification, ProofTree};

fn parsing(c: &mut Criterion) {
    let files = corpus();
    let mut g = c.benchmark_group("parse");
    for (name, text, _) in &files {
        g.bench_function(*name, |b| b.iter(|| parse_script(black_box(text)).unwrap()));
    }
    g.finish();
}

fn checking(c: &mut Criterion) {
    let files = corpus();
    let opts = CheckOptions::default();
    let mut g = c.benchmark_group("check");
    for (name, _, tree) in &files {
        g.bench_function(*name, |b| b.iter(|| check_tree(black_box(tree), &opts)));
    }
    g.finish();
}

fn searching(c: &mut Criterion) {
    let (tree, root) = ProofTree::with_root(parse_statement("a = a").unwrap(), Justification::RootAxiom);
    let goal = parse_statement("[ xi = xi ] xi = xi").unwrap();
    let cfg = SearchConfig::default();
    let mut g = c.benchmark_group("search");
    g.sample_size(20);
    g.bench_function("reflexivity", |b| b.iter(|| prove(&tree, root, black_box(&goal), &cfg).unwrap()));
    let commuted = parse_script(&deftree_bench::corpus_text("commuted")).unwrap().tree;
    let start = commuted.root().unwrap();
    g.bench_function("refute_commuted", |b| b.iter(|| refute(black_box(&commuted), start, &cfg).unwrap()));
    g.finish();
}

criterion_group!(benches, parsing, checking, searching);
criterion_main!(benches);
