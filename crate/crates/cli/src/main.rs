use std::collections::BTreeSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use deftree_core::rules::{check_tree, CheckOptions, CheckReport, RuleName, Step5Reading};
use deftree_core::script::{export_dot, format_script, node_ids, parse_script, render_text, Script};
use deftree_core::search::{prove, refute, SearchConfig, SearchError, SearchOutcome};
use deftree_core::syntax::parse_statement;
use serde_json::json;

/// Checker, renderer and bounded prover for proof-tree scripts.
#[derive(Parser)]
#[command(name = "deftree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every node of a script against its rule.
    Check(CheckArgs),
    /// Draw a script as indented text or Graphviz.
    Render(RenderArgs),
    /// Search for an extension deducing a goal, or a contradiction.
    Prove(ProveArgs),
    /// Rewrite scripts in canonical form.
    Fmt(FmtArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Machine,
}

#[derive(Clone, Copy, ValueEnum)]
enum Step5 {
    Prose,
    Diagram,
}

#[derive(Args)]
struct CheckArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    report: ReportFormat,
    /// Treat naming-convention lints as violations.
    #[arg(long)]
    strict_naming: bool,
    #[arg(long = "choice-step5", value_enum, default_value = "diagram")]
    choice_step5: Step5,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Dot,
    Text,
}

#[derive(Args)]
struct RenderArgs {
    path: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: RenderFormat,
}

#[derive(Args)]
struct ProveArgs {
    path: PathBuf,
    /// Node to extend; defaults to the root.
    #[arg(long)]
    from: Option<String>,
    /// Statement to deduce.
    #[arg(long, required_unless_present = "refute", conflicts_with = "refute")]
    goal: Option<String>,
    /// Search for a contradiction on every branch instead of a goal.
    #[arg(long)]
    refute: bool,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    max_depth: u32,
    #[arg(long, default_value_t = 3)]
    max_new_letters: u32,
    #[arg(long, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_states: u64,
    /// Comma-separated rule names the search may use.
    #[arg(long, value_delimiter = ',')]
    rules: Option<Vec<String>>,
}

#[derive(Args)]
struct FmtArgs {
    #[arg(required = true)]
    paths: Vec<PathBuf>,
    /// Only report files that are not in canonical form.
    #[arg(long)]
    check: bool,
}

/// Failures the user must fix before anything can be checked.
#[derive(Debug)]
struct InputError(anyhow::Error);

fn input<T>(r: Result<T>) -> Result<T, InputError> {
    r.map_err(InputError)
}

fn load(path: &Path) -> Result<Script, InputError> {
    let text = input(fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())))?;
    input(parse_script(&text).with_context(|| format!("{}", path.display())))
}

/// Writes to standard output; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Render(a) => cmd_render(a),
        Command::Prove(a) => cmd_prove(a),
        Command::Fmt(a) => cmd_fmt(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_check(a: CheckArgs) -> Result<bool, InputError> {
    let script = load(&a.path)?;
    let opts = CheckOptions {
        choice_step5: match a.choice_step5 {
            Step5::Prose => Step5Reading::Prose,
            Step5::Diagram => Step5Reading::Diagram,
        },
        strict_naming: a.strict_naming,
    };
    let report = check_tree(&script.tree, &opts);
    match a.report {
        ReportFormat::Text => emit(&text_report(&script, &report)),
        ReportFormat::Machine => {
            let doc = machine_report(&a.path, &script, &report);
            emit(&(serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"));
        }
    }
    for v in &report.violations {
        eprintln!("{}: {v}", a.path.display());
    }
    Ok(report.is_valid())
}

fn text_report(script: &Script, report: &CheckReport) -> String {
    let tree = &script.tree;
    let ids = node_ids(tree);
    let mut out = String::new();
    for &n in &report.order {
        let node = tree.get(n).expect("reported nodes exist");
        let status = if report.violations_at(n).next().is_some() { "FAIL" } else { "ok  " };
        out.push_str(&format!("{status} {}: {}  [{}]", ids[&n], node.content, node.justification.rule()));
        if let Some((x, y)) = report.contradictions.get(&n) {
            out.push_str(&format!("  contradiction({}, {})", ids[x], ids[y]));
        }
        out.push('\n');
        for v in report.violations_at(n) {
            out.push_str(&format!("     {} {}\n", v.clause, v.message));
        }
    }
    for l in &report.lints {
        out.push_str(&format!("lint {} [{}] {}\n", ids[&l.node], l.kind, l.message));
    }
    if !report.assumptions.is_empty() {
        let names: Vec<&str> = report.assumptions.iter().map(|n| ids[n].as_str()).collect();
        out.push_str(&format!("assumptions: {}\n", names.join(", ")));
    }
    out.push_str(&format!(
        "{} nodes, {} violations, {} contradictory\n",
        report.order.len(),
        report.violations.len(),
        report.contradictions.len()
    ));
    out
}

fn machine_report(path: &Path, script: &Script, report: &CheckReport) -> serde_json::Value {
    let tree = &script.tree;
    let ids = node_ids(tree);
    let nodes: Vec<_> = report
        .order
        .iter()
        .map(|n| {
            let node = tree.get(*n).expect("reported nodes exist");
            json!({
                "id": ids[n],
                "content": node.content.to_string(),
                "rule": node.justification.rule().as_str(),
                "valid": report.violations_at(*n).next().is_none(),
                "contradiction": report.contradictions.get(n).map(|(x, y)| [ids[x].clone(), ids[y].clone()]),
            })
        })
        .collect();
    let violations: Vec<_> = report
        .violations
        .iter()
        .map(|v| json!({ "node": ids[&v.node], "rule": v.rule.as_str(), "clause": v.clause, "message": v.message }))
        .collect();
    let lints: Vec<_> = report
        .lints
        .iter()
        .map(|l| json!({ "node": ids[&l.node], "kind": l.kind.to_string(), "message": l.message }))
        .collect();
    json!({
        "file": path.display().to_string(),
        "valid": report.is_valid(),
        "nodes": nodes,
        "violations": violations,
        "lints": lints,
        "assumptions": report.assumptions.iter().map(|n| ids[n].clone()).collect::<Vec<_>>(),
    })
}

fn cmd_render(a: RenderArgs) -> Result<bool, InputError> {
    let script = load(&a.path)?;
    let report = check_tree(&script.tree, &CheckOptions::default());
    match a.format {
        RenderFormat::Dot => emit(&export_dot(&script.tree, Some(&report))),
        RenderFormat::Text => emit(&render_text(&script.tree, Some(&report))),
    }
    Ok(true)
}

fn search_config(a: &ProveArgs) -> Result<SearchConfig> {
    let mut cfg = SearchConfig {
        max_depth: a.max_depth as usize,
        max_new_letters: a.max_new_letters as usize,
        max_states: a.max_states as usize,
        ..SearchConfig::default()
    };
    if let Some(names) = &a.rules {
        cfg.enabled_rules = names.iter().map(|n| n.trim().parse::<RuleName>()).collect::<Result<BTreeSet<_>, _>>()?;
    }
    Ok(cfg)
}

fn cmd_prove(a: ProveArgs) -> Result<bool, InputError> {
    let script = load(&a.path)?;
    let tree = &script.tree;
    let cfg = input(search_config(&a))?;
    let from = match &a.from {
        Some(label) => input(tree.find_label(label).ok_or_else(|| anyhow!("no node labelled `{label}`")))?,
        None => tree.root().expect("parsed scripts are non-empty"),
    };
    let outcome = match &a.goal {
        Some(g) => {
            let goal = input(parse_statement(g).with_context(|| format!("goal `{g}`")))?;
            prove(tree, from, &goal, &cfg)
        }
        None => refute(tree, from, &cfg),
    };
    match outcome {
        Ok(SearchOutcome::Found(f)) => {
            emit(&f.script);
            eprintln!("found {} nodes after {} states", f.added.len(), f.states);
            Ok(true)
        }
        Ok(SearchOutcome::Exhausted(e)) => {
            emit(&format!(
                "exhausted: {e}; bounds max_depth={} max_new_letters={} max_states={}\n",
                cfg.max_depth, cfg.max_new_letters, cfg.max_states
            ));
            Ok(false)
        }
        Err(e @ SearchError::GoalNotAdmissibleEverReachable(_)) => {
            eprintln!("error: {e}");
            Ok(false)
        }
        Err(e) => input(Err(e.into())),
    }
}

fn cmd_fmt(a: FmtArgs) -> Result<bool, InputError> {
    let mut clean = true;
    for path in &a.paths {
        let text = input(fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display())))?;
        let formatted = input(format_script(&text).with_context(|| format!("{}", path.display())))?;
        if formatted == text {
            continue;
        }
        if a.check {
            eprintln!("{} is not formatted", path.display());
            clean = false;
        } else {
            input(fs::write(path, formatted).with_context(|| format!("cannot write {}", path.display())))?;
        }
    }
    Ok(clean)
}
