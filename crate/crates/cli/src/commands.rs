//! The four verbs. Each returns its full output and exit code so that the
//! binary stays a thin wrapper and tests can call the verbs directly.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::Path;

use kr_decomp::growth::{self, DegreeCheck, GrowthMode};
use kr_decomp::oracle::full_decomposition_oracle;
use kr_decomp::rootsys::RootSystem;
use kr_decomp::tree::{check_lift_with_limit, node_multiplicity, DecompositionTree};
use kr_decomp::{Decomposition, Multiplicity, Tree};

use crate::render::{self, module, Format};
use crate::{exit, fixtures, json, CliError};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(stdout: String, e: &CliError) -> Self {
        Outcome { stdout, stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

impl From<Result<String, CliError>> for Outcome {
    fn from(r: Result<String, CliError>) -> Self {
        match r {
            Ok(stdout) => Outcome { stdout, ..Default::default() },
            Err(e) => Outcome::error(String::new(), &e),
        }
    }
}

fn build(algebra: &str, ell: usize, m: u32, node_limit: usize) -> Result<Tree, CliError> {
    let rs = RootSystem::from_name(algebra)?;
    Ok(DecompositionTree::build_with_limit(&rs, ell, m, node_limit)?)
}

pub fn decompose(algebra: &str, ell: usize, m: u32, format: Format, dims: bool, node_limit: usize) -> Outcome {
    build(algebra, ell, m, node_limit)
        .map(|tree| match format {
            Format::Tree => render::indented(&tree, dims),
            Format::Flat => render::flat(&tree, dims),
            Format::Json => json::render(&tree),
        })
        .into()
}

fn aggregate_text(agg: &Decomposition) -> String {
    let parts: Vec<String> = agg.iter().rev().map(|(w, c)| format!("{} ↦ {c}", module(w))).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Every label prefix is a node and every stored multiplicity is the
/// product formula evaluated at its label.
fn structural_problems(tree: &Tree) -> Result<Vec<String>, CliError> {
    let rs = tree.root_system();
    let labels: BTreeSet<_> = tree.nodes().map(|n| &n.label).collect();
    let mut problems = Vec::new();
    for n in tree.nodes() {
        if n.multiplicity == Multiplicity::default() {
            problems.push(format!("{:?} has multiplicity 0", n.label));
        }
        let direct: Multiplicity = node_multiplicity(rs, tree.node(), tree.level(), &n.label)?;
        if direct != n.multiplicity {
            problems.push(format!("{:?}: stored {} but the formula gives {direct}", n.label, n.multiplicity));
        }
        if let Some(s) = (0..n.label.len()).find(|&s| !labels.contains(&n.label.prefix(s))) {
            problems.push(format!("prefix {:?} of {:?} is missing", n.label.prefix(s), n.label));
        }
    }
    Ok(problems)
}

pub fn verify(algebra: &str, ell: usize, m: u32, node_limit: usize, oracle_limit: u64) -> Outcome {
    let mut out = String::new();
    match verify_into(&mut out, algebra, ell, m, node_limit, oracle_limit) {
        Ok(true) => Outcome { stdout: out, stderr: String::new(), code: exit::PASS },
        Ok(false) => Outcome { stdout: out, stderr: "verification failed\n".into(), code: exit::MISMATCH },
        Err(e) => Outcome::error(out, &e),
    }
}

fn verify_into(
    out: &mut String,
    algebra: &str,
    ell: usize,
    m: u32,
    node_limit: usize,
    oracle_limit: u64,
) -> Result<bool, CliError> {
    let tree = build(algebra, ell, m, node_limit)?;
    let rs = tree.root_system();
    writeln!(out, "{} W_{m}({ell}): {} nodes", rs.id(), tree.node_count()).unwrap();
    let mut ok = true;

    let problems = structural_problems(&tree)?;
    writeln!(out, "{} prefix closure and multiplicities", verdict(problems.is_empty())).unwrap();
    for p in &problems {
        writeln!(out, "  {p}").unwrap();
    }
    ok &= problems.is_empty();

    let oracle: Decomposition = full_decomposition_oracle(rs, ell, m, oracle_limit)?;
    let agg = tree.aggregate();
    let keys: BTreeSet<_> = oracle.keys().chain(agg.keys()).collect();
    let diffs: Vec<String> = keys
        .into_iter()
        .rev()
        .filter_map(|w| {
            let (a, b) = (agg.get(w).cloned().unwrap_or_default(), oracle.get(w).cloned().unwrap_or_default());
            (a != b).then(|| format!("{}: tree {a}, oracle {b}", module(w)))
        })
        .collect();
    writeln!(out, "{} aggregate equals oracle ({} summands)", verdict(diffs.is_empty()), agg.len()).unwrap();
    for d in &diffs {
        writeln!(out, "  {d}").unwrap();
    }
    ok &= diffs.is_empty();

    let lift = check_lift_with_limit(rs, ell, m, m + 1, node_limit)?;
    writeln!(out, "{} lift to W_{}({ell}) ({} nodes in rows 0..={m})", verdict(lift.passed()), m + 1, lift.nodes_compared)
        .unwrap();
    if let Some(d) = &lift.discrepancy {
        writeln!(out, "  {d}").unwrap();
    }
    ok &= lift.passed();

    writeln!(out, "aggregate {}", aggregate_text(agg)).unwrap();
    writeln!(out, "{}", if ok { "pass" } else { "fail" }).unwrap();
    Ok(ok)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok  "
    } else {
        "FAIL"
    }
}

pub fn growth(algebra: &str, ell: usize, mode: GrowthMode, budget: usize) -> Outcome {
    growth_text(algebra, ell, mode, budget).into()
}

fn growth_text(algebra: &str, ell: usize, mode: GrowthMode, budget: usize) -> Result<String, CliError> {
    let rs = RootSystem::from_name(algebra)?;
    let report = growth::growth_degree(&rs, ell, budget, mode)?;
    let mut out = String::new();
    writeln!(out, "{} ℓ={ell}", rs.id()).unwrap();
    writeln!(out, "path-type       {}", report.best_path_type.display(&rs)).unwrap();
    writeln!(out, "g               {}", report.g).unwrap();
    writeln!(out, "half_orbit_dim  {}", report.half_orbit_dim).unwrap();
    writeln!(out, "degree          {}", report.degree).unwrap();
    let source = if report.fixture_derived { "explicit construction" } else { "search" };
    writeln!(out, "source          {source}").unwrap();
    let check = match &report.degree_check {
        DegreeCheck::Consistent => "consistent".to_string(),
        DegreeCheck::Skipped => "skipped".to_string(),
        DegreeCheck::Discrepancy { degree, path_type } => {
            format!("discrepancy: {} reaches g + half_orbit_dim = {degree}", path_type.display(&rs))
        }
    };
    writeln!(out, "degree check    {check}").unwrap();
    let relation = match growth::height_relation_for(&rs, ell, &report) {
        Ok(h) => format!(
            "g = 2·ht(ω{ell}) − c: {} vs 2·{} − {} ({})",
            h.g,
            h.height,
            h.positive_roots,
            if h.holds { "holds" } else { "fails" }
        ),
        Err(kr_decomp::Error::NotApplicable(_)) => "not applicable".to_string(),
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "height relation {relation}").unwrap();
    Ok(out)
}

/// Runs the fixtures in `dir`, optionally only those of the given algebras.
pub fn fixtures(dir: &Path, only: &[String], node_limit: usize) -> Outcome {
    let all = match fixtures::load_dir(dir) {
        Ok(f) => f,
        Err(e) => return Outcome::error(String::new(), &e),
    };
    let mut out = String::new();
    let mut err = String::new();
    let (mut run, mut passed, mut code) = (0, 0, exit::PASS);
    for f in all.iter().filter(|f| only.is_empty() || only.iter().any(|a| a.eq_ignore_ascii_case(&f.algebra))) {
        run += 1;
        let result = build(&f.algebra, f.ell, f.m, node_limit).and_then(|t| Ok((fixtures::compare(f, &t)?, t)));
        match result {
            Ok((cmp, tree)) if cmp.passed => {
                passed += 1;
                writeln!(out, "PASS {} ({} nodes)", f.name(), tree.node_count()).unwrap();
            }
            Ok((cmp, _)) => {
                code = code.max(exit::MISMATCH);
                writeln!(out, "FAIL {}", f.name()).unwrap();
                for d in &cmp.differences {
                    writeln!(out, "  {d}").unwrap();
                }
            }
            Err(e) => {
                code = code.max(e.exit_code());
                writeln!(out, "FAIL {}", f.name()).unwrap();
                writeln!(err, "{}: {e}", f.name()).unwrap();
            }
        }
    }
    if run == 0 {
        let e = CliError::Missing(format!("no fixtures for {}", only.join(", ")));
        return Outcome::error(out, &e);
    }
    writeln!(out, "{passed}/{run} fixtures passed").unwrap();
    Outcome { stdout: out, stderr: err, code }
}
