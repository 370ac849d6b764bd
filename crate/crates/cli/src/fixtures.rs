//! Golden decomposition tables in `⊕k` notation.
//!
//! A file holds blocks introduced by `@ <algebra> <ℓ> <m>`. The next line is
//! the root summand and each later line `⊕k <summand>` is a node on level
//! `k` whose parent is the most recent node on level `k − 1`. A header of
//! the form `@ <algebra> <ℓ> <m> nodes=<count>` only fixes the node count.
//! Lines starting with `#` are comments.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use kr_decomp::rootsys::{RootSystem, RootVector, Weight};
use kr_decomp::Tree;
use num_bigint::BigUint;

use crate::render::{parse_summand, summand};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Listed {
    pub level: usize,
    pub multiplicity: BigUint,
    pub highest_weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Listing(Vec<Listed>),
    NodeCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub algebra: String,
    pub ell: usize,
    pub m: u32,
    pub expected: Expected,
}

impl Fixture {
    pub fn name(&self) -> String {
        format!("{} W_{}({})", self.algebra, self.m, self.ell)
    }
}

pub fn parse(text: &str) -> Result<Vec<Fixture>, CliError> {
    let mut out: Vec<Fixture> = Vec::new();
    let mut rank = 0;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |msg: String| CliError::Parse(format!("line {}: {msg}", no + 1));
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(head) = line.strip_prefix('@') {
            let fields: Vec<&str> = head.split_whitespace().collect();
            if !(3..=4).contains(&fields.len()) {
                return Err(err(format!("malformed header {line:?}")));
            }
            let rs = RootSystem::from_name(fields[0])?;
            rank = rs.rank();
            let ell = fields[1].parse().map_err(|_| err("bad node".into()))?;
            let m = fields[2].parse().map_err(|_| err("bad level".into()))?;
            let expected = match fields.get(3) {
                None => Expected::Listing(Vec::new()),
                Some(f) => Expected::NodeCount(
                    f.strip_prefix("nodes=")
                        .and_then(|n| n.parse().ok())
                        .ok_or_else(|| err(format!("unknown header field {f:?}")))?,
                ),
            };
            out.push(Fixture { algebra: rs.id().to_string(), ell, m, expected });
            continue;
        }
        let Some(Fixture { expected: Expected::Listing(entries), .. }) = out.last_mut() else {
            return Err(err("summand outside a listing block".into()));
        };
        let (level, body) = match line.strip_prefix('⊕') {
            Some(rest) => {
                let (k, body) = rest.split_once(char::is_whitespace).ok_or_else(|| err("missing summand".into()))?;
                (k.parse().map_err(|_| err(format!("bad level {k:?}")))?, body)
            }
            None => (0, line),
        };
        if entries.is_empty() != (level == 0) {
            return Err(err("each block starts with exactly one root summand".into()));
        }
        let (multiplicity, highest_weight) = parse_summand(body, rank).map_err(|e| err(e.to_string()))?;
        entries.push(Listed { level, multiplicity, highest_weight });
    }
    Ok(out)
}

pub fn load(path: &Path) -> Result<Vec<Fixture>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Missing(format!("{}: {e}", path.display())))?;
    parse(&text)
}

/// All `*.txt` fixture files in a directory, sorted by name.
pub fn load_dir(dir: &Path) -> Result<Vec<Fixture>, CliError> {
    let listing = fs::read_dir(dir).map_err(|e| CliError::Missing(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<_> = listing
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Missing(format!("no fixture files in {}", dir.display())));
    }
    let mut out = Vec::new();
    for p in paths {
        out.extend(load(&p)?);
    }
    Ok(out)
}

/// A node identified by its whole path: the increments from the root, its
/// multiplicity and its highest weight.
pub type NodeKey = (Vec<RootVector>, BigUint, Weight);

/// Reconstructs the tree structure of a listing. Increments follow from
/// consecutive highest weights along each path.
pub fn listing_keys(rs: &RootSystem, entries: &[Listed]) -> Result<Vec<NodeKey>, CliError> {
    let mut stack: Vec<(Weight, Vec<RootVector>)> = Vec::new();
    let mut keys = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        if e.level > stack.len() {
            return Err(CliError::Parse(format!("entry {} jumps to level {}", i + 1, e.level)));
        }
        stack.truncate(e.level);
        let path = match stack.last() {
            None => Vec::new(),
            Some((parent, path)) => {
                let delta = rs.omega_to_root(&parent.sub(&e.highest_weight)).ok_or_else(|| {
                    CliError::Parse(format!("entry {}: {} is not below its parent", i + 1, e.highest_weight))
                })?;
                let mut p = path.clone();
                p.push(delta);
                p
            }
        };
        keys.push((path.clone(), e.multiplicity.clone(), e.highest_weight.clone()));
        stack.push((e.highest_weight.clone(), path));
    }
    Ok(keys)
}

pub fn tree_keys(tree: &Tree) -> Vec<NodeKey> {
    tree.nodes()
        .map(|n| (n.label.increments().to_vec(), n.multiplicity.clone(), n.highest_weight.clone()))
        .collect()
}

/// Outcome of comparing one fixture with the computed tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub passed: bool,
    /// Whether the listing order equals the depth-first order of the tree.
    pub same_order: bool,
    pub differences: Vec<String>,
}

fn multiset(keys: &[NodeKey]) -> BTreeMap<&NodeKey, usize> {
    let mut m = BTreeMap::new();
    for k in keys {
        *m.entry(k).or_insert(0) += 1;
    }
    m
}

fn describe(key: &NodeKey) -> String {
    let path: Vec<String> = key.0.iter().map(ToString::to_string).collect();
    format!("[{}] {}", path.join(" "), summand(&key.1, &key.2))
}

pub fn compare(fixture: &Fixture, tree: &Tree) -> Result<Comparison, CliError> {
    match &fixture.expected {
        Expected::NodeCount(n) => {
            let passed = tree.node_count() == *n;
            let differences = if passed {
                Vec::new()
            } else {
                vec![format!("expected {n} nodes, built {}", tree.node_count())]
            };
            Ok(Comparison { passed, same_order: true, differences })
        }
        Expected::Listing(entries) => {
            let want = listing_keys(tree.root_system(), entries)?;
            let got = tree_keys(tree);
            let (a, b) = (multiset(&want), multiset(&got));
            let mut differences = Vec::new();
            for (k, &n) in &a {
                let have = b.get(k).copied().unwrap_or(0);
                if have < n {
                    differences.push(format!("missing {}", describe(k)));
                }
            }
            for (k, &n) in &b {
                let have = a.get(k).copied().unwrap_or(0);
                if have < n {
                    differences.push(format!("unexpected {}", describe(k)));
                }
            }
            Ok(Comparison { passed: differences.is_empty(), same_order: want == got, differences })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# comment
@ E6 4 1
V_{ω4}
⊕1 V_{ω1+ω6}
⊕1 2V_{ω2}
⊕1 V_{0}

@ E7 4 3 nodes=836
";

    #[test]
    fn parses_blocks() {
        let f = parse(SAMPLE).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].name(), "E6 W_1(4)");
        let Expected::Listing(entries) = &f[0].expected else { panic!() };
        assert_eq!(entries.len(), 4);
        assert_eq!(entries[2].multiplicity, BigUint::from(2u8));
        assert_eq!(f[1].expected, Expected::NodeCount(836));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("⊕1 V_0").is_err());
        assert!(parse("@ E6 4 1\n⊕1 V_0").is_err());
        assert!(parse("@ E6 4 1\nV_{ω4}\nV_{ω4}").is_err());
        assert!(parse("@ E6 4 1 edges=3").is_err());
        assert!(parse("@ X6 4 1").is_err());
    }

    #[test]
    fn keys_recover_increments() {
        let f = parse(SAMPLE).unwrap();
        let Expected::Listing(entries) = &f[0].expected else { panic!() };
        let rs = RootSystem::from_name("E6").unwrap();
        let keys = listing_keys(&rs, entries).unwrap();
        assert_eq!(keys[1].0, vec![RootVector::new(vec![0, 1, 1, 2, 1, 0])]);
        assert_eq!(keys[3].0, vec![RootVector::new(vec![2, 3, 4, 6, 4, 2])]);
    }
}
