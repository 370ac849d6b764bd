//! Machine-readable form of a decomposition tree.
//!
//! Multiplicities are decimal strings since they are unbounded.

use kr_decomp::rootsys::{RootSystem, RootVector, Weight};
use kr_decomp::tree::{node_multiplicity, DecompositionTree, Label, TreeNode};
use kr_decomp::{Multiplicity, Node, Tree};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub algebra: String,
    pub node: usize,
    pub level: u32,
    pub tree: Entry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub delta: Option<Vec<i64>>,
    pub hw_omega: Vec<i64>,
    pub multiplicity: String,
    pub children: Vec<Entry>,
}

pub fn to_document(tree: &Tree) -> Document {
    fn entry(node: &Node) -> Entry {
        Entry {
            delta: node.increment().map(|d| d.coords().to_vec()),
            hw_omega: node.highest_weight.coords().to_vec(),
            multiplicity: node.multiplicity.to_string(),
            children: node.children.iter().map(entry).collect(),
        }
    }
    Document {
        algebra: tree.root_system().id().to_string(),
        node: tree.node(),
        level: tree.level(),
        tree: entry(tree.root()),
    }
}

pub fn render(tree: &Tree) -> String {
    let mut s = serde_json::to_string_pretty(&to_document(tree)).expect("plain data serializes");
    s.push('\n');
    s
}

/// Rebuilds a tree, checking that increments, highest weights and
/// multiplicities agree.
pub fn parse(text: &str) -> Result<Tree, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let rs = RootSystem::from_name(&doc.algebra)?;
    let r = rs.rank();
    let top = rs.fundamental_weight(doc.node)?.scale(doc.level as i64);

    fn build(rs: &RootSystem, doc: &Document, e: &Entry, label: Label, expected: &Weight) -> Result<Node, CliError> {
        let hw = Weight::new(e.hw_omega.clone());
        if hw != *expected {
            return Err(CliError::Parse(format!("highest weight {hw} does not match its increments")));
        }
        let multiplicity = e
            .multiplicity
            .parse()
            .map_err(|_| CliError::Parse(format!("bad multiplicity {:?}", e.multiplicity)))?;
        let m: Multiplicity = node_multiplicity(rs, doc.node, doc.level, &label).map_err(|e| CliError::Parse(e.to_string()))?;
        if m != multiplicity {
            return Err(CliError::Parse(format!("multiplicity {multiplicity} of {hw} should be {m}")));
        }
        let children = e
            .children
            .iter()
            .map(|c| {
                let delta = RootVector::new(
                    c.delta.clone().ok_or_else(|| CliError::Parse("child without delta".into()))?,
                );
                if delta.rank() != rs.rank() {
                    return Err(CliError::Parse(format!("delta {delta} has the wrong length")));
                }
                let next = expected.sub(&rs.alpha_to_omega(&delta));
                build(rs, doc, c, label.extended(delta), &next)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TreeNode { label, highest_weight: hw, multiplicity, children })
    }

    if doc.tree.delta.is_some() || doc.tree.hw_omega.len() != r {
        return Err(CliError::Parse("root must have no delta and a full-rank weight".into()));
    }
    let root = build(&rs, &doc, &doc.tree, Label::empty(), &top)?;
    Ok(DecompositionTree::from_root(&rs, doc.node, doc.level, root)?)
}
