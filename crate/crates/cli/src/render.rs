//! Text renderings of a decomposition tree and the weight syntax they use.

use std::fmt::Write;

use kr_decomp::rootsys::Weight;
use kr_decomp::{Node, Tree};
use num_bigint::BigUint;
use num_traits::One;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tree,
    Flat,
    Json,
}

/// `V_{2ω4}`, `V_0` for the trivial module.
pub fn module(w: &Weight) -> String {
    if w.is_zero() {
        "V_0".to_string()
    } else {
        format!("V_{{{w}}}")
    }
}

/// `2V_{ω2+ω4}`; the multiplicity is omitted when it is one.
pub fn summand(mult: &BigUint, w: &Weight) -> String {
    if mult.is_one() {
        module(w)
    } else {
        format!("{mult}{}", module(w))
    }
}

/// `⊕₁₂` style level marker.
pub fn level_marker(k: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let sub: String = k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect();
    format!("⊕{sub}")
}

fn dimension(tree: &Tree, w: &Weight) -> BigUint {
    tree.root_system().weyl_dimension(w).expect("highest weights are dominant")
}

/// The summands in depth-first order, each after its level marker.
pub fn flat(tree: &Tree, dims: bool) -> String {
    let mut out = String::new();
    for node in tree.nodes() {
        if node.depth() > 0 {
            write!(out, " {} ", level_marker(node.depth())).unwrap();
        }
        out.push_str(&summand(&node.multiplicity, &node.highest_weight));
        if dims {
            write!(out, " [{}]", dimension(tree, &node.highest_weight)).unwrap();
        }
    }
    out.push('\n');
    if dims {
        writeln!(out, "total dimension {}", tree.total_dimension().expect("BigUint never overflows")).unwrap();
    }
    out
}

/// One node per line, indented by depth, with the edge increment in
/// α-coordinates before each non-root summand.
pub fn indented(tree: &Tree, dims: bool) -> String {
    fn walk(tree: &Tree, node: &Node, dims: bool, out: &mut String) {
        out.push_str(&"  ".repeat(node.depth()));
        if let Some(delta) = node.increment() {
            write!(out, "{delta} ").unwrap();
        }
        out.push_str(&summand(&node.multiplicity, &node.highest_weight));
        if dims {
            write!(out, "  dim {}", dimension(tree, &node.highest_weight)).unwrap();
        }
        out.push('\n');
        for child in &node.children {
            walk(tree, child, dims, out);
        }
    }
    let mut out = String::new();
    walk(tree, tree.root(), dims, &mut out);
    if dims {
        writeln!(out, "total dimension {}", tree.total_dimension().expect("BigUint never overflows")).unwrap();
    }
    out
}

/// Parses `2ω1+ω6`, `-ω2+ω4`, `0` (also with `w` in place of `ω`).
pub fn parse_weight(text: &str, rank: usize) -> Result<Weight, CliError> {
    let bad = || CliError::Parse(format!("cannot read weight {text:?}"));
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('w', "ω");
    let mut coords = vec![0i64; rank];
    if t == "0" {
        return Ok(Weight::new(coords));
    }
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let sign = match rest.chars().next() {
            Some('-') => {
                rest = &rest[1..];
                -1
            }
            Some('+') => {
                rest = &rest[1..];
                1
            }
            _ => 1,
        };
        let (coef, after) = rest.split_once('ω').ok_or_else(bad)?;
        let coef: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
        let end = after.find(['+', '-']).unwrap_or(after.len());
        let node: usize = after[..end].parse().map_err(|_| bad())?;
        if !(1..=rank).contains(&node) {
            return Err(bad());
        }
        coords[node - 1] += sign * coef;
        rest = &after[end..];
    }
    Ok(Weight::new(coords))
}

/// Parses `V_{…}`, `V_0` or `V_{0}` with an optional multiplicity prefix.
pub fn parse_summand(text: &str, rank: usize) -> Result<(BigUint, Weight), CliError> {
    let t = text.trim();
    let (mult, module) = t.split_at(t.find('V').ok_or_else(|| CliError::Parse(format!("no module in {t:?}")))?);
    let mult = if mult.is_empty() {
        BigUint::one()
    } else {
        mult.parse().map_err(|_| CliError::Parse(format!("bad multiplicity in {t:?}")))?
    };
    let inner = module
        .strip_prefix("V_")
        .map(|s| s.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(s))
        .ok_or_else(|| CliError::Parse(format!("bad module {module:?}")))?;
    Ok((mult, parse_weight(inner, rank)?))
}
