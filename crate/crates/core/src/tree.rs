//! Chain labels and the decomposition tree of `W_m(ℓ)`.
//!
//! A label is a chain `0 = d_0 ≺ d_1 ≺ … ≺ d_s` of root-lattice points whose
//! increments `δ_n = d_n − d_{n−1}` are nonincreasing and such that every
//! `min(n,m)ω_ℓ − d_n` is dominant. Each label indexes one summand
//! `V_{mω_ℓ − d_s}` whose multiplicity is a product of binomials; truncating a
//! label gives another label, which makes the summands a rooted tree.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::count::{self, binomial, Count};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootVector, Weight};

/// Default cap on the number of tree nodes built.
pub const DEFAULT_NODE_LIMIT: usize = 2_000_000;

/// Above this many lattice points the box `0 ≺ δ ⪯ δ_s` is not scanned and
/// extensions come from the dominant weights below the target instead.
const BOX_SCAN_LIMIT: u64 = 4096;

/// Increments `δ_1 ⪰ δ_2 ⪰ … ⪰ δ_s` of a chain label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label {
    increments: Vec<RootVector>,
}

impl Label {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(increments: Vec<RootVector>) -> Self {
        Self { increments }
    }

    pub fn increments(&self) -> &[RootVector] {
        &self.increments
    }

    /// Length `s` of the chain.
    pub fn len(&self) -> usize {
        self.increments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.increments.is_empty()
    }

    pub fn last_increment(&self) -> Option<&RootVector> {
        self.increments.last()
    }

    /// `d_n = δ_1 + … + δ_n`.
    pub fn partial_sum(&self, rank: usize, n: usize) -> RootVector {
        self.increments[..n].iter().fold(RootVector::zero(rank), |acc, d| acc.add(d))
    }

    /// `d_s`.
    pub fn endpoint(&self, rank: usize) -> RootVector {
        self.partial_sum(rank, self.len())
    }

    pub fn extended(&self, delta: RootVector) -> Label {
        let mut increments = self.increments.clone();
        increments.push(delta);
        Label { increments }
    }

    pub fn prefix(&self, s: usize) -> Label {
        Label { increments: self.increments[..s].to_vec() }
    }

    /// Checks that the label is a valid chain for `W_m(ℓ)`.
    pub fn validate(&self, rs: &RootSystem, ell: usize, m: u32) -> Result<()> {
        rs.check_node(ell)?;
        let r = rs.rank();
        let omega = Weight::fundamental(r, ell);
        let mut d = RootVector::zero(r);
        for (i, delta) in self.increments.iter().enumerate() {
            let n = i + 1;
            if delta.rank() != r {
                return Err(Error::LengthMismatch { expected: r, got: delta.rank() });
            }
            if !delta.is_positive() {
                return Err(Error::InvalidLabel(format!("increment {n} is {delta}, not ≻ 0")));
            }
            if i > 0 && !delta.precedes_eq(&self.increments[i - 1]) {
                return Err(Error::InvalidLabel(format!("increment {n} is not ⪯ increment {i}")));
            }
            d = d.add(delta);
            let mu = omega.scale(level_weight(n, m)).sub(&rs.alpha_to_omega(&d));
            if !mu.is_dominant() {
                return Err(Error::InvalidLabel(format!("μ_{n} = {mu} is not dominant")));
            }
        }
        Ok(())
    }
}

fn level_weight(n: usize, m: u32) -> i64 {
    n.min(m as usize) as i64
}

/// Order of siblings: by height of the increment, ties in descending
/// lexicographic order. This is the order of the stored tables.
fn sibling_order(a: &RootVector, b: &RootVector) -> Ordering {
    a.height().cmp(&b.height()).then_with(|| b.cmp(a))
}

/// `∏_k binom(p_k + hat_k, hat_k)`.
fn binomial_row<C: Count>(p: &Weight, hat: &RootVector) -> Result<C> {
    let mut acc = C::one();
    for (&pk, &hk) in p.coords().iter().zip(hat.coords()) {
        if hk != 0 {
            acc = count::mul(&acc, &binomial::<C>(pk + hk, hk)?)?;
        }
    }
    Ok(acc)
}

/// Multiplicity of the summand indexed by `label`.
pub fn node_multiplicity<C: Count>(rs: &RootSystem, ell: usize, m: u32, label: &Label) -> Result<C> {
    label.validate(rs, ell, m)?;
    let r = rs.rank();
    let omega = Weight::fundamental(r, ell);
    let s = label.len();
    let zero = RootVector::zero(r);
    let mut acc = C::one();
    let mut d = RootVector::zero(r);
    for n in 1..=s {
        let delta = &label.increments[n - 1];
        d = d.add(delta);
        let next = label.increments.get(n).unwrap_or(&zero);
        let p = omega.scale(level_weight(n, m)).sub(&rs.alpha_to_omega(&d));
        acc = count::mul(&acc, &binomial_row(&p, &delta.sub(next))?)?;
    }
    Ok(acc)
}

/// Computes increments that extend a label, caching dominant-weight lists.
struct Extender<'a> {
    rs: &'a RootSystem,
    omega: Weight,
    m: u32,
    below: HashMap<Weight, Vec<Weight>>,
}

impl<'a> Extender<'a> {
    fn new(rs: &'a RootSystem, ell: usize, m: u32) -> Self {
        Self { rs, omega: Weight::fundamental(rs.rank(), ell), m, below: HashMap::new() }
    }

    /// `min(s+1, m)ω_ℓ − d_s`, the weight every `μ_{s+1}` hangs below.
    fn target(&self, s: usize, mu_s: &Weight) -> Weight {
        if s < self.m as usize {
            mu_s.add(&self.omega)
        } else {
            mu_s.clone()
        }
    }

    /// Increments `δ` with `0 ≺ δ ⪯ cap` (no cap when `s = 0`) keeping
    /// `target − δ` dominant, in sibling order.
    fn extensions(&mut self, target: &Weight, cap: Option<&RootVector>) -> Vec<RootVector> {
        let mut out = match cap {
            Some(cap) if box_size(cap) <= BOX_SCAN_LIMIT => self.scan_box(target, cap),
            _ => self.scan_dominant(target, cap),
        };
        out.sort_by(sibling_order);
        out
    }

    fn scan_dominant(&mut self, target: &Weight, cap: Option<&RootVector>) -> Vec<RootVector> {
        if !target.is_dominant() {
            return Vec::new();
        }
        let rs = self.rs;
        let below = self
            .below
            .entry(target.clone())
            .or_insert_with(|| rs.dominant_weights_below(target).expect("dominant target"));
        below
            .iter()
            .filter_map(|nu| {
                let delta = rs.omega_to_root(&target.sub(nu)).expect("same root-lattice coset");
                let fits = cap.is_none_or(|c| delta.precedes_eq(c));
                (delta.is_positive() && fits).then_some(delta)
            })
            .collect()
    }

    fn scan_box(&self, target: &Weight, cap: &RootVector) -> Vec<RootVector> {
        let r = self.rs.rank();
        let bounds = cap.coords();
        let mut out = Vec::new();
        let mut cur = vec![0i64; r];
        loop {
            let delta = RootVector::new(cur.clone());
            if !delta.is_zero() && target.sub(&self.rs.alpha_to_omega(&delta)).is_dominant() {
                out.push(delta);
            }
            let mut i = 0;
            loop {
                if i == r {
                    return out;
                }
                if cur[i] < bounds[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

fn box_size(cap: &RootVector) -> u64 {
    cap.coords().iter().fold(1u64, |acc, &c| acc.saturating_mul(c as u64 + 1))
}

/// Every increment `δ_{s+1}` that extends `label` to another valid label.
pub fn valid_extensions(rs: &RootSystem, ell: usize, m: u32, label: &Label) -> Result<Vec<RootVector>> {
    label.validate(rs, ell, m)?;
    let r = rs.rank();
    let s = label.len();
    let omega = Weight::fundamental(r, ell);
    let mu_s = omega.scale(level_weight(s, m)).sub(&rs.alpha_to_omega(&label.endpoint(r)));
    let mut ext = Extender::new(rs, ell, m);
    let target = ext.target(s, &mu_s);
    Ok(ext.extensions(&target, label.last_increment()))
}

/// One summand of the refined decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode<C> {
    pub label: Label,
    pub highest_weight: Weight,
    pub multiplicity: C,
    pub children: Vec<TreeNode<C>>,
}

impl<C> TreeNode<C> {
    pub fn depth(&self) -> usize {
        self.label.len()
    }

    /// Increment on the edge from the parent; `None` at the root.
    pub fn increment(&self) -> Option<&RootVector> {
        self.label.last_increment()
    }

    /// Nodes of the subtree in depth-first preorder.
    pub fn iter(&self) -> Preorder<'_, C> {
        Preorder { stack: vec![self] }
    }

    pub fn height(&self) -> usize {
        self.children.iter().map(|c| c.height() + 1).max().unwrap_or(0)
    }
}

pub struct Preorder<'a, C> {
    stack: Vec<&'a TreeNode<C>>,
}

impl<'a, C> Iterator for Preorder<'a, C> {
    type Item = &'a TreeNode<C>;

    fn next(&mut self) -> Option<Self::Item> {
        let node = self.stack.pop()?;
        self.stack.extend(node.children.iter().rev());
        Some(node)
    }
}

/// The full tree of `W_m(ℓ)` with its aggregated decomposition.
#[derive(Debug, Clone)]
pub struct DecompositionTree<C> {
    rs: RootSystem,
    ell: usize,
    m: u32,
    root: TreeNode<C>,
    node_count: usize,
    aggregate: BTreeMap<Weight, C>,
}

impl<C: Count> DecompositionTree<C> {
    pub fn build(rs: &RootSystem, ell: usize, m: u32) -> Result<Self> {
        Self::build_with_limit(rs, ell, m, DEFAULT_NODE_LIMIT)
    }

    /// Depth-first construction from the empty label, failing with
    /// [`Error::TreeScaleExceeded`] once more than `node_limit` nodes exist.
    pub fn build_with_limit(rs: &RootSystem, ell: usize, m: u32, node_limit: usize) -> Result<Self> {
        rs.check_node(ell)?;
        let r = rs.rank();
        let mut builder = Builder {
            rs,
            ext: Extender::new(rs, ell, m),
            m,
            omega: Weight::fundamental(r, ell),
            count: 0,
            limit: node_limit,
        };
        let root = builder.grow(Label::empty(), RootVector::zero(r), Weight::zero(r), C::one(), C::one())?;
        let node_count = builder.count;
        let tree = Self {
            rs: rs.clone(),
            ell,
            m,
            aggregate: BTreeMap::new(),
            root,
            node_count,
        };
        let aggregate = aggregate_multiplicities(&tree)?;
        Ok(Self { aggregate, ..tree })
    }

    /// Rebuilds the bookkeeping for a tree assembled elsewhere (e.g. parsed
    /// from a serialized form).
    pub fn from_root(rs: &RootSystem, ell: usize, m: u32, root: TreeNode<C>) -> Result<Self> {
        let node_count = root.iter().count();
        let tree = Self { rs: rs.clone(), ell, m, root, node_count, aggregate: BTreeMap::new() };
        let aggregate = aggregate_multiplicities(&tree)?;
        Ok(Self { aggregate, ..tree })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn node(&self) -> usize {
        self.ell
    }

    pub fn level(&self) -> u32 {
        self.m
    }

    pub fn root(&self) -> &TreeNode<C> {
        &self.root
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn aggregate(&self) -> &BTreeMap<Weight, C> {
        &self.aggregate
    }

    pub fn nodes(&self) -> Preorder<'_, C> {
        self.root.iter()
    }

    /// Sum of all node multiplicities.
    pub fn total_multiplicity(&self) -> Result<C> {
        self.nodes().try_fold(C::zero(), |acc, n| count::add(&acc, &n.multiplicity))
    }

    pub fn total_dimension(&self) -> Result<C> {
        total_dimension(self)
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    ext: Extender<'a>,
    m: u32,
    omega: Weight,
    count: usize,
    limit: usize,
}

impl Builder<'_> {
    /// `prefix` is the product of the binomial rows for `n < s`, which no
    /// extension of this label can change; `mult` is the node's own
    /// multiplicity.
    fn grow<C: Count>(
        &mut self,
        label: Label,
        d: RootVector,
        mu: Weight,
        prefix: C,
        mult: C,
    ) -> Result<TreeNode<C>> {
        self.count += 1;
        if self.count > self.limit {
            return Err(Error::TreeScaleExceeded { partial: self.count - 1, limit: self.limit });
        }
        let s = label.len();
        let target = self.ext.target(s, &mu);
        let deltas = self.ext.extensions(&target, label.last_increment());
        let mut children = Vec::with_capacity(deltas.len());
        for delta in deltas {
            let child_prefix = match label.last_increment() {
                Some(prev) => count::mul(&prefix, &binomial_row::<C>(&mu, &prev.sub(&delta))?)?,
                None => prefix.clone(),
            };
            let child_d = d.add(&delta);
            let child_mu = self
                .omega
                .scale(level_weight(s + 1, self.m))
                .sub(&self.rs.alpha_to_omega(&child_d));
            let child_mult = count::mul(&child_prefix, &binomial_row::<C>(&child_mu, &delta)?)?;
            children.push(self.grow(label.extended(delta), child_d, child_mu, child_prefix, child_mult)?);
        }
        let highest_weight = self.omega.scale(self.m as i64).sub(&self.rs.alpha_to_omega(&d));
        Ok(TreeNode { label, highest_weight, multiplicity: mult, children })
    }
}

/// Builds the decomposition tree of `W_m(ℓ)` with the default node limit.
pub fn build_tree<C: Count>(rs: &RootSystem, ell: usize, m: u32) -> Result<DecompositionTree<C>> {
    DecompositionTree::build(rs, ell, m)
}

/// Multiplicities summed over nodes sharing a highest weight.
pub fn aggregate_multiplicities<C: Count>(tree: &DecompositionTree<C>) -> Result<BTreeMap<Weight, C>> {
    let mut out: BTreeMap<Weight, C> = BTreeMap::new();
    for node in tree.nodes() {
        let slot = out.entry(node.highest_weight.clone()).or_insert_with(C::zero);
        *slot = count::add(slot, &node.multiplicity)?;
    }
    Ok(out)
}

/// `Σ multiplicity · dim V_λ` over all nodes.
pub fn total_dimension<C: Count>(tree: &DecompositionTree<C>) -> Result<C> {
    let mut total = C::zero();
    for (w, mult) in &tree.aggregate {
        let dim: C = tree.rs.weyl_dimension(w)?;
        total = count::add(&total, &count::mul(mult, &dim)?)?;
    }
    Ok(total)
}

/// Outcome of comparing the top rows of two trees of the same node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub rows: usize,
    pub nodes_compared: usize,
    pub discrepancy: Option<String>,
}

impl LiftReport {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Checks that rows `0..=m` of the trees of `W_m(ℓ)` and `W_{m2}(ℓ)` agree:
/// same labels, same multiplicities, highest weights shifted by
/// `(m2 − m)ω_ℓ`.
pub fn check_lift(rs: &RootSystem, ell: usize, m: u32, m2: u32) -> Result<LiftReport> {
    check_lift_with_limit(rs, ell, m, m2, DEFAULT_NODE_LIMIT)
}

pub fn check_lift_with_limit(rs: &RootSystem, ell: usize, m: u32, m2: u32, node_limit: usize) -> Result<LiftReport> {
    assert!(m2 > m, "check_lift needs m2 > m");
    let low: DecompositionTree<num_bigint::BigUint> = DecompositionTree::build_with_limit(rs, ell, m, node_limit)?;
    let high: DecompositionTree<num_bigint::BigUint> = DecompositionTree::build_with_limit(rs, ell, m2, node_limit)?;
    let rows = m as usize;
    let shift = Weight::fundamental(rs.rank(), ell).scale((m2 - m) as i64);
    let top_rows = |t: &DecompositionTree<num_bigint::BigUint>| -> BTreeMap<Label, (Weight, num_bigint::BigUint)> {
        t.nodes()
            .filter(|n| n.depth() <= rows)
            .map(|n| (n.label.clone(), (n.highest_weight.clone(), n.multiplicity.clone())))
            .collect()
    };
    let a = top_rows(&low);
    let b = top_rows(&high);
    let mut discrepancy = None;
    for (label, (hw, mult)) in &a {
        match b.get(label) {
            None => {
                discrepancy = Some(format!("label {label:?} of level {m} has no lift at level {m2}"));
            }
            Some((hw2, mult2)) if *hw2 != hw.add(&shift) || mult2 != mult => {
                discrepancy = Some(format!(
                    "label {label:?}: {mult}V_{{{hw}}} at level {m} lifts to {mult2}V_{{{hw2}}} at level {m2}"
                ));
            }
            _ => {}
        }
        if discrepancy.is_some() {
            break;
        }
    }
    if discrepancy.is_none() {
        if let Some(label) = b.keys().find(|l| !a.contains_key(*l)) {
            discrepancy = Some(format!("label {label:?} in rows 0..={m} at level {m2} has no preimage"));
        }
    }
    Ok(LiftReport { rows, nodes_compared: a.len(), discrepancy })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn rs(name: &str) -> RootSystem {
        RootSystem::from_name(name).unwrap()
    }

    fn rv(c: &[i64]) -> RootVector {
        RootVector::new(c.to_vec())
    }

    #[test]
    fn level_zero_is_a_single_node() {
        let e6 = rs("E6");
        assert!(valid_extensions(&e6, 4, 0, &Label::empty()).unwrap().is_empty());
        let t: DecompositionTree<u64> = build_tree(&e6, 4, 0).unwrap();
        assert_eq!(t.node_count(), 1);
        assert!(t.root().highest_weight.is_zero());
    }

    #[test]
    fn root_extensions_of_e6_w2_4() {
        let e6 = rs("E6");
        let ext = valid_extensions(&e6, 4, 2, &Label::empty()).unwrap();
        assert_eq!(
            ext,
            vec![rv(&[0, 1, 1, 2, 1, 0]), rv(&[1, 1, 2, 3, 2, 1]), rv(&[2, 3, 4, 6, 4, 2])]
        );
        let label = Label::new(vec![rv(&[1, 1, 2, 3, 2, 1])]);
        let ext = valid_extensions(&e6, 4, 2, &label).unwrap();
        assert_eq!(
            ext,
            vec![rv(&[0, 1, 0, 1, 0, 0]), rv(&[0, 1, 1, 2, 1, 0]), rv(&[1, 1, 2, 3, 2, 1])]
        );
    }

    #[test]
    fn box_and_dominant_strategies_agree() {
        for (name, ell, m) in [("E6", 4, 3), ("E7", 3, 2), ("E7", 4, 2), ("D6", 4, 3), ("E8", 5, 1)] {
            let r = rs(name);
            let t: DecompositionTree<BigUint> = build_tree(&r, ell, m).unwrap();
            let mut ext = Extender::new(&r, ell, m);
            for node in t.nodes() {
                let Some(cap) = node.increment() else { continue };
                if box_size(cap) > 100_000 {
                    continue;
                }
                let s = node.depth();
                let mu = Weight::fundamental(r.rank(), ell)
                    .scale(level_weight(s, m))
                    .sub(&r.alpha_to_omega(&node.label.endpoint(r.rank())));
                let target = ext.target(s, &mu);
                let mut a = ext.scan_box(&target, cap);
                let mut b = ext.scan_dominant(&target, Some(cap));
                a.sort();
                b.sort();
                assert_eq!(a, b, "{name} ℓ={ell} m={m} at {:?}", node.label);
            }
        }
    }

    #[test]
    fn multiplicity_examples() {
        let e6 = rs("E6");
        let one = rv(&[1, 1, 2, 3, 2, 1]);
        assert_eq!(node_multiplicity::<u64>(&e6, 4, 2, &Label::empty()).unwrap(), 1);
        assert_eq!(node_multiplicity::<u64>(&e6, 4, 2, &Label::new(vec![one.clone()])).unwrap(), 2);
        assert_eq!(
            node_multiplicity::<u64>(&e6, 4, 2, &Label::new(vec![one.clone(), one.clone()])).unwrap(),
            3
        );
        let bad = Label::new(vec![rv(&[0, 1, 0, 0, 0, 0])]);
        assert!(matches!(node_multiplicity::<u64>(&e6, 4, 2, &bad), Err(Error::InvalidLabel(_))));
    }

    #[test]
    fn incremental_multiplicities_match_direct_formula() {
        for (name, ell, m) in [("E6", 4, 3), ("E7", 4, 2), ("E8", 4, 1), ("D5", 3, 3)] {
            let r = rs(name);
            let t: DecompositionTree<BigUint> = build_tree(&r, ell, m).unwrap();
            for node in t.nodes() {
                assert_eq!(node.multiplicity, node_multiplicity::<BigUint>(&r, ell, m, &node.label).unwrap());
            }
        }
    }

    #[test]
    fn e6_w2_4_tree() {
        let e6 = rs("E6");
        let t: DecompositionTree<u64> = build_tree(&e6, 4, 2).unwrap();
        assert_eq!(t.node_count(), 12);
        assert_eq!(t.total_multiplicity().unwrap(), 17);
        assert_eq!(t.aggregate()[&Weight::fundamental(6, 4)], 2);
        let omega4_nodes = t.nodes().filter(|n| n.highest_weight == Weight::fundamental(6, 4)).count();
        assert_eq!(omega4_nodes, 2);
    }

    #[test]
    fn type_a_stays_irreducible() {
        for n in 1..=6 {
            let r = rs(&format!("A{n}"));
            for ell in 1..=n {
                for m in 0..=4 {
                    let t: DecompositionTree<u64> = build_tree(&r, ell, m).unwrap();
                    assert_eq!(t.node_count(), 1, "A{n} ℓ={ell} m={m}");
                }
            }
        }
    }

    #[test]
    fn aggregates_and_dimensions() {
        let e6 = rs("E6");
        let t: DecompositionTree<u64> = build_tree(&e6, 2, 3).unwrap();
        let w2 = Weight::fundamental(6, 2);
        assert_eq!(
            t.aggregate(),
            &BTreeMap::from([(w2.scale(3), 1), (w2.scale(2), 1), (w2.clone(), 1), (Weight::zero(6), 1)])
        );
        let t: DecompositionTree<u64> = build_tree(&e6, 2, 1).unwrap();
        assert_eq!(t.total_dimension().unwrap(), 79);

        let e8 = rs("E8");
        let t: DecompositionTree<u64> = build_tree(&e8, 8, 1).unwrap();
        assert_eq!(
            t.aggregate(),
            &BTreeMap::from([(Weight::fundamental(8, 8), 1), (Weight::zero(8), 1)])
        );
        assert_eq!(t.total_dimension().unwrap(), 249);

        let a1 = rs("A1");
        let t: DecompositionTree<u64> = build_tree(&a1, 1, 3).unwrap();
        assert_eq!(t.total_dimension().unwrap(), 4);

        let d4 = rs("D4");
        let t: DecompositionTree<u64> = build_tree(&d4, 2, 2).unwrap();
        let w = Weight::fundamental(4, 2);
        assert_eq!(
            t.aggregate(),
            &BTreeMap::from([(w.scale(2), 1), (w.clone(), 1), (Weight::zero(4), 1)])
        );
    }

    #[test]
    fn node_limit_trips() {
        let e7 = rs("E7");
        let err = DecompositionTree::<u64>::build_with_limit(&e7, 4, 3, 100).unwrap_err();
        assert_eq!(err, Error::TreeScaleExceeded { partial: 100, limit: 100 });
    }

    #[test]
    fn lift_examples() {
        let e6 = rs("E6");
        let rep = check_lift(&e6, 4, 2, 3).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let t: DecompositionTree<u64> = build_tree(&e6, 4, 3).unwrap();
        let node = t
            .nodes()
            .find(|n| n.label == Label::new(vec![rv(&[1, 1, 2, 3, 2, 1])]))
            .unwrap();
        assert_eq!(node.highest_weight, Weight::new(vec![0, 1, 0, 2, 0, 0]));
        assert_eq!(node.multiplicity, 2);

        assert!(check_lift(&rs("A3"), 2, 1, 2).unwrap().passed());
        assert!(check_lift(&rs("D4"), 2, 1, 2).unwrap().passed());
    }

    #[test]
    fn label_validation() {
        let e6 = rs("E6");
        let a = rv(&[1, 1, 2, 3, 2, 1]);
        let b = rv(&[2, 3, 4, 6, 4, 2]);
        // increasing increments are rejected
        let l = Label::new(vec![a.clone(), b.clone()]);
        assert!(l.validate(&e6, 4, 2).is_err());
        assert!(Label::new(vec![b, a.clone()]).validate(&e6, 4, 2).is_ok());
        // a third step overshoots level 2
        assert!(Label::new(vec![a.clone(), a.clone(), a]).validate(&e6, 4, 2).is_err());
        assert!(Label::new(vec![RootVector::zero(6)]).validate(&e6, 4, 2).is_err());
    }
}
