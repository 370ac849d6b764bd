//! Brute-force evaluation of the fermionic multiplicity formula.
//!
//! For `λ = mω_ℓ − Σ n_i α_i` the multiplicity of `V_λ` is the sum, over
//! every tuple of partitions `ν^{(i)} ⊢ n_i`, of
//! `∏_{n≥1} ∏_k binom(P^{(k)}_n(ν) + ν^{(k)}_n, ν^{(k)}_n)` where
//! `P^{(k)}_n(ν) = min(n,m)δ_{kℓ} − Σ_j c_jk Σ_h min(n,h) ν^{(j)}_h`.
//!
//! This is exponential in `Σ n_i` and exists to cross-check the tree
//! construction in [`crate::tree`].

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::count::{self, binomial, Count};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Default refusal threshold on the number of partition tuples.
pub const DEFAULT_ORACLE_LIMIT: u64 = 50_000_000;

/// How `binom(P + 0, 0)` is evaluated when `P < 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroRowRule {
    /// `binom(a, b) = 0` whenever `a < b`, including `b = 0`. A tuple then
    /// contributes only if every vacancy number `P^{(k)}_n` is nonnegative.
    Strict,
    /// `binom(a, 0) = 1` for every `a`, so only rows that actually occur in
    /// `ν` can make a term vanish.
    #[default]
    UnitAtZero,
}

/// All partitions of `n` with parts in nonincreasing order, listed in
/// reverse lexicographic order (`[n]` first).
pub fn partitions_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(n, n, &mut cur, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    // p(k) via parts bounded by j, one part size at a time.
    let mut p = vec![BigUint::from(0u32); n + 1];
    p[0] = BigUint::one();
    for part in 1..=n {
        for k in part..=n {
            let prev = p[k - part].clone();
            p[k] += prev;
        }
    }
    p.swap_remove(n)
}

/// A partition for every node of the Dynkin diagram, stored by part
/// multiplicities: `rows[k][h - 1] = ν^{(k+1)}_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionTuple {
    rows: Vec<Vec<u32>>,
}

impl PartitionTuple {
    /// Builds the tuple from explicit part lists, one per node.
    pub fn from_parts(parts: &[Vec<usize>]) -> Self {
        let rows = parts
            .iter()
            .map(|p| {
                let mut counts = vec![0u32; p.iter().copied().max().unwrap_or(0)];
                for &h in p {
                    counts[h - 1] += 1;
                }
                counts
            })
            .collect();
        Self { rows }
    }

    /// Builds the tuple from part multiplicities `counts[k][h - 1]`.
    pub fn from_counts(counts: Vec<Vec<u32>>) -> Self {
        Self { rows: counts }
    }

    /// `ν^{(k)}_h` with 1-based `k` and `h`.
    pub fn parts_of_size(&self, k: usize, h: usize) -> u32 {
        self.rows[k - 1].get(h.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `Σ_h h ν^{(k)}_h`.
    pub fn size(&self, k: usize) -> usize {
        self.rows[k - 1].iter().enumerate().map(|(i, &c)| (i + 1) * c as usize).sum()
    }

    pub fn largest_part(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|r| r.iter().rposition(|&c| c > 0).map(|i| i + 1))
            .max()
            .unwrap_or(0)
    }

    /// Boxes in the first `n` columns of `ν^{(k)}`: `Σ_h min(n, h) ν^{(k)}_h`.
    fn boxes_in_columns(&self, k: usize, n: usize) -> i64 {
        self.rows[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &c)| (n.min(i + 1) * c as usize) as i64)
            .sum()
    }
}

/// One coefficient query: the multiplicity of `λ = mω_ℓ − Σ n_i α_i` in
/// `W_m(ℓ)`.
#[derive(Debug, Clone)]
pub struct MultiplicityQuery<'a> {
    rs: &'a RootSystem,
    ell: usize,
    m: i64,
    n: Vec<i64>,
}

impl<'a> MultiplicityQuery<'a> {
    pub fn new(rs: &'a RootSystem, ell: usize, m: u32, n: Vec<i64>) -> Result<Self> {
        rs.check_node(ell)?;
        if n.len() != rs.rank() {
            return Err(Error::LengthMismatch { expected: rs.rank(), got: n.len() });
        }
        if n.iter().any(|&x| x < 0) {
            return Err(Error::InvalidLabel(format!("negative root coordinates {n:?}")));
        }
        Ok(Self { rs, ell, m: m as i64, n })
    }

    pub fn lambda(&self) -> Weight {
        let d = crate::rootsys::RootVector::new(self.n.clone());
        Weight::fundamental(self.rs.rank(), self.ell)
            .scale(self.m)
            .sub(&self.rs.alpha_to_omega(&d))
    }

    pub fn root_coords(&self) -> &[i64] {
        &self.n
    }
}

/// `P^{(k)}_n(ν)` with 1-based `k` and `n ≥ 1`.
pub fn p_value(q: &MultiplicityQuery<'_>, nu: &PartitionTuple, k: usize, n: usize) -> i64 {
    let r = q.rs.rank();
    let own = if k == q.ell { (n as i64).min(q.m) } else { 0 };
    let sub: i64 = (1..=r)
        .map(|j| q.rs.cartan(j - 1, k - 1) * nu.boxes_in_columns(j, n))
        .sum();
    own - sub
}

/// Number of partition tuples the oracle would visit for `q`.
pub fn tuple_count(q: &MultiplicityQuery<'_>) -> BigUint {
    q.n.iter().map(|&x| partition_count(x as usize)).product()
}

fn tuple_term<C: Count>(q: &MultiplicityQuery<'_>, nu: &PartitionTuple, rule: ZeroRowRule) -> Result<C> {
    let r = q.rs.rank();
    // Beyond this row every P^{(k)}_n equals the ω_k-coordinate of λ and
    // every ν^{(k)}_n is zero.
    let last = nu.largest_part().max(q.m as usize) + 1;
    let mut acc = C::one();
    for n in 1..=last {
        for k in 1..=r {
            let rows = nu.parts_of_size(k, n) as i64;
            if rows == 0 && rule == ZeroRowRule::UnitAtZero {
                continue;
            }
            let p = p_value(q, nu, k, n);
            let b: C = binomial(p + rows, rows)?;
            if b.is_zero() {
                return Ok(C::zero());
            }
            acc = count::mul(&acc, &b)?;
        }
    }
    Ok(acc)
}

/// `Z(ℓ, m | n_1, …, n_r)` by summation over all partition tuples.
pub fn z_multiplicity<C: Count>(q: &MultiplicityQuery<'_>) -> Result<C> {
    z_multiplicity_with(q, ZeroRowRule::default())
}

pub fn z_multiplicity_with<C: Count>(q: &MultiplicityQuery<'_>, rule: ZeroRowRule) -> Result<C> {
    let per_node: Vec<Vec<Vec<usize>>> = q.n.iter().map(|&x| partitions_of(x as usize)).collect();
    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); q.rs.rank()];
    let mut total = C::zero();
    sum_tuples(q, &per_node, 0, &mut chosen, rule, &mut total)?;
    Ok(total)
}

fn sum_tuples<C: Count>(
    q: &MultiplicityQuery<'_>,
    per_node: &[Vec<Vec<usize>>],
    k: usize,
    chosen: &mut Vec<Vec<usize>>,
    rule: ZeroRowRule,
    total: &mut C,
) -> Result<()> {
    if k == per_node.len() {
        let term: C = tuple_term(q, &PartitionTuple::from_parts(chosen), rule)?;
        *total = count::add(total, &term)?;
        return Ok(());
    }
    for p in &per_node[k] {
        chosen[k].clone_from(p);
        sum_tuples(q, per_node, k + 1, chosen, rule, total)?;
    }
    Ok(())
}

/// The full decomposition of `W_m(ℓ)` by brute force: every dominant
/// `λ ⪯ mω_ℓ` with nonzero multiplicity.
///
/// Refuses with [`Error::OracleScaleExceeded`] when some `λ` would need more
/// than `limit` partition tuples.
pub fn full_decomposition_oracle<C: Count>(
    rs: &RootSystem,
    ell: usize,
    m: u32,
    limit: u64,
) -> Result<BTreeMap<Weight, C>> {
    full_decomposition_oracle_with(rs, ell, m, limit, ZeroRowRule::default())
}

pub fn full_decomposition_oracle_with<C: Count>(
    rs: &RootSystem,
    ell: usize,
    m: u32,
    limit: u64,
    rule: ZeroRowRule,
) -> Result<BTreeMap<Weight, C>> {
    rs.check_node(ell)?;
    let top = Weight::fundamental(rs.rank(), ell).scale(m as i64);
    let mut queries = Vec::new();
    for mu in rs.dominant_weights_below(&top)? {
        let n = rs
            .omega_to_root(&top.sub(&mu))
            .expect("dominant weights below lie in the same root-lattice coset");
        let q = MultiplicityQuery::new(rs, ell, m, n.coords().to_vec())?;
        let tuples = tuple_count(&q);
        if tuples.to_u64().is_none_or(|t| t > limit) {
            return Err(Error::OracleScaleExceeded { tuples: tuples.to_string(), limit });
        }
        queries.push((mu, q));
    }
    let mut out = BTreeMap::new();
    for (mu, q) in queries {
        let z: C = z_multiplicity_with(&q, rule)?;
        if !z.is_zero() {
            out.insert(mu, z);
        }
    }
    Ok(out)
}
