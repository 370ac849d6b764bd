//! Growth of `dim W_m(ℓ)` in `m`: path-types, provision profiles, the
//! `g`-value and the degree of polynomial growth.
//!
//! A path-type is the strictly decreasing list `Δ_1 ≻ … ≻ Δ_t` of distinct
//! increments along a chain label. `Δ_i` provides `ω_k` when the
//! `ω_k`-coordinate of `ω_ℓ − Δ_i` is positive and requires it when that
//! coordinate is negative; a path-type occurs in the tree exactly when each
//! requirement was provided by an earlier step.

use std::collections::VecDeque;
use std::fmt;
use std::rc::Rc;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{Error, Result};
use crate::rootsys::{inner, Family, Rational, RootSystem, RootVector, Weight};

/// Default cap on search work (memoized states plus lattice points visited).
pub const DEFAULT_SEARCH_BUDGET: usize = 20_000_000;

/// The threshold above which every fundamental weight of `E8` has its growth
/// given by twice its height minus 120, in α-coordinates.
pub const E8_XI: [i64; 8] = [4, 8, 10, 14, 12, 8, 6, 2];

/// Strictly decreasing increments `Δ_1 ≻ … ≻ Δ_t`.
///
/// The empty path-type stands for the irreducible case, where no increment
/// is possible at all.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathType {
    deltas: Vec<RootVector>,
}

impl PathType {
    pub fn new(deltas: Vec<RootVector>) -> Result<Self> {
        for (i, d) in deltas.iter().enumerate() {
            if !d.is_positive() {
                return Err(Error::InvalidPathType(format!("Δ_{} = {d} is not ≻ 0", i + 1)));
            }
            if i > 0 && !d.strictly_precedes(&deltas[i - 1]) {
                return Err(Error::InvalidPathType(format!("Δ_{} does not lie strictly below Δ_{i}", i + 1)));
            }
        }
        Ok(Self { deltas })
    }

    /// Builds a path-type from increments written as weights.
    pub fn from_weights(rs: &RootSystem, weights: &[Weight]) -> Result<Self> {
        let deltas = weights
            .iter()
            .map(|w| {
                rs.omega_to_root(w)
                    .ok_or_else(|| Error::InvalidPathType(format!("{w} is not in the root lattice")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(deltas)
    }

    pub fn deltas(&self) -> &[RootVector] {
        &self.deltas
    }

    pub fn len(&self) -> usize {
        self.deltas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.deltas.is_empty()
    }

    pub fn weights(&self, rs: &RootSystem) -> Vec<Weight> {
        self.deltas.iter().map(|d| rs.alpha_to_omega(d)).collect()
    }

    /// Renders the path as `ω4 ≻ ω4-ω2 ≻ …`.
    pub fn display<'a>(&'a self, rs: &'a RootSystem) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a PathType, &'a RootSystem);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_empty() {
                    return f.write_str("(empty)");
                }
                for (i, w) in self.0.weights(self.1).iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ≻ ")?;
                    }
                    write!(f, "{w}")?;
                }
                Ok(())
            }
        }
        Show(self, rs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provision {
    Provides,
    Requires,
    Neutral,
}

/// Sign pattern of `ω_ℓ − Δ` in ω-coordinates, indexed by `k − 1`.
pub fn classify(rs: &RootSystem, ell: usize, delta: &RootVector) -> Result<Vec<Provision>> {
    rs.check_node(ell)?;
    let diff = rs.fundamental_weight(ell)?.sub(&rs.try_alpha_to_omega(delta)?);
    Ok(diff
        .coords()
        .iter()
        .map(|&c| match c.signum() {
            1 => Provision::Provides,
            -1 => Provision::Requires,
            _ => Provision::Neutral,
        })
        .collect())
}

/// Bitmasks over `k − 1` of the fundamental weights provided and required.
fn masks(rs: &RootSystem, omega: &Weight, delta: &RootVector) -> (u32, u32) {
    let diff = omega.sub(&rs.alpha_to_omega(delta));
    let mut provides = 0;
    let mut requires = 0;
    for (k, &c) in diff.coords().iter().enumerate() {
        if c > 0 {
            provides |= 1 << k;
        } else if c < 0 {
            requires |= 1 << k;
        }
    }
    (provides, requires)
}

fn check_rank(rs: &RootSystem, pt: &PathType) -> Result<()> {
    match pt.deltas.iter().find(|d| d.rank() != rs.rank()) {
        Some(d) => Err(Error::LengthMismatch { expected: rs.rank(), got: d.rank() }),
        None => Ok(()),
    }
}

/// Whether every fundamental weight required by some `Δ_n` was provided by
/// an earlier `Δ_k`.
pub fn is_valid_path_type(rs: &RootSystem, ell: usize, pt: &PathType) -> Result<bool> {
    rs.check_node(ell)?;
    check_rank(rs, pt)?;
    let omega = Weight::fundamental(rs.rank(), ell);
    let mut provided = 0u32;
    for d in &pt.deltas {
        let (p, q) = masks(rs, &omega, d);
        if q & !provided != 0 {
            return Ok(false);
        }
        provided |= p;
    }
    Ok(true)
}

/// `f(k)` for each `k`: the 0-based index of the first `Δ` providing `ω_k`.
pub fn first_providers(rs: &RootSystem, ell: usize, pt: &PathType) -> Result<Vec<Option<usize>>> {
    rs.check_node(ell)?;
    check_rank(rs, pt)?;
    let omega = Weight::fundamental(rs.rank(), ell);
    let mut first = vec![None; rs.rank()];
    for (i, d) in pt.deltas.iter().enumerate() {
        let (p, _) = masks(rs, &omega, d);
        for (k, slot) in first.iter_mut().enumerate() {
            if slot.is_none() && p & (1 << k) != 0 {
                *slot = Some(i);
            }
        }
    }
    Ok(first)
}

/// `t` plus, for each provided `ω_k`, the `α_k`-coordinate of the step that
/// first provides it.
pub fn g_value(rs: &RootSystem, ell: usize, pt: &PathType) -> Result<u64> {
    if !is_valid_path_type(rs, ell, pt)? {
        return Err(Error::InvalidPathType(format!(
            "{} requires a weight before it is provided",
            pt.display(rs)
        )));
    }
    let first = first_providers(rs, ell, pt)?;
    let provided: i64 = first
        .iter()
        .enumerate()
        .filter_map(|(k, f)| f.map(|i| pt.deltas[i].coords()[k]))
        .sum();
    Ok(pt.len() as u64 + provided as u64)
}

/// Number of positive roots not orthogonal to every highest weight of the
/// nodes of this path-type. Those weights are the nonnegative combinations
/// of `ω_ℓ` and the `ω_ℓ − Δ_i`.
pub fn half_orbit_dim(rs: &RootSystem, ell: usize, pt: &PathType) -> Result<u64> {
    rs.check_node(ell)?;
    check_rank(rs, pt)?;
    let omega = Weight::fundamental(rs.rank(), ell);
    let generators: Vec<Weight> = std::iter::once(omega.clone())
        .chain(pt.deltas.iter().map(|d| omega.sub(&rs.alpha_to_omega(d))))
        .collect();
    Ok(rs
        .positive_roots()
        .iter()
        .filter(|a| generators.iter().any(|w| inner(w, a) != 0))
        .count() as u64)
}

/// Largest rank searched in [`GrowthMode::Auto`]. The search space of a
/// classical algebra grows quickly with the rank, while the closed forms
/// cover every rank.
pub const AUTO_SEARCH_MAX_RANK: usize = 8;

/// How `growth_degree` obtains its path-type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GrowthMode {
    /// Search, except for the interior nodes of `E8` and classical algebras
    /// of rank above [`AUTO_SEARCH_MAX_RANK`], where the explicit
    /// construction is used; also falls back to it if the budget runs out.
    #[default]
    Auto,
    /// Exhaustive search only.
    Search,
    /// The explicit construction whenever one is known, else search.
    Fixture,
}

/// Comparison of the `g`-maximizing path-type with the best `g + ½dim O`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeCheck {
    Consistent,
    /// Some path-type has larger `g + half_orbit_dim` than the reported one.
    Discrepancy { degree: u64, path_type: PathType },
    /// Not computed (fixture mode or budget exhausted).
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthReport {
    pub best_path_type: PathType,
    pub g: u64,
    pub half_orbit_dim: u64,
    pub degree: u64,
    pub fixture_derived: bool,
    pub degree_check: DegreeCheck,
    /// Work units spent by the search, zero in fixture mode.
    pub work: usize,
}

/// Finds a path-type maximizing `g` and reports the growth degree
/// `g + ½dim O`.
pub fn growth_degree(rs: &RootSystem, ell: usize, budget: usize, mode: GrowthMode) -> Result<GrowthReport> {
    rs.check_node(ell)?;
    let use_fixture = match mode {
        GrowthMode::Search => false,
        GrowthMode::Fixture => true,
        GrowthMode::Auto => is_e8_interior(rs, ell) || rs.rank() > AUTO_SEARCH_MAX_RANK,
    };
    if use_fixture {
        if let Some(pt) = fixture_path_type(rs, ell)? {
            return report_from_fixture(rs, ell, pt);
        }
    }
    let fallback = |e: Error| -> Result<GrowthReport> {
        if mode == GrowthMode::Search {
            return Err(e);
        }
        match fixture_path_type(rs, ell)? {
            Some(pt) => report_from_fixture(rs, ell, pt),
            None => Err(e),
        }
    };
    let mut search = match Search::new(rs, ell) {
        Ok(s) => s.with_budget(budget),
        Err(e @ Error::SearchUnsupported(_)) => return fallback(e),
        Err(e) => return Err(e),
    };
    let pt = match search.best_path_type() {
        Ok(pt) => pt,
        Err(e @ (Error::SearchBudgetExceeded { .. } | Error::SearchUnsupported(_))) => return fallback(e),
        Err(e) => return Err(e),
    };
    let g = g_value(rs, ell, &pt)?;
    let h = half_orbit_dim(rs, ell, &pt)?;
    let degree_check = match search.max_degree() {
        Ok((degree, _)) if degree == g + h => DegreeCheck::Consistent,
        Ok((degree, path_type)) => DegreeCheck::Discrepancy { degree, path_type },
        Err(Error::SearchBudgetExceeded { .. } | Error::SearchUnsupported(_)) => DegreeCheck::Skipped,
        Err(e) => return Err(e),
    };
    Ok(GrowthReport {
        best_path_type: pt,
        g,
        half_orbit_dim: h,
        degree: g + h,
        fixture_derived: false,
        degree_check,
        work: search.work,
    })
}

fn report_from_fixture(rs: &RootSystem, ell: usize, pt: PathType) -> Result<GrowthReport> {
    let g = g_value(rs, ell, &pt)?;
    let h = half_orbit_dim(rs, ell, &pt)?;
    Ok(GrowthReport {
        best_path_type: pt,
        g,
        half_orbit_dim: h,
        degree: g + h,
        fixture_derived: true,
        degree_check: DegreeCheck::Skipped,
        work: 0,
    })
}

fn is_e8_interior(rs: &RootSystem, ell: usize) -> bool {
    rs.id().family() == Family::E && rs.rank() == 8 && (2..=6).contains(&ell)
}

/// A lattice point `0 ⪯ Δ ⪯ ω_ℓ` packed into fixed-width fields, the first
/// coordinate most significant so that integer order is lexicographic order.
type Point = u128;

/// Memoized search over states (last `Δ`, provided set).
struct Search<'a> {
    rs: &'a RootSystem,
    ell: usize,
    omega: Weight,
    rank: usize,
    width: u32,
    full: u32,
    budget: usize,
    work: usize,
    /// ω-coordinates of each positive root, for pairings with `ω_ℓ − Δ`.
    root_omegas: Vec<Vec<i64>>,
    seen: FxHashSet<Point>,
    succ: FxHashMap<(Point, u32), Rc<[Point]>>,
    best: FxHashMap<(Point, u32), (i64, Option<Point>)>,
    best_degree: FxHashMap<(Point, u32, u128), (i64, Option<Point>)>,
}

impl<'a> Search<'a> {
    fn new(rs: &'a RootSystem, ell: usize) -> Result<Self> {
        rs.check_node(ell)?;
        let rank = rs.rank();
        let omega = Weight::fundamental(rank, ell);
        let top = rs.omega_to_alpha(&omega)?;
        let max = top.coords().iter().map(|c| c.floor().to_integer()).max().unwrap_or(0).max(1);
        let width = 64 - (max as u64).leading_zeros();
        if rank as u32 * width > 128 || rank > 32 {
            return Err(Error::SearchUnsupported(format!("{} is too large to pack", rs.id())));
        }
        Ok(Self {
            rs,
            ell,
            omega,
            rank,
            width,
            full: ((1u64 << rank) - 1) as u32,
            budget: 0,
            work: 0,
            root_omegas: rs.positive_roots().iter().map(|a| rs.alpha_to_omega(a).coords().to_vec()).collect(),
            seen: FxHashSet::default(),
            succ: FxHashMap::default(),
            best: FxHashMap::default(),
            best_degree: FxHashMap::default(),
        })
    }

    fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    fn shift(&self, i: usize) -> u32 {
        self.width * (self.rank - 1 - i) as u32
    }

    fn coord(&self, x: Point, i: usize) -> i64 {
        ((x >> self.shift(i)) & ((1 << self.width) - 1)) as i64
    }

    fn unit(&self, i: usize) -> Point {
        1 << self.shift(i)
    }

    fn pack(&self, v: &RootVector) -> Point {
        v.coords().iter().enumerate().fold(0, |acc, (i, &c)| acc | ((c as Point) << self.shift(i)))
    }

    fn unpack(&self, x: Point) -> RootVector {
        RootVector::new((0..self.rank).map(|i| self.coord(x, i)).collect())
    }

    fn height(&self, x: Point) -> i64 {
        (0..self.rank).map(|i| self.coord(x, i)).sum()
    }

    fn precedes(&self, a: Point, b: Point) -> bool {
        (0..self.rank).all(|i| self.coord(a, i) <= self.coord(b, i))
    }

    fn charge(&mut self, units: usize) -> Result<()> {
        self.work += units;
        if self.work > self.budget {
            Err(Error::SearchBudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    /// Provided and required masks of `Δ`, from `e_ℓ − CΔ`.
    fn masks(&self, x: Point) -> (u32, u32) {
        let mut provides = 0;
        let mut requires = 0;
        for k in 0..self.rank {
            let mut c = if k + 1 == self.ell { 1 } else { 0 };
            c -= 2 * self.coord(x, k);
            for &j in self.rs.neighbors(k) {
                c += self.coord(x, j);
            }
            if c > 0 {
                provides |= 1 << k;
            } else if c < 0 {
                requires |= 1 << k;
            }
        }
        (provides, requires)
    }

    /// Gain in `g` from stepping to `x` with `provided` already provided.
    fn step_gain(&self, x: Point, provided: u32) -> (i64, u32) {
        let (p, _) = self.masks(x);
        let fresh = p & !provided;
        let gain = 1 + (0..self.rank).filter(|k| fresh & (1 << k) != 0).map(|k| self.coord(x, k)).sum::<i64>();
        (gain, provided | p)
    }

    /// First steps worth considering: maximal `Δ ≻ 0` with `ω_ℓ − Δ`
    /// dominant.
    fn first_steps(&mut self) -> Result<Vec<Point>> {
        let below = self.rs.dominant_weights_below(&self.omega)?;
        self.charge(below.len())?;
        let found: Vec<Point> = below
            .iter()
            .filter_map(|nu| self.rs.omega_to_root(&self.omega.sub(nu)))
            .filter(|d| d.is_positive())
            .map(|d| self.pack(&d))
            .collect();
        Ok(self.maximal(found))
    }

    fn maximal(&self, mut found: Vec<Point>) -> Vec<Point> {
        found.sort_unstable();
        found.dedup();
        let keep: Vec<bool> = found
            .iter()
            .map(|&z| !found.iter().any(|&w| w != z && self.precedes(z, w)))
            .collect();
        found.into_iter().zip(keep).filter_map(|(z, k)| k.then_some(z)).collect()
    }

    /// Maximal `Δ'` with `0 ≺ Δ' ≺ Δ` whose requirements lie in `provided`.
    /// Inserting a step into a valid path-type always raises `g`, so only
    /// these can begin the continuation of an optimal one.
    fn successors(&mut self, x: Point, provided: u32) -> Result<Rc<[Point]>> {
        if let Some(s) = self.succ.get(&(x, provided)) {
            return Ok(s.clone());
        }
        let mut seen = std::mem::take(&mut self.seen);
        seen.clear();
        let mut queue = VecDeque::from([x]);
        let mut found = Vec::new();
        while let Some(y) = queue.pop_front() {
            for i in 0..self.rank {
                if self.coord(y, i) == 0 {
                    continue;
                }
                let z = y - self.unit(i);
                if z == 0 || !seen.insert(z) {
                    continue;
                }
                if self.masks(z).1 & !provided == 0 {
                    found.push(z);
                } else {
                    queue.push_back(z);
                }
            }
        }
        let visited = seen.len();
        self.seen = seen;
        self.charge(visited + 1)?;
        let out: Rc<[Point]> = self.maximal(found).into();
        self.succ.insert((x, provided), out.clone());
        Ok(out)
    }

    /// Largest further gain after reaching `x`, with the next step of a
    /// lexicographically greatest optimal continuation.
    fn best_from(&mut self, x: Point, provided: u32) -> Result<(i64, Option<Point>)> {
        if provided == self.full {
            // Nothing is left to provide: one simple root per step.
            let next = (0..self.rank)
                .rev()
                .find(|&i| self.coord(x, i) > 0)
                .map(|i| x - self.unit(i))
                .filter(|&z| z != 0);
            return Ok((self.height(x) - 1, next));
        }
        if let Some(v) = self.best.get(&(x, provided)) {
            return Ok(*v);
        }
        let mut best = (0, None);
        for &z in self.successors(x, provided)?.iter() {
            let (gain, next_provided) = self.step_gain(z, provided);
            let (rest, _) = self.best_from(z, next_provided)?;
            best = pick(best, gain + rest, z);
        }
        self.charge(1)?;
        self.best.insert((x, provided), best);
        Ok(best)
    }

    fn best_path_type(&mut self) -> Result<PathType> {
        let mut best = (0, None);
        for d in self.first_steps()? {
            let (gain, provided) = self.step_gain(d, 0);
            let (rest, _) = self.best_from(d, provided)?;
            best = pick(best, gain + rest, d);
        }
        let mut deltas = Vec::new();
        let mut provided = 0;
        let mut cur = best.1;
        while let Some(d) = cur {
            provided = self.step_gain(d, provided).1;
            cur = self.best_from(d, provided)?.1;
            deltas.push(self.unpack(d));
        }
        PathType::new(deltas)
    }

    /// The positive roots in `mask` orthogonal to `ω_ℓ − Δ` (or to `ω_ℓ`
    /// when `x` is `None`).
    fn orthogonal(&self, x: Option<Point>, mask: u128) -> u128 {
        let mut out = 0;
        for (i, a) in self.root_omegas.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            // ⟨ω_ℓ − Δ, α⟩ = α_ℓ − Σ_k Δ_k ⟨α_k, α⟩
            let mut v = self.rs.positive_roots()[i].coords()[self.ell - 1];
            if let Some(x) = x {
                v -= (0..self.rank).map(|k| self.coord(x, k) * a[k]).sum::<i64>();
            }
            if v == 0 {
                out |= 1 << i;
            }
        }
        out
    }

    /// Largest further `g` gain minus the roots still orthogonal at the end.
    fn degree_from(&mut self, x: Point, provided: u32, orth: u128) -> Result<(i64, Option<Point>)> {
        if provided == self.full && orth == 0 {
            return self.best_from(x, provided);
        }
        if let Some(v) = self.best_degree.get(&(x, provided, orth)) {
            return Ok(*v);
        }
        let mut best = (-(orth.count_ones() as i64), None);
        for &z in self.successors(x, provided)?.iter() {
            let (gain, next_provided) = self.step_gain(z, provided);
            let next_orth = self.orthogonal(Some(z), orth);
            let (rest, _) = self.degree_from(z, next_provided, next_orth)?;
            best = pick(best, gain + rest, z);
        }
        self.charge(1)?;
        self.best_degree.insert((x, provided, orth), best);
        Ok(best)
    }

    /// Exact maximum of `g + half_orbit_dim` over all valid path-types.
    fn max_degree(&mut self) -> Result<(u64, PathType)> {
        let n_roots = self.rs.positive_roots().len();
        if n_roots > 128 {
            return Err(Error::SearchUnsupported(format!("{} has more than 128 positive roots", self.rs.id())));
        }
        let all = if n_roots == 128 { u128::MAX } else { (1u128 << n_roots) - 1 };
        let orth0 = self.orthogonal(None, all);
        let mut best = (-(orth0.count_ones() as i64), None);
        for d in self.first_steps()? {
            let (gain, provided) = self.step_gain(d, 0);
            let orth = self.orthogonal(Some(d), orth0);
            let (rest, _) = self.degree_from(d, provided, orth)?;
            best = pick(best, gain + rest, d);
        }
        let total = (n_roots as i64 + best.0) as u64;
        let mut deltas = Vec::new();
        let (mut provided, mut orth) = (0, orth0);
        let mut cur = best.1;
        while let Some(d) = cur {
            provided = self.step_gain(d, provided).1;
            orth = self.orthogonal(Some(d), orth);
            cur = self.degree_from(d, provided, orth)?.1;
            deltas.push(self.unpack(d));
        }
        Ok((total, PathType::new(deltas)?))
    }
}

/// Keeps the larger value, breaking ties toward the lexicographically
/// greater step.
fn pick(cur: (i64, Option<Point>), value: i64, step: Point) -> (i64, Option<Point>) {
    let better = match cur.1 {
        None => value >= cur.0,
        Some(s) => value > cur.0 || (value == cur.0 && step > s),
    };
    if better {
        (value, Some(step))
    } else {
        cur
    }
}

/// `Σ c_i ω_i` from 1-based `(coefficient, node)` pairs.
fn weight(rank: usize, terms: &[(i64, usize)]) -> Weight {
    let mut c = vec![0; rank];
    for &(a, k) in terms {
        c[k - 1] += a;
    }
    Weight::new(c)
}

/// The explicit maximal path-types known in closed form, and the partial
/// ones for the remaining exceptional nodes completed greedily.
pub fn fixture_path_type(rs: &RootSystem, ell: usize) -> Result<Option<PathType>> {
    rs.check_node(ell)?;
    let r = rs.rank();
    let w = |terms: &[(i64, usize)]| weight(r, terms);
    let complete = |ws: Vec<Weight>| PathType::from_weights(rs, &ws).map(Some);
    match (rs.id().family(), r, ell) {
        (Family::A, _, _) => Ok(Some(PathType::default())),
        (Family::D, _, l) if l + 1 >= r => Ok(Some(PathType::default())),
        (Family::D, _, l) => {
            let start = if l % 2 == 0 { 0 } else { 1 };
            let ws = (start..l - 1)
                .step_by(2)
                .map(|j| if j == 0 { w(&[(1, l)]) } else { w(&[(1, l), (-1, j)]) })
                .collect();
            complete(ws)
        }
        (Family::E, 6, 1 | 6) | (Family::E, 7, 7) => Ok(Some(PathType::default())),
        (Family::E, 6, 4) => complete(vec![
            w(&[(1, 4)]),
            w(&[(1, 4), (-1, 2)]),
            w(&[(1, 4), (-1, 1), (-1, 6)]),
            w(&[(1, 2), (1, 4), (-1, 3), (-1, 5)]),
            w(&[(2, 2), (-1, 4)]),
        ]),
        (Family::E, 7, 3) => complete(vec![
            w(&[(1, 3)]),
            w(&[(1, 3), (-1, 1)]),
            w(&[(1, 3), (-1, 6)]),
            // ω1+ω6−ω4 would leave the positive root lattice
            w(&[(1, 1), (1, 3), (-1, 4)]),
            w(&[(2, 1), (-1, 3)]),
        ]),
        (Family::E, 7, 6) => complete(vec![w(&[(1, 6)]), w(&[(1, 6), (-1, 1)])]),
        (Family::E, 7, 4) => greedy_completion(
            rs,
            ell,
            &[w(&[(1, 4)]), w(&[(1, 4), (-1, 1)]), w(&[(1, 4), (-1, 6)]), w(&[(1, 1)])],
        )
        .map(Some),
        (Family::E, 7, 5) => greedy_completion(
            rs,
            ell,
            &[
                w(&[(1, 5), (-1, 7)]),
                w(&[(1, 5), (-1, 2)]),
                w(&[(1, 5), (1, 7), (-1, 1), (-1, 6)]),
                w(&[(1, 2), (1, 7), (-1, 3)]),
            ],
        )
        .map(Some),
        (Family::E, 8, 1) => complete(vec![w(&[(1, 1)]), w(&[(1, 1), (-1, 8)])]),
        (Family::E, 8, 7) => complete(vec![
            w(&[(1, 7)]),
            w(&[(1, 7), (-1, 8)]),
            w(&[(1, 7), (-1, 1)]),
            w(&[(1, 7), (1, 8), (-1, 6)]),
            w(&[(2, 8), (-1, 7)]),
        ]),
        (Family::E, 8, 8) => complete(vec![w(&[(1, 8)])]),
        (Family::E, 8, l) => greedy_completion(
            rs,
            ell,
            &[
                w(&[(1, l)]),
                w(&[(1, l), (-1, 8)]),
                w(&[(1, l), (-1, 1)]),
                w(&[(1, l), (-1, 6), (1, 8)]),
                w(&[(1, l), (1, 1), (-1, 4), (1, 8)]),
            ],
        )
        .map(Some),
        _ => Ok(None),
    }
}

/// Extends a valid partial path-type one simple root at a time, preferring
/// steps that provide something new, until no step is possible.
pub fn greedy_completion(rs: &RootSystem, ell: usize, seed: &[Weight]) -> Result<PathType> {
    let mut pt = PathType::from_weights(rs, seed)?;
    if !is_valid_path_type(rs, ell, &pt)? {
        return Err(Error::InvalidPathType(format!("seed {} is not valid", pt.display(rs))));
    }
    let r = rs.rank();
    let omega = Weight::fundamental(r, ell);
    let mut provided = pt.deltas.iter().fold(0u32, |acc, d| acc | masks(rs, &omega, d).0);
    while let Some(last) = pt.deltas.last().cloned() {
        let mut choice: Option<(i64, RootVector)> = None;
        for i in 0..r {
            if last.coords()[i] == 0 {
                continue;
            }
            let z = last.sub(&RootVector::simple(r, i + 1));
            let (p, q) = masks(rs, &omega, &z);
            if z.is_zero() || q & !provided != 0 {
                continue;
            }
            let fresh = (p & !provided).count_ones() as i64;
            if choice.as_ref().is_none_or(|(f, c)| fresh > *f || (fresh == *f && z > *c)) {
                choice = Some((fresh, z));
            }
        }
        let Some((_, z)) = choice else { break };
        provided |= masks(rs, &omega, &z).0;
        pt.deltas.push(z);
    }
    Ok(pt)
}

/// Result of comparing `g` with `2 ht(ω_ℓ) − c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightRelation {
    pub g: u64,
    pub height: Rational,
    pub positive_roots: usize,
    pub holds: bool,
}

/// Whether `ω_ℓ` is above the `E8` threshold `ξ`; `None` outside `E8`.
pub fn above_e8_threshold(rs: &RootSystem, ell: usize) -> Result<Option<bool>> {
    rs.check_node(ell)?;
    if !(rs.id().family() == Family::E && rs.rank() == 8) {
        return Ok(None);
    }
    let omega = rs.omega_to_root(&Weight::fundamental(8, ell)).expect("E8 weights lie in the root lattice");
    Ok(Some(RootVector::new(E8_XI.to_vec()).strictly_precedes(&omega)))
}

/// Checks `g = 2 ht(ω_ℓ) − c` with `c` the number of positive roots. Only
/// meaningful when the maximal path-type provides every fundamental weight.
pub fn height_relation(rs: &RootSystem, ell: usize, budget: usize, mode: GrowthMode) -> Result<HeightRelation> {
    let report = growth_degree(rs, ell, budget, mode)?;
    height_relation_for(rs, ell, &report)
}

/// [`height_relation`] for an already computed report.
pub fn height_relation_for(rs: &RootSystem, ell: usize, report: &GrowthReport) -> Result<HeightRelation> {
    let first = first_providers(rs, ell, &report.best_path_type)?;
    if let Some(k) = first.iter().position(Option::is_none) {
        return Err(Error::NotApplicable(format!(
            "ω{} is never provided along the maximal path-type of {} ℓ={ell}",
            k + 1,
            rs.id()
        )));
    }
    let height = rs.height_of_weight(&Weight::fundamental(rs.rank(), ell))?;
    let c = rs.positive_roots().len();
    let holds = Rational::from_integer(report.g as i64) == height * 2 - Rational::from_integer(c as i64);
    Ok(HeightRelation { g: report.g, height, positive_roots: c, holds })
}

pub fn height_relation_check(rs: &RootSystem, ell: usize) -> Result<bool> {
    Ok(height_relation(rs, ell, DEFAULT_SEARCH_BUDGET, GrowthMode::Auto)?.holds)
}
