//! Simply-laced root systems in Bourbaki numbering.
//!
//! Weights are stored by their coordinates in the fundamental-weight basis
//! and root-lattice elements by their coordinates in the simple-root basis.
//! The two are related by the Cartan matrix: `α_j = Σ_i c_ij ω_i`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::count::{Count, ProductRatio};
use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// A simply-laced Dynkin type such as `E6` or `D4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    family: Family,
    rank: usize,
}

impl AlgebraId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidAlgebra(format!("{family:?}{rank}")))
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the Dynkin diagram as 1-based node pairs.
    fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        match self.family {
            Family::A => (1..r).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (1..r.saturating_sub(2)).map(|i| (i, i + 1)).collect();
                e.push((r - 2, r - 1));
                e.push((r - 2, r));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (2, 4)];
                e.extend((3..r).map(|i| (i, i + 1)));
                e
            }
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAlgebra(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        AlgebraId::new(family, rank).map_err(|_| bad())
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    /// `ω_node`, with `node` 1-based.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// All ω-coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Weight {
    /// Renders as a sum of fundamental weights, e.g. `2ω1+ω6` or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "ω{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// An element of the root lattice in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn simple(rank: usize, node: usize) -> Self {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Nonnegative integer coordinates, i.e. `self ⪰ 0`.
    pub fn in_positive_root_lattice(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `self ≻ 0`: nonzero and in the positive root lattice.
    pub fn is_positive(&self) -> bool {
        self.in_positive_root_lattice() && !self.is_zero()
    }

    /// Coordinatewise `self ⪯ other`.
    pub fn precedes_eq(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ≺ other`: coordinatewise below and distinct.
    pub fn strictly_precedes(&self, other: &RootVector) -> bool {
        self.precedes_eq(other) && self != other
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> RootVector {
        RootVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn to_rational(&self) -> RationalRootVector {
        RationalRootVector(self.0.iter().map(|&a| Rational::from_integer(a)).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Simple-root coordinates that may be fractional, as for weights outside
/// the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalRootVector(Vec<Rational>);

impl RationalRootVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn height(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn in_positive_root_lattice(&self) -> bool {
        self.0.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn to_integral(&self) -> Option<RootVector> {
        self.is_integral()
            .then(|| RootVector(self.0.iter().map(|c| c.to_integer()).collect()))
    }
}

impl fmt::Display for RationalRootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `Σ_k w_k v_k`, the pairing of a weight with a root-lattice vector under
/// the normalization `⟨ω_i, α_j⟩ = δ_ij`.
pub fn inner(w: &Weight, v: &RootVector) -> i64 {
    w.0.iter().zip(&v.0).map(|(a, b)| a * b).sum()
}

pub fn inner_rational(w: &Weight, v: &RationalRootVector) -> Rational {
    w.0.iter().zip(&v.0).map(|(&a, b)| b * a).sum()
}

/// Dynkin datum together with the derived root data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    id: AlgebraId,
    cartan: Vec<Vec<i64>>,
    inv_cartan: Vec<Vec<Rational>>,
    positive_roots: Vec<RootVector>,
    neighbors: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn new(id: AlgebraId) -> Self {
        let r = id.rank();
        let mut cartan = vec![vec![0i64; r]; r];
        let mut neighbors = vec![Vec::new(); r];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in id.edges() {
            cartan[a - 1][b - 1] = -1;
            cartan[b - 1][a - 1] = -1;
            neighbors[a - 1].push(b - 1);
            neighbors[b - 1].push(a - 1);
        }
        for n in &mut neighbors {
            n.sort_unstable();
        }
        let inv_cartan = invert(&cartan);
        let mut rs = Self { id, cartan, inv_cartan, positive_roots: Vec::new(), neighbors };
        rs.positive_roots = rs.generate_positive_roots();
        rs
    }

    /// Parses an algebra name such as `E6` and builds its root system.
    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(name.parse()?))
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank()
    }

    /// Cartan entry `c_ij`, 0-based.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inverse_cartan(&self) -> &[Vec<Rational>] {
        &self.inv_cartan
    }

    /// 0-based Dynkin neighbors of 0-based node `j`.
    pub fn neighbors(&self, j: usize) -> &[usize] {
        &self.neighbors[j]
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// The Weyl vector, all ones in ω-coordinates.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn fundamental_weight(&self, node: usize) -> Result<Weight> {
        self.check_node(node)?;
        Ok(Weight::fundamental(self.rank(), node))
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if (1..=self.rank()).contains(&node) {
            Ok(())
        } else {
            Err(Error::InvalidNode { node, rank: self.rank() })
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len == self.rank() {
            Ok(())
        } else {
            Err(Error::LengthMismatch { expected: self.rank(), got: len })
        }
    }

    /// ω-coordinates of a root-lattice vector (multiplication by the Cartan
    /// matrix).
    pub fn alpha_to_omega(&self, v: &RootVector) -> Weight {
        debug_assert_eq!(v.rank(), self.rank());
        Weight(
            self.cartan
                .iter()
                .map(|row| row.iter().zip(&v.0).map(|(c, a)| c * a).sum())
                .collect(),
        )
    }

    pub fn try_alpha_to_omega(&self, v: &RootVector) -> Result<Weight> {
        self.check_len(v.rank())?;
        Ok(self.alpha_to_omega(v))
    }

    pub fn rational_alpha_to_omega(&self, v: &RationalRootVector) -> Result<Vec<Rational>> {
        self.check_len(v.0.len())?;
        Ok(self
            .cartan
            .iter()
            .map(|row| row.iter().zip(&v.0).map(|(&c, a)| a * c).sum())
            .collect())
    }

    /// α-coordinates of a weight (multiplication by the inverse Cartan
    /// matrix).
    pub fn omega_to_alpha(&self, w: &Weight) -> Result<RationalRootVector> {
        self.check_len(w.rank())?;
        Ok(RationalRootVector(
            self.inv_cartan
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(c, &a)| c * a).sum())
                .collect(),
        ))
    }

    /// α-coordinates of a weight known to lie in the root lattice.
    pub fn omega_to_root(&self, w: &Weight) -> Option<RootVector> {
        self.omega_to_alpha(w).ok()?.to_integral()
    }

    pub fn height_of_weight(&self, w: &Weight) -> Result<Rational> {
        Ok(self.omega_to_alpha(w)?.height())
    }

    /// Dimension of the irreducible module with highest weight `w`, by the
    /// Weyl dimension formula.
    pub fn weyl_dimension<C: Count>(&self, w: &Weight) -> Result<C> {
        self.check_len(w.rank())?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        let shifted = w.add(&self.rho());
        let mut acc = ProductRatio::new();
        for alpha in &self.positive_roots {
            acc.push(inner(&shifted, alpha), alpha.height())?;
        }
        Ok(acc.finish().expect("Weyl dimension formula yields an integer"))
    }

    /// All dominant `μ ⪯ w`, in ascending lexicographic order of
    /// ω-coordinates.
    pub fn dominant_weights_below(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check_len(w.rank())?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        let root_omegas: Vec<Weight> =
            self.positive_roots.iter().map(|a| self.alpha_to_omega(a)).collect();
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(mu) = queue.pop_front() {
            for a in &root_omegas {
                let nu = mu.sub(a);
                if nu.is_dominant() && !seen.contains(&nu) {
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    fn generate_positive_roots(&self) -> Vec<RootVector> {
        let r = self.rank();
        let mut known: HashSet<RootVector> = HashSet::new();
        let mut level: Vec<RootVector> = (1..=r).map(|j| RootVector::simple(r, j)).collect();
        known.extend(level.iter().cloned());
        let mut all = level.clone();
        while !level.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &level {
                let pairing = self.alpha_to_omega(beta);
                for j in 0..r {
                    // α_j-string through β: p - q = ⟨β, α_j^∨⟩.
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[j] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - pairing.0[j];
                    if q > 0 {
                        let mut up = beta.clone();
                        up.0[j] += 1;
                        if !known.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            level = next.into_iter().collect();
            known.extend(level.iter().cloned());
            all.extend(level.iter().cloned());
        }
        all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
        all
    }

    /// Expected number of positive roots from the classification.
    pub fn expected_positive_root_count(id: AlgebraId) -> usize {
        let r = id.rank();
        match (id.family(), r) {
            (Family::A, _) => r * (r + 1) / 2,
            (Family::D, _) => r * (r - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, 8) => 120,
            _ => unreachable!("validated by AlgebraId::new"),
        }
    }
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| Rational::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrices of finite type are invertible");
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}
