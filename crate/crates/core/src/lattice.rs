//! Weight and root lattice arithmetic for sl_{r+1}, together with the
//! partition conversions that bridge dominant weights and Kostka indexing.
//!
//! Weights are stored in the fundamental-weight basis, roots in the
//! simple-root basis. Every value carries its rank and mixing ranks is a
//! programming error (checked, not coerced).

use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("partition too long for rank: nonzero part beyond index {limit}")]
    PartitionTooLong { limit: usize },
    #[error("parts must be weakly decreasing and non-negative")]
    NotAPartition,
    #[error("invalid {what}: {text:?}")]
    Parse { what: &'static str, text: String },
}

/// General weight `mu` in the omega-basis; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightVector {
    rank: usize,
    coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "rank must be positive");
        WeightVector {
            rank: coords.len(),
            coords,
        }
    }

    pub fn zero(rank: usize) -> Self {
        Self::new(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Value of the weight on the coroot `h_i` (1-based), i.e. the i-th
    /// omega-coordinate.
    pub fn on_coroot(&self, i: usize) -> i64 {
        assert!((1..=self.rank).contains(&i), "coroot index out of range");
        self.coords[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, rhs: &WeightVector) -> Result<WeightVector, LatticeError> {
        self.check_rank(rhs)?;
        Ok(WeightVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn checked_sub(&self, rhs: &WeightVector) -> Result<WeightVector, LatticeError> {
        self.check_rank(rhs)?;
        Ok(WeightVector::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    fn check_rank(&self, rhs: &WeightVector) -> Result<(), LatticeError> {
        if self.rank != rhs.rank {
            return Err(LatticeError::RankMismatch {
                expected: self.rank,
                found: rhs.rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Dominant weight `lambda = sum m_i omega_i` with all `m_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight {
    rank: usize,
    coeffs: Vec<i64>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self, LatticeError> {
        if coeffs.is_empty() {
            return Err(LatticeError::Parse {
                what: "weight",
                text: String::from("(empty)"),
            });
        }
        if coeffs.iter().any(|&m| m < 0) {
            return Err(LatticeError::NotAPartition);
        }
        Ok(DominantWeight {
            rank: coeffs.len(),
            coeffs,
        })
    }

    /// The i-th fundamental weight `omega_i` (1-based) at the given rank.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "fundamental index out of range");
        let mut coeffs = vec![0; rank];
        coeffs[i - 1] = 1;
        DominantWeight { rank, coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight {
            rank,
            coeffs: vec![0; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        assert!((1..=self.rank).contains(&i));
        self.coeffs[i - 1]
    }

    /// Sum of the fundamental-weight coefficients.
    pub fn level(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Total box count `sum_i i * m_i` of the associated partition.
    pub fn box_count(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, m)| (i as i64 + 1) * m)
            .sum()
    }

    pub fn weight(&self) -> WeightVector {
        WeightVector::new(self.coeffs.clone())
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DominantWeight {
    type Err = LatticeError;

    /// Parses the textual weight syntax `"m1,m2,...,mr"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs: Result<Vec<i64>, _> = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect();
        let coeffs = coeffs.map_err(|_| LatticeError::Parse {
            what: "weight",
            text: s.to_string(),
        })?;
        DominantWeight::new(coeffs)
    }
}

/// Element of the root lattice in the alpha-basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RootVector {
    rank: usize,
    coords: Vec<i64>,
}

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        assert!(!coords.is_empty(), "rank must be positive");
        RootVector {
            rank: coords.len(),
            coords,
        }
    }

    /// The root `alpha_{i,j} = alpha_i + ... + alpha_j` (1-based, i <= j).
    pub fn alpha_span(rank: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= j && j <= rank, "bad alpha_{{i,j}} indices");
        let mut coords = vec![0; rank];
        for a in i..=j {
            coords[a - 1] = 1;
        }
        RootVector { rank, coords }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Membership in the positive cone Q^+.
    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&k| k >= 0)
    }
}

/// Partition: weakly decreasing non-negative integers. Trailing zeros are
/// permitted and preserved; use [`Partition::normalized`] when a canonical
/// representative is needed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self, LatticeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last().is_some_and(|&p| p < 0) {
            return Err(LatticeError::NotAPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Number of boxes.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Drops trailing zero parts.
    pub fn normalized(&self) -> Partition {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// `n(xi) = sum (i-1) xi_i`, the standard partition statistic.
    pub fn n_stat(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, p)| i as i64 * p)
            .sum()
    }

    /// Adds a constant `c` to every one of the first `len` parts, padding
    /// with zeros as needed. Used to lift a partition inside its shift class.
    pub fn shifted(&self, c: i64, len: usize) -> Result<Partition, LatticeError> {
        let mut parts: Vec<i64> = (0..len.max(self.parts.len()))
            .map(|i| self.part(i) + c)
            .collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = LatticeError;

    /// Parses the textual partition syntax `"[3,1,1]"` (or `"[]"`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| LatticeError::Parse {
                what: "partition",
                text: s.to_string(),
            })?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<i64>, _> = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect();
        let parts = parts.map_err(|_| LatticeError::Parse {
            what: "partition",
            text: s.to_string(),
        })?;
        Partition::new(parts)
    }
}

/// Cartan matrix entry `a_{ij} = <alpha_j, h_i>` for type A (1-based).
fn cartan(i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// Re-expresses a root-lattice element in the omega-basis. Linear.
pub fn root_to_weight(rho: &RootVector) -> WeightVector {
    let r = rho.rank();
    let coords = (1..=r)
        .map(|i| (1..=r).map(|j| cartan(i, j) * rho.coords()[j - 1]).sum())
        .collect();
    WeightVector::new(coords)
}

/// The partition `xi^lambda` with `xi_i = sum_{j >= i} m_j`, length r+1 and
/// last part zero.
pub fn weight_to_partition(lambda: &DominantWeight) -> Partition {
    let r = lambda.rank();
    let mut parts = vec![0i64; r + 1];
    let mut acc = 0;
    for i in (0..r).rev() {
        acc += lambda.coeffs()[i];
        parts[i] = acc;
    }
    Partition { parts }
}

/// The dominant weight `lambda_xi = sum (xi_i - xi_{i+1}) omega_i`.
///
/// The partition is padded with zeros to length r+1; a nonzero part beyond
/// index r+1 is an error.
pub fn partition_to_weight(xi: &Partition, rank: usize) -> Result<DominantWeight, LatticeError> {
    if xi.parts().iter().skip(rank + 1).any(|&p| p != 0) {
        return Err(LatticeError::PartitionTooLong { limit: rank + 1 });
    }
    let coeffs = (0..rank).map(|i| xi.part(i) - xi.part(i + 1)).collect();
    DominantWeight::new(coeffs)
}

/// Conjugate partition: `xi^tr_i = #{j : xi_j >= i}`. The result carries no
/// trailing zeros.
pub fn transpose(xi: &Partition) -> Partition {
    let first = xi.part(0);
    let parts = (1..=first)
        .map(|i| xi.parts().iter().filter(|&&p| p >= i).count() as i64)
        .collect();
    Partition { parts }
}

/// Simple reflection `s_i(mu) = mu - mu(h_i) alpha_i` (1-based index).
pub fn simple_reflection(i: usize, mu: &WeightVector) -> WeightVector {
    let r = mu.rank();
    assert!((1..=r).contains(&i), "reflection index out of range");
    let c = mu.on_coroot(i);
    let coords = (1..=r)
        .map(|j| mu.coords()[j - 1] - c * cartan(j, i))
        .collect();
    WeightVector::new(coords)
}

/// Expresses a weight in the alpha-basis if it lies in the root lattice.
///
/// Uses the inverse type-A Cartan matrix `min(i,j) - ij/(r+1)` scaled by
/// `r+1` to stay in integers; returns `None` when the coordinates are not
/// integral.
pub fn weight_to_root(mu: &WeightVector) -> Option<RootVector> {
    let r = mu.rank() as i64;
    let mut coords = Vec::with_capacity(mu.rank());
    for j in 1..=r {
        let mut num = 0i64;
        for (idx, &c) in mu.coords().iter().enumerate() {
            let i = idx as i64 + 1;
            num += i.min(j) * (r + 1 - i.max(j)) * c;
        }
        if num % (r + 1) != 0 {
            return None;
        }
        coords.push(num / (r + 1));
    }
    Some(RootVector::new(coords))
}

/// Dominance order test: `a >= b` iff `a - b` is a non-negative integer
/// combination of simple roots.
pub fn dominates(a: &WeightVector, b: &WeightVector) -> bool {
    let diff = a
        .checked_sub(b)
        .expect("dominance comparison requires equal ranks");
    weight_to_root(&diff).is_some_and(|rho| rho.is_nonnegative())
}
