//! Gelfand-Tsetlin pattern enumeration. Patterns drive both the classical
//! character of V(lambda) (by recursive branching down to rank zero) and
//! the branching test for the restriction to the next-smaller general
//! linear subalgebra.

use crate::lattice::{weight_to_partition, DominantWeight, Partition, WeightVector};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;

/// Triangular array with rows of lengths `n, n-1, ..., 1`, consecutive rows
/// interlacing: `upper_i >= lower_i >= upper_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GTPattern {
    rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Option<Self> {
        let p = GTPattern { rows };
        p.is_valid().then_some(p)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn is_valid(&self) -> bool {
        let n = self.rows.len();
        if n == 0 {
            return false;
        }
        for (k, row) in self.rows.iter().enumerate() {
            if row.len() != n - k {
                return false;
            }
            if row.windows(2).any(|w| w[0] < w[1]) || row.last().is_some_and(|&v| v < 0) {
                return false;
            }
        }
        for k in 0..n - 1 {
            let upper = &self.rows[k];
            let lower = &self.rows[k + 1];
            for i in 0..lower.len() {
                if !(upper[i] >= lower[i] && lower[i] >= upper[i + 1]) {
                    return false;
                }
            }
        }
        true
    }

    /// Eigenvalues of the diagonal matrix units: successive row-sum
    /// differences, indexed from the length-1 row upward.
    pub fn gl_weight(&self) -> Vec<i64> {
        let n = self.rows.len();
        let mut sums = vec![0i64; n + 1];
        for (k, row) in self.rows.iter().enumerate() {
            sums[n - k] = row.iter().sum();
        }
        (1..=n).map(|k| sums[k] - sums[k - 1]).collect()
    }

    /// The sl-weight in the omega-basis: differences of consecutive
    /// diagonal eigenvalues.
    pub fn sl_weight(&self) -> WeightVector {
        let w = self.gl_weight();
        WeightVector::new((0..w.len() - 1).map(|i| w[i] - w[i + 1]).collect())
    }
}

fn interlacing_rows(upper: &[i64]) -> Vec<Vec<i64>> {
    fn rec(upper: &[i64], pos: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if pos + 1 == upper.len() {
            out.push(cur.clone());
            return;
        }
        for v in upper[pos + 1]..=upper[pos] {
            cur.push(v);
            rec(upper, pos + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if upper.len() > 1 {
        rec(upper, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Visits every pattern with the given top row.
pub fn for_each_gt_pattern<F>(top: &[i64], mut f: F)
where
    F: FnMut(&GTPattern),
{
    fn rec<F: FnMut(&GTPattern)>(rows: &mut Vec<Vec<i64>>, f: &mut F) {
        let last = rows.last().expect("non-empty");
        if last.len() == 1 {
            f(&GTPattern { rows: rows.clone() });
            return;
        }
        for next in interlacing_rows(&last.clone()) {
            rows.push(next);
            rec(rows, f);
            rows.pop();
        }
    }
    assert!(!top.is_empty());
    let mut rows = vec![top.to_vec()];
    rec(&mut rows, &mut f);
}

pub fn enum_gt_patterns(top: &[i64]) -> Vec<GTPattern> {
    let mut out = Vec::new();
    for_each_gt_pattern(top, |p| out.push(p.clone()));
    out
}

/// Weight multiplicities of V(lambda) by pattern enumeration over the
/// shape `xi^lambda`.
pub(crate) fn gt_weight_multiplicities(
    lambda: &DominantWeight,
) -> BTreeMap<WeightVector, BigUint> {
    let xi = weight_to_partition(lambda);
    let mut table = BTreeMap::new();
    for_each_gt_pattern(xi.parts(), |p| {
        *table
            .entry(p.sl_weight())
            .or_insert_with(|| BigUint::from(0u32)) += 1u32;
    });
    table
}

/// Dimension of V(lambda) by the type-A product formula
/// `prod_{i<=j} (m_i + ... + m_j + j - i + 1) / (j - i + 1)`.
pub fn weyl_dim(lambda: &DominantWeight) -> BigUint {
    let r = lambda.rank();
    let mut acc = BigRational::one();
    for i in 0..r {
        let mut run = 0i64;
        for j in i..r {
            run += lambda.coeffs()[j];
            let span = (j - i + 1) as i64;
            acc *= BigRational::new(BigInt::from(run + span), BigInt::from(span));
        }
    }
    assert!(acc.is_integer(), "dimension formula must be integral");
    acc.to_integer()
        .to_biguint()
        .expect("dimension is positive")
}

/// The number of interlacing rows below `xi`, i.e. the branching
/// multiplicity total for one restriction step.
pub fn branching_count(xi: &Partition) -> usize {
    interlacing_rows(xi.parts()).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dom(coeffs: &[i64]) -> DominantWeight {
        DominantWeight::new(coeffs.to_vec()).unwrap()
    }

    fn w(coords: &[i64]) -> WeightVector {
        WeightVector::new(coords.to_vec())
    }

    #[test]
    fn defining_rep_weights() {
        let table = gt_weight_multiplicities(&dom(&[1, 0]));
        assert_eq!(table.len(), 3);
        for key in [w(&[1, 0]), w(&[-1, 1]), w(&[0, -1])] {
            assert_eq!(table.get(&key), Some(&BigUint::from(1u32)));
        }
    }

    #[test]
    fn adjoint_weights() {
        let table = gt_weight_multiplicities(&dom(&[1, 1]));
        let total: BigUint = table.values().sum();
        assert_eq!(total, BigUint::from(8u32));
        assert_eq!(table.get(&w(&[0, 0])), Some(&BigUint::from(2u32)));
        let nonzero_mults: Vec<_> = table
            .iter()
            .filter(|(k, _)| **k != w(&[0, 0]))
            .map(|(_, v)| v.clone())
            .collect();
        assert_eq!(nonzero_mults.len(), 6);
        assert!(nonzero_mults.iter().all(|m| *m == BigUint::from(1u32)));
    }

    #[test]
    fn sl2_strings() {
        for n in 0..=6i64 {
            let table = gt_weight_multiplicities(&dom(&[n]));
            assert_eq!(table.len() as i64, n + 1);
            assert!(table.values().all(|m| *m == BigUint::from(1u32)));
            for c in (-n..=n).step_by(2) {
                assert!(table.contains_key(&w(&[c])));
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&dom(&[1, 1])), BigUint::from(8u32));
        assert_eq!(weyl_dim(&dom(&[0, 1, 0])), BigUint::from(6u32));
        assert_eq!(weyl_dim(&dom(&[0, 0, 0])), BigUint::from(1u32));
        assert_eq!(weyl_dim(&dom(&[2, 0])), BigUint::from(6u32));
    }

    #[test]
    fn pattern_count_is_dimension() {
        for lam in [dom(&[1, 1]), dom(&[2, 1]), dom(&[1, 0, 1]), dom(&[0, 2, 0])] {
            let total: BigUint = gt_weight_multiplicities(&lam).values().sum();
            assert_eq!(total, weyl_dim(&lam), "mass mismatch at {lam}");
        }
    }

    #[test]
    fn interlacing_validation() {
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![2, 0], vec![1]]).is_some());
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![3, 0], vec![1]]).is_none());
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![2, 0], vec![3]]).is_none());
    }

    #[test]
    fn branching_counts_match_theorem() {
        // restriction of the shape (2,1,0) yields 4 interlacing rows
        let xi = Partition::new(vec![2, 1, 0]).unwrap();
        assert_eq!(branching_count(&xi), 4);
    }
}
