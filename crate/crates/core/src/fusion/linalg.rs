//! Dense exact-rational vectors, matrices, and row-reduced echelon bases.
//! Membership of a new vector in a span is decided by exact elimination,
//! never by numerical rank.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Rat) {
        let i = r * self.cols + c;
        self.data[i] = &self.data[i] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn scaled(&self, s: &Rat) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = RatMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &RatMatrix) -> RatMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Row-reduced basis of a subspace, rows kept sorted by pivot column with
/// unit pivots. Inserting reduces the candidate against the current rows
/// only (rows already stored are never rewritten), so the span of the rows
/// inserted up to any point in time is exactly the space seen so far.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [Rat]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (i, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[i] = &v[i] - &(&c * x);
                }
            }
        }
    }

    /// Attempts to insert `v`; returns the normalized residue when `v` was
    /// independent of the current span.
    pub fn try_insert(&mut self, mut v: Vec<Rat>) -> Option<Vec<Rat>> {
        assert_eq!(v.len(), self.dim);
        self.reduce(&mut v);
        let pivot = v.iter().position(|x| !x.is_zero())?;
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x / &lead;
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |(p, _)| *p)
            .expect_err("pivot must be new after reduction");
        self.rows.insert(pos, (pivot, v.clone()));
        Some(v)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecr(vals: &[i64]) -> Vec<Rat> {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn echelon_insert_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.try_insert(vecr(&[2, 0, 4])).is_some());
        assert!(e.try_insert(vecr(&[1, 0, 2])).is_none());
        assert!(e.try_insert(vecr(&[0, 3, 0])).is_some());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&vecr(&[3, 6, 6])));
        assert!(!e.contains(&vecr(&[0, 0, 1])));
    }

    #[test]
    fn matrix_commutator() {
        // [E12, E21] = E11 - E22 in the 2x2 matrix algebra
        let mut e12 = RatMatrix::zero(2, 2);
        e12.set(0, 1, rat(1));
        let mut e21 = RatMatrix::zero(2, 2);
        e21.set(1, 0, rat(1));
        let mut h = RatMatrix::zero(2, 2);
        h.set(0, 0, rat(1));
        h.set(1, 1, rat(-1));
        assert_eq!(e12.commutator(&e21), h);
    }

    #[test]
    fn mul_vec_basics() {
        let mut m = RatMatrix::zero(2, 3);
        m.set(0, 0, rat(1));
        m.set(0, 2, rat(2));
        m.set(1, 1, rat(-1));
        assert_eq!(m.mul_vec(&vecr(&[1, 1, 1])), vecr(&[3, -1]));
    }
}
